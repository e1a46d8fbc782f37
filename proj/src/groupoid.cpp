#include "gpdkit/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "gpdkit/errors.hpp"

namespace gpdkit {

  ConcreteGroupoid::ConcreteGroupoid(std::vector<std::string> objects,
                                     std::vector<Morphism>    morphisms,
                                     std::vector<int>         compose,
                                     std::vector<int>         identities,
                                     std::vector<int>         inverses)
      : _objects(std::move(objects)),
        _morphisms(std::move(morphisms)),
        _compose(std::move(compose)),
        _identities(std::move(identities)),
        _inverses(std::move(inverses)) {
    std::size_t const n = _objects.size();
    std::size_t const m = _morphisms.size();
    if (_compose.size() != m * m || _identities.size() != n
        || _inverses.size() != m) {
      throw StructuralError("groupoid tables have inconsistent sizes");
    }
    auto in_range = [](int v, std::size_t bound) {
      return v == kNone || (v >= 0 && static_cast<std::size_t>(v) < bound);
    };
    for (auto const& f : _morphisms) {
      if (f.src < 0 || f.dst < 0 || static_cast<std::size_t>(f.src) >= n
          || static_cast<std::size_t>(f.dst) >= n) {
        throw StructuralError("morphism '" + f.id
                              + "' has an endpoint out of range");
      }
    }
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t f = 0; f < m; ++f) {
        int const gf = _compose[g * m + f];
        if (!in_range(gf, m)) {
          throw StructuralError("composition entry out of range");
        }
        if (gf != kNone && _morphisms[f].dst != _morphisms[g].src) {
          throw StructuralError("composite defined on non-composable pair ("
                                + _morphisms[g].id + ", " + _morphisms[f].id
                                + ")");
        }
      }
    }
    for (int v : _identities) {
      if (!in_range(v, m)) {
        throw StructuralError("identity entry out of range");
      }
    }
    for (int v : _inverses) {
      if (!in_range(v, m)) {
        throw StructuralError("inverse entry out of range");
      }
    }
    index();
  }

  void ConcreteGroupoid::index() {
    std::set<std::string_view> seen;
    for (auto const& x : _objects) {
      if (!seen.insert(x).second) {
        throw StructuralError("duplicate object identifier '" + x + "'");
      }
    }
    seen.clear();
    for (auto const& f : _morphisms) {
      if (!seen.insert(f.id).second) {
        throw StructuralError("duplicate morphism identifier '" + f.id + "'");
      }
    }
    std::size_t const n = _objects.size();
    _hom.assign(n * n, {});
    for (std::size_t f = 0; f < _morphisms.size(); ++f) {
      _hom[_morphisms[f].src * n + _morphisms[f].dst].push_back(
          static_cast<int>(f));
    }
  }

  ConcreteGroupoid ConcreteGroupoid::from_tables(
      std::vector<std::string> const&           objects,
      std::vector<MorphismSpec> const&          morphisms,
      std::vector<ComposeEntry> const&          compose,
      std::map<std::string, std::string> const& identities,
      std::map<std::string, std::string> const& inverses) {
    std::unordered_map<std::string, int> obj_index, mor_index;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (!obj_index.emplace(objects[i], static_cast<int>(i)).second) {
        throw StructuralError("duplicate object identifier '" + objects[i]
                              + "'");
      }
    }
    auto object_of = [&](std::string const& id, std::string const& ctx) {
      auto it = obj_index.find(id);
      if (it == obj_index.end()) {
        throw StructuralError(ctx + ": unknown object '" + id + "'");
      }
      return it->second;
    };
    std::vector<Morphism> mors;
    for (auto const& spec : morphisms) {
      if (!mor_index.emplace(spec.id, static_cast<int>(mors.size())).second) {
        throw StructuralError("duplicate morphism identifier '" + spec.id
                              + "'");
      }
      mors.push_back({spec.id,
                      object_of(spec.src, "morphism '" + spec.id + "'"),
                      object_of(spec.dst, "morphism '" + spec.id + "'")});
    }
    auto morphism_of = [&](std::string const& id, std::string const& ctx) {
      auto it = mor_index.find(id);
      if (it == mor_index.end()) {
        throw StructuralError(ctx + ": unknown morphism '" + id + "'");
      }
      return it->second;
    };

    std::size_t const      m = mors.size();
    std::vector<int>       table(m * m, kNone);
    std::vector<Violation> anomalies;
    for (auto const& e : compose) {
      int const g  = morphism_of(e.g, "composition entry");
      int const f  = morphism_of(e.f, "composition entry");
      int const gf = morphism_of(e.gf, "composition entry");
      if (mors[f].dst != mors[g].src) {
        anomalies.push_back(
            {"composite defined on non-composable pair", {e.g, e.f}});
        continue;
      }
      int& slot = table[static_cast<std::size_t>(g) * m + f];
      if (slot != kNone && slot != gf) {
        throw StructuralError("composition table lists two composites for ("
                              + e.g + ", " + e.f + ")");
      }
      slot = gf;
    }
    std::vector<int> ids(objects.size(), kNone);
    for (auto const& [x, f] : identities) {
      ids[object_of(x, "identities")] = morphism_of(f, "identities");
    }
    std::vector<int> invs(m, kNone);
    for (auto const& [f, g] : inverses) {
      invs[morphism_of(f, "inverses")] = morphism_of(g, "inverses");
    }
    ConcreteGroupoid out;
    out._objects         = objects;
    out._morphisms       = std::move(mors);
    out._compose         = std::move(table);
    out._identities      = std::move(ids);
    out._inverses        = std::move(invs);
    out._input_anomalies = std::move(anomalies);
    out.index();
    return out;
  }

  std::optional<int> ConcreteGroupoid::find_object(std::string_view id) const {
    auto it = std::find(_objects.begin(), _objects.end(), id);
    if (it == _objects.end()) {
      return std::nullopt;
    }
    return static_cast<int>(it - _objects.begin());
  }

  std::optional<int> ConcreteGroupoid::find_morphism(
      std::string_view id) const {
    auto it = std::find_if(_morphisms.begin(),
                           _morphisms.end(),
                           [&](Morphism const& f) { return f.id == id; });
    if (it == _morphisms.end()) {
      return std::nullopt;
    }
    return static_cast<int>(it - _morphisms.begin());
  }

  ValidationReport ConcreteGroupoid::validate() const {
    ValidationReport  report;
    auto&             out = report.violations;
    std::size_t const m   = num_morphisms();
    auto              id  = [&](int f) { return _morphisms[f].id; };

    out = _input_anomalies;

    bool composition_total = true;
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t f = 0; f < m; ++f) {
        if (dst(f) != src(g)) {
          continue;
        }
        int const gf = compose(g, f);
        if (gf == kNone) {
          out.push_back({"missing composite", {id(g), id(f)}});
          composition_total = false;
        } else if (src(gf) != src(f) || dst(gf) != dst(g)) {
          out.push_back({"composite has wrong endpoints", {id(g), id(f), id(gf)}});
          composition_total = false;
        }
      }
    }

    for (std::size_t x = 0; x < num_objects(); ++x) {
      int const e = _identities[x];
      if (e == kNone) {
        out.push_back({"missing identity", {_objects[x]}});
        continue;
      }
      if (src(e) != static_cast<int>(x) || dst(e) != static_cast<int>(x)) {
        out.push_back({"identity is not a loop at its object", {id(e)}});
        continue;
      }
      for (std::size_t f = 0; f < m; ++f) {
        if ((src(f) == static_cast<int>(x) && compose(f, e) != static_cast<int>(f))
            || (dst(f) == static_cast<int>(x)
                && compose(e, f) != static_cast<int>(f))) {
          out.push_back({"identity law", {id(e), id(f)}});
        }
      }
    }

    for (std::size_t f = 0; f < m; ++f) {
      int const g = _inverses[f];
      if (g == kNone) {
        out.push_back({"missing inverse", {id(f)}});
        continue;
      }
      int const ids = _identities[src(f)], idd = _identities[dst(f)];
      if (src(g) != dst(f) || dst(g) != src(f) || compose(g, f) != ids
          || compose(f, g) != idd || ids == kNone || idd == kNone) {
        out.push_back({"inverse law", {id(f), id(g)}});
      }
    }

    if (composition_total) {
      for (std::size_t f = 0; f < m; ++f) {
        for (std::size_t g = 0; g < m; ++g) {
          int const gf = compose(g, f);
          if (gf == kNone) {
            continue;
          }
          for (std::size_t h = 0; h < m; ++h) {
            int const hg = compose(h, g);
            if (hg == kNone) {
              continue;
            }
            if (compose(h, gf) != compose(hg, f)) {
              out.push_back({"associativity", {id(h), id(g), id(f)}});
            }
          }
        }
      }
    }
    return report;
  }

  bool GroupoidFunctor::operator==(GroupoidFunctor const& that) const {
    return on_objects == that.on_objects && on_morphisms == that.on_morphisms
           && (source == that.source || *source == *that.source)
           && (target == that.target || *target == *that.target);
  }

  ValidationReport validate_functor(GroupoidFunctor const& F) {
    ValidationReport r;
    auto const&      A = *F.source;
    auto const&      B = *F.target;
    if (F.on_objects.size() != A.num_objects()
        || F.on_morphisms.size() != A.num_morphisms()) {
      r.violations.push_back({"functor maps have wrong size", {}});
      return r;
    }
    for (int y : F.on_objects) {
      if (y < 0 || static_cast<std::size_t>(y) >= B.num_objects()) {
        r.violations.push_back({"object image out of range", {}});
        return r;
      }
    }
    for (int g : F.on_morphisms) {
      if (g < 0 || static_cast<std::size_t>(g) >= B.num_morphisms()) {
        r.violations.push_back({"morphism image out of range", {}});
        return r;
      }
    }
    for (std::size_t f = 0; f < A.num_morphisms(); ++f) {
      int const g = F.on_morphisms[f];
      if (B.src(g) != F.on_objects[A.src(f)]
          || B.dst(g) != F.on_objects[A.dst(f)]) {
        r.violations.push_back(
            {"endpoints not preserved", {A.morphism(f).id, B.morphism(g).id}});
      }
    }
    for (std::size_t x = 0; x < A.num_objects(); ++x) {
      if (F.on_morphisms[A.identity(x)] != B.identity(F.on_objects[x])) {
        r.violations.push_back({"identity not preserved", {A.object(x)}});
      }
    }
    if (!r.ok()) {
      return r;
    }
    for (std::size_t g = 0; g < A.num_morphisms(); ++g) {
      for (std::size_t f = 0; f < A.num_morphisms(); ++f) {
        int const gf = A.compose(g, f);
        if (gf != kNone
            && F.on_morphisms[gf]
                   != B.compose(F.on_morphisms[g], F.on_morphisms[f])) {
          r.violations.push_back({"composition not preserved",
                                  {A.morphism(g).id, A.morphism(f).id}});
        }
      }
    }
    return r;
  }

  GroupoidFunctor identity_functor(GroupoidPtr g) {
    GroupoidFunctor F;
    F.on_objects.resize(g->num_objects());
    F.on_morphisms.resize(g->num_morphisms());
    std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
    std::iota(F.on_morphisms.begin(), F.on_morphisms.end(), 0);
    F.source = g;
    F.target = std::move(g);
    return F;
  }

  GroupoidFunctor compose(GroupoidFunctor const& G, GroupoidFunctor const& F) {
    if (!(F.target == G.source || *F.target == *G.source)) {
      throw PreconditionError("functors are not composable");
    }
    GroupoidFunctor H{F.source, G.target, {}, {}};
    for (int x : F.on_objects) {
      H.on_objects.push_back(G.on_objects[x]);
    }
    for (int f : F.on_morphisms) {
      H.on_morphisms.push_back(G.on_morphisms[f]);
    }
    return H;
  }

  ConnectedComponents connected_components(ConcreteGroupoid const& g) {
    std::size_t const n = g.num_objects();
    std::vector<int>  parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& f : g.morphisms()) {
      int a = find(f.src), b = find(f.dst);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    ConnectedComponents cc;
    cc.component.assign(n, kNone);
    std::vector<int> root_class(n, kNone);
    for (std::size_t x = 0; x < n; ++x) {
      int const r = find(static_cast<int>(x));
      if (root_class[r] == kNone) {
        root_class[r] = static_cast<int>(cc.classes.size());
        cc.classes.emplace_back();
        cc.base.push_back(static_cast<int>(x));
      }
      cc.component[x] = root_class[r];
      cc.classes[root_class[r]].push_back(static_cast<int>(x));
    }
    return cc;
  }

  VertexGroup vertex_group(ConcreteGroupoid const& g, int x) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.num_objects()) {
      throw PreconditionError("vertex_group: unknown object index "
                              + std::to_string(x));
    }
    VertexGroup vg;
    vg.base_object = x;
    auto loops     = g.hom(x, x);
    vg.elements.assign(loops.begin(), loops.end());
    // Put the identity first.
    auto it = std::find(vg.elements.begin(), vg.elements.end(), g.identity(x));
    if (it != vg.elements.end()) {
      std::rotate(vg.elements.begin(), it, it + 1);
    }
    std::size_t const n = vg.order();
    std::unordered_map<int, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
      pos[vg.elements[i]] = i;
    }
    vg.table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        vg.table[i * n + j] = pos.at(g.compose(vg.elements[i], vg.elements[j]));
      }
    }
    return vg;
  }

  VertexGroup vertex_group(ConcreteGroupoid const& g, std::string_view x) {
    auto i = g.find_object(x);
    if (!i) {
      throw PreconditionError("vertex_group: unknown object '" + std::string(x)
                              + "'");
    }
    return vertex_group(g, *i);
  }

  bool is_cofibration(GroupoidFunctor const& F) {
    std::set<int> seen(F.on_objects.begin(), F.on_objects.end());
    return seen.size() == F.on_objects.size();
  }

  EquivalenceReport equivalence_report(GroupoidFunctor const& F) {
    EquivalenceReport r;
    auto const&       A = *F.source;
    auto const&       B = *F.target;
    for (std::size_t x = 0; x < A.num_objects() && (r.full || r.faithful);
         ++x) {
      for (std::size_t y = 0; y < A.num_objects(); ++y) {
        auto const    src_hom = A.hom(x, y);
        auto const    dst_hom = B.hom(F.on_objects[x], F.on_objects[y]);
        std::set<int> image;
        for (int f : src_hom) {
          image.insert(F.on_morphisms[f]);
        }
        if (r.faithful && image.size() != src_hom.size()) {
          r.faithful = false;
          r.witnesses.push_back("not faithful: Hom(" + A.object(x) + ", "
                                + A.object(y) + ") is not mapped injectively");
        }
        if (r.full && image.size() != dst_hom.size()) {
          r.full = false;
          r.witnesses.push_back("not full: Hom(" + B.object(F.on_objects[x])
                                + ", " + B.object(F.on_objects[y])
                                + ") is not hit entirely");
        }
      }
    }
    auto const        cc = connected_components(B);
    std::vector<bool> hit(cc.count(), false);
    for (int y : F.on_objects) {
      hit[cc.component[y]] = true;
    }
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
      if (!hit[cc.component[y]]) {
        r.essentially_surjective = false;
        r.witnesses.push_back("not essentially surjective: object "
                              + B.object(y) + " is not isomorphic to an image");
        break;
      }
    }
    return r;
  }

  ConcreteGroupoid full_subgroupoid(ConcreteGroupoid const& g,
                                    std::vector<int> const& objects) {
    std::vector<int> obj_pos(g.num_objects(), kNone);
    std::vector<std::string> names;
    for (int x : objects) {
      obj_pos[x] = static_cast<int>(names.size());
      names.push_back(g.object(x));
    }
    std::vector<int>      mor_pos(g.num_morphisms(), kNone);
    std::vector<int>      keep;
    std::vector<Morphism> mors;
    for (std::size_t f = 0; f < g.num_morphisms(); ++f) {
      if (obj_pos[g.src(f)] != kNone && obj_pos[g.dst(f)] != kNone) {
        mor_pos[f] = static_cast<int>(keep.size());
        keep.push_back(static_cast<int>(f));
        mors.push_back(
            {g.morphism(f).id, obj_pos[g.src(f)], obj_pos[g.dst(f)]});
      }
    }
    std::size_t const k = keep.size();
    std::vector<int>  table(k * k, kNone);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        int const ab = g.compose(keep[a], keep[b]);
        if (ab != kNone) {
          table[a * k + b] = mor_pos[ab];
        }
      }
    }
    std::vector<int> ids, invs;
    for (int x : objects) {
      ids.push_back(mor_pos[g.identity(x)]);
    }
    for (int f : keep) {
      invs.push_back(mor_pos[g.inverse(f)]);
    }
    return ConcreteGroupoid(names, mors, table, ids, invs);
  }

  GroupoidFunctor inclusion_of_full_subgroupoid(GroupoidPtr             g,
                                                std::vector<int> const& objects) {
    auto sub = share(full_subgroupoid(*g, objects));
    GroupoidFunctor F{sub, g, objects, {}};
    for (auto const& f : sub->morphisms()) {
      F.on_morphisms.push_back(*g->find_morphism(f.id));
    }
    return F;
  }

}  // namespace gpdkit
