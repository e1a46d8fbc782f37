#include "gpdkit/nerve.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/presentation.hpp"
#include "gpdkit/search.hpp"

namespace gpdkit {

  // ---------------------------------------------------------------- sample

  namespace {

    using FunctorKey = std::tuple<int, int, std::vector<int>, std::vector<int>>;

  }  // namespace

  FiniteSampleCategory::FiniteSampleCategory(std::vector<std::string> names,
                                             std::vector<GroupoidPtr> groupoids,
                                             MorphismClass            good)
      : _names(std::move(names)), _objects(std::move(groupoids)), _good(good) {
    if (_names.size() != _objects.size()) {
      throw PreconditionError("sample: names and groupoids differ in length");
    }
    int const k = static_cast<int>(_objects.size());
    for (int a = 0; a < k; ++a) {
      auto const& g = *_objects[a];
      if (g.num_objects() > kSampleMaxObjects || g.num_morphisms() > kSampleMaxMorphisms) {
        throw PreconditionError("sample: '" + _names[a] + "' exceeds the size bound ("
                                + std::to_string(kSampleMaxObjects) + " objects, "
                                + std::to_string(kSampleMaxMorphisms) + " morphisms)");
      }
    }
    std::map<FunctorKey, int> by_key;
    _identity.assign(k, kNone);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        std::size_t count = 0;
        for_each_functor(_objects[a], _objects[b], {}, [&](GroupoidFunctor const& F) {
          if (++count > kSampleMaxFunctors) {
            return false;
          }
          int const idx = static_cast<int>(_arrows.size());
          by_key[{a, b, F.on_objects, F.on_morphisms}] = idx;
          _arrows.push_back(
              {a, b, F, is_equivalence(F), is_cofibration(F), contains(good, F)});
          return true;
        });
        if (count > kSampleMaxFunctors) {
          throw BudgetExceeded("sample: more than " + std::to_string(kSampleMaxFunctors)
                                   + " functors from '" + _names[a] + "' to '" + _names[b]
                                   + "'",
                               count);
        }
      }
      auto const id = identity_functor(_objects[a]);
      _identity[a]  = by_key.at({a, a, id.on_objects, id.on_morphisms});
    }
    std::size_t const n = _arrows.size();
    _compose.assign(n * n, kNone);
    for (std::size_t gi = 0; gi < n; ++gi) {
      for (std::size_t fi = 0; fi < n; ++fi) {
        auto const& g = _arrows[gi];
        auto const& f = _arrows[fi];
        if (f.dst != g.src) {
          continue;
        }
        auto const gf = gpdkit::compose(g.functor, f.functor);
        _compose[gi * n + fi] = by_key.at({f.src, g.dst, gf.on_objects, gf.on_morphisms});
      }
    }
  }

  int FiniteSampleCategory::compose(int g, int f) const {
    return _compose[static_cast<std::size_t>(g) * _arrows.size() + f];
  }

  std::vector<int> FiniteSampleCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < _arrows.size(); ++i) {
      if (_arrows[i].src == a && _arrows[i].dst == b) {
        out.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  FiniteCategory FiniteSampleCategory::category() const {
    FiniteCategory c;
    c.num_objects = _objects.size();
    for (auto const& a : _arrows) {
      c.src.push_back(a.src);
      c.dst.push_back(a.dst);
    }
    c.identity = _identity;
    auto table = std::make_shared<std::vector<int>>(_compose);
    auto n     = _arrows.size();
    c.compose  = [table, n](int g, int f) {
      return (*table)[static_cast<std::size_t>(g) * n + f];
    };
    return c;
  }

  FiniteSampleCategory enumerate_sample(std::vector<std::string> const& fixture_names,
                                        MorphismClass                   good) {
    std::vector<GroupoidPtr> gs;
    for (auto const& n : fixture_names) {
      gs.push_back(share(fixture(n)));
    }
    return FiniteSampleCategory(fixture_names, std::move(gs), good);
  }

  std::string_view to_string(Marking m) {
    switch (m) {
      case Marking::all: return "all";
      case Marking::w: return "w";
      case Marking::c: return "c";
      case Marking::wc: return "wc";
      case Marking::wg: return "wg";
    }
    return "?";
  }

  std::vector<bool> marked(FiniteSampleCategory const& s, Marking m) {
    std::vector<bool> out;
    for (auto const& a : s.arrows()) {
      switch (m) {
        case Marking::all: out.push_back(true); break;
        case Marking::w: out.push_back(a.w); break;
        case Marking::c: out.push_back(a.c); break;
        case Marking::wc: out.push_back(a.w && a.c); break;
        case Marking::wg: out.push_back(a.w && a.g); break;
      }
    }
    return out;
  }

  // ----------------------------------------------------- simplicial sets

  int TruncatedSimplicialSet::find(std::size_t k, Simplex const& s) const {
    auto const& idx = index.at(k);
    auto        it  = idx.find(s);
    return it == idx.end() ? kNone : it->second;
  }

  std::size_t TruncatedSimplicialSet::nondegenerate_count(std::size_t k) const {
    auto const& f = degenerate_flags.at(k);
    return static_cast<std::size_t>(std::count(f.begin(), f.end(), 0));
  }

  namespace {

    void finalize(TruncatedSimplicialSet& x) {
      x.degenerate_flags.assign(x.cutoff + 1, {});
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        x.degenerate_flags[k].assign(x.simplices[k].size(), 0);
      }
      for (std::size_t k = 0; k < x.cutoff; ++k) {
        for (auto const& s : x.degeneracy[k]) {
          for (int t : s) {
            x.degenerate_flags[k + 1][t] = 1;
          }
        }
      }
    }

    void index_levels(TruncatedSimplicialSet& x) {
      x.index.assign(x.cutoff + 1, {});
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        std::sort(x.simplices[k].begin(), x.simplices[k].end());
        for (std::size_t s = 0; s < x.simplices[k].size(); ++s) {
          x.index[k][x.simplices[k][s]] = static_cast<int>(s);
        }
      }
    }

    int must_find(TruncatedSimplicialSet const& x, std::size_t k, Simplex const& s,
                  char const* what) {
      int const i = x.find(k, s);
      if (i == kNone) {
        throw Error(std::string("simplicial set is not closed under ") + what);
      }
      return i;
    }

  }  // namespace

  SimplicialIdentityReport TruncatedSimplicialSet::check_identities() const {
    SimplicialIdentityReport r;
    auto fail = [&](std::string const& what, std::size_t k, int s) {
      if (r.failures.size() < 20) {
        std::ostringstream os;
        os << what << " at level " << k << ", simplex " << s;
        r.failures.push_back(os.str());
      }
    };
    for (std::size_t k = 0; k <= cutoff; ++k) {
      for (int s = 0; s < static_cast<int>(count(k)); ++s) {
        // d_i d_j = d_{j-1} d_i for i < j
        if (k >= 2) {
          for (std::size_t j = 0; j <= k; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
              ++r.checked;
              if (face[k - 1][i][face[k][j][s]] != face[k - 1][j - 1][face[k][i][s]]) {
                fail("d_i d_j", k, s);
              }
            }
          }
        }
        if (k < cutoff) {
          for (std::size_t j = 0; j <= k; ++j) {
            int const t = degeneracy[k][j][s];
            for (std::size_t i = 0; i <= k + 1; ++i) {
              ++r.checked;
              int const lhs = face[k + 1][i][t];
              int       rhs;
              if (i == j || i == j + 1) {
                rhs = s;
              } else if (k == 0) {
                continue;  // no lower level to compare through
              } else if (i < j) {
                rhs = degeneracy[k - 1][j - 1][face[k][i][s]];
              } else {
                rhs = degeneracy[k - 1][j][face[k][i - 1][s]];
              }
              if (lhs != rhs) {
                fail("d_i s_j", k, s);
              }
            }
          }
        }
        if (k + 1 < cutoff) {
          for (std::size_t j = 0; j <= k; ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
              ++r.checked;
              if (degeneracy[k + 1][i][degeneracy[k][j][s]]
                  != degeneracy[k + 1][j + 1][degeneracy[k][i][s]]) {
                fail("s_i s_j", k, s);
              }
            }
          }
        }
      }
    }
    return r;
  }

  TruncatedSimplicialSet nerve(FiniteCategory const&    cat,
                               std::vector<bool> const& object_mask,
                               std::vector<bool> const& mask,
                               std::size_t              d,
                               std::size_t              budget) {
    std::size_t const na = cat.num_arrows();
    std::vector<bool> allowed(na, false);
    std::vector<std::vector<int>> out_arrows(cat.num_objects);
    for (std::size_t a = 0; a < na; ++a) {
      bool const ends = object_mask[cat.src[a]] && object_mask[cat.dst[a]];
      allowed[a]      = ends && (mask[a] || cat.identity[cat.src[a]] == static_cast<int>(a));
      if (allowed[a]) {
        out_arrows[cat.src[a]].push_back(static_cast<int>(a));
      }
    }

    TruncatedSimplicialSet x;
    x.cutoff = d;
    x.simplices.assign(d + 1, {});
    for (std::size_t o = 0; o < cat.num_objects; ++o) {
      if (object_mask[o]) {
        x.simplices[0].push_back({static_cast<int>(o)});
      }
    }
    if (d >= 1) {
      for (std::size_t a = 0; a < na; ++a) {
        if (allowed[a]) {
          x.simplices[1].push_back({static_cast<int>(a)});
        }
      }
    }
    for (std::size_t k = 2; k <= d; ++k) {
      std::size_t total = 0;
      for (auto const& s : x.simplices[k - 1]) {
        total += out_arrows[cat.dst[s.back()]].size();
      }
      if (total > budget) {
        throw BudgetExceeded("nerve level " + std::to_string(k) + " has "
                                 + std::to_string(total) + " simplices, over the budget of "
                                 + std::to_string(budget),
                             total);
      }
      x.simplices[k].reserve(total);
      for (auto const& s : x.simplices[k - 1]) {
        for (int a : out_arrows[cat.dst[s.back()]]) {
          auto t = s;
          t.push_back(a);
          x.simplices[k].push_back(std::move(t));
        }
      }
    }
    index_levels(x);

    auto vertex = [&](Simplex const& s, std::size_t i) {
      return i == 0 ? cat.src[s[0]] : cat.dst[s[i - 1]];
    };
    x.face.assign(d + 1, {});
    x.degeneracy.assign(d + 1, {});
    for (std::size_t k = 1; k <= d; ++k) {
      x.face[k].assign(k + 1, std::vector<int>(x.count(k)));
      for (std::size_t s = 0; s < x.count(k); ++s) {
        auto const& c = x.simplices[k][s];
        for (std::size_t i = 0; i <= k; ++i) {
          Simplex f;
          if (k == 1) {
            f = {i == 0 ? cat.dst[c[0]] : cat.src[c[0]]};
          } else if (i == 0) {
            f.assign(c.begin() + 1, c.end());
          } else if (i == k) {
            f.assign(c.begin(), c.end() - 1);
          } else {
            f.assign(c.begin(), c.begin() + static_cast<long>(i) - 1);
            f.push_back(cat.compose(c[i], c[i - 1]));
            f.insert(f.end(), c.begin() + static_cast<long>(i) + 1, c.end());
          }
          x.face[k][i][s] = must_find(x, k - 1, f, "faces");
        }
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      x.degeneracy[k].assign(k + 1, std::vector<int>(x.count(k)));
      for (std::size_t s = 0; s < x.count(k); ++s) {
        auto const& c = x.simplices[k][s];
        for (std::size_t i = 0; i <= k; ++i) {
          Simplex t;
          int const id = cat.identity[k == 0 ? c[0] : vertex(c, i)];
          if (k == 0) {
            t = {id};
          } else {
            t.assign(c.begin(), c.begin() + static_cast<long>(i));
            t.push_back(id);
            t.insert(t.end(), c.begin() + static_cast<long>(i), c.end());
          }
          x.degeneracy[k][i][s] = must_find(x, k + 1, t, "degeneracies");
        }
      }
    }
    finalize(x);
    return x;
  }

  TruncatedSimplicialSet nerve(FiniteCategory const&    cat,
                               std::vector<bool> const& mask,
                               std::size_t              d,
                               std::size_t              budget) {
    return nerve(cat, std::vector<bool>(cat.num_objects, true), mask, d, budget);
  }

  TruncatedSimplicialSet nerve(FiniteCategory const& cat, std::size_t d, std::size_t budget) {
    return nerve(cat, std::vector<bool>(cat.num_arrows(), true), d, budget);
  }

  TruncatedSimplicialSet nerve(FiniteSampleCategory const& s, Marking m, std::size_t d) {
    return nerve(s.category(), marked(s, m), d);
  }

  TruncatedSimplicialSet nerve(ConcreteGroupoid const& g, std::size_t d) {
    FiniteCategory c;
    c.num_objects = g.num_objects();
    for (auto const& f : g.morphisms()) {
      c.src.push_back(f.src);
      c.dst.push_back(f.dst);
    }
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      c.identity.push_back(g.identity(static_cast<int>(x)));
    }
    auto gp   = std::make_shared<ConcreteGroupoid>(g);
    c.compose = [gp](int a, int b) { return gp->compose(a, b); };
    return nerve(c, d);
  }

  bool is_simplicial(SimplicialMap const&           f,
                     TruncatedSimplicialSet const& x,
                     TruncatedSimplicialSet const& y) {
    std::size_t const d = std::min(x.cutoff, y.cutoff);
    if (f.map.size() < d + 1) {
      return false;
    }
    for (std::size_t k = 0; k <= d; ++k) {
      if (f.map[k].size() != x.count(k)) {
        return false;
      }
      for (std::size_t s = 0; s < x.count(k); ++s) {
        int const fs = f.map[k][s];
        if (fs < 0 || static_cast<std::size_t>(fs) >= y.count(k)) {
          return false;
        }
        if (k >= 1) {
          for (std::size_t i = 0; i <= k; ++i) {
            if (f.map[k - 1][x.face[k][i][s]] != y.face[k][i][fs]) {
              return false;
            }
          }
        }
        if (k < d) {
          for (std::size_t i = 0; i <= k; ++i) {
            if (f.map[k + 1][x.degeneracy[k][i][s]] != y.degeneracy[k][i][fs]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  SimplicialMap compose(SimplicialMap const& g, SimplicialMap const& f) {
    SimplicialMap h;
    for (std::size_t k = 0; k < std::min(f.map.size(), g.map.size()); ++k) {
      std::vector<int> level;
      for (int s : f.map[k]) {
        level.push_back(g.map[k].at(s));
      }
      h.map.push_back(std::move(level));
    }
    return h;
  }

  bool is_identity(SimplicialMap const& f) {
    for (auto const& level : f.map) {
      for (std::size_t s = 0; s < level.size(); ++s) {
        if (level[s] != static_cast<int>(s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective(SimplicialMap const& f) {
    for (auto const& level : f.map) {
      if (std::set<int>(level.begin(), level.end()).size() != level.size()) {
        return false;
      }
    }
    return true;
  }

  SimplicialMap inclusion_map(TruncatedSimplicialSet const& x,
                              TruncatedSimplicialSet const& y) {
    SimplicialMap f;
    for (std::size_t k = 0; k <= std::min(x.cutoff, y.cutoff); ++k) {
      std::vector<int> level;
      for (auto const& s : x.simplices[k]) {
        int const t = y.find(k, s);
        if (t == kNone) {
          throw PreconditionError("inclusion_map: a simplex at level " + std::to_string(k)
                                  + " is missing from the target");
        }
        level.push_back(t);
      }
      f.map.push_back(std::move(level));
    }
    return f;
  }

  // ------------------------------------------------------------ double nerve

  Simplex Grid::key() const {
    if (m == 0 && n == 0) {
      return {objects[0]};
    }
    Simplex k = horizontal;
    k.insert(k.end(), vertical.begin(), vertical.end());
    return k;
  }

  int TruncatedBisimplicialSet::find(std::size_t m, std::size_t n, Simplex const& key) const {
    auto const& idx = index.at(m).at(n);
    auto        it  = idx.find(key);
    return it == idx.end() ? kNone : it->second;
  }

  Grid TruncatedBisimplicialSet::face_h(Grid const& g, std::size_t i) const {
    Grid r;
    r.m = g.m - 1;
    r.n = g.n;
    for (std::size_t a = 0; a <= g.m; ++a) {
      if (a == i) {
        continue;
      }
      for (std::size_t j = 0; j <= g.n; ++j) {
        r.objects.push_back(g.object(a, j));
      }
      for (std::size_t j = 0; j < g.n; ++j) {
        r.vertical.push_back(g.v(a, j));
      }
    }
    for (std::size_t a = 0; a < g.m; ++a) {
      if (i == 0 && a == 0) {
        continue;
      }
      if (i == g.m && a == g.m - 1) {
        continue;
      }
      if (a + 1 == i) {
        for (std::size_t j = 0; j <= g.n; ++j) {
          r.horizontal.push_back(compose(g.h(a + 1, j), g.h(a, j)));
        }
      } else if (a == i) {
        continue;
      } else {
        for (std::size_t j = 0; j <= g.n; ++j) {
          r.horizontal.push_back(g.h(a, j));
        }
      }
    }
    return r;
  }

  Grid TruncatedBisimplicialSet::face_v(Grid const& g, std::size_t j) const {
    Grid r;
    r.m = g.m;
    r.n = g.n - 1;
    for (std::size_t a = 0; a <= g.m; ++a) {
      for (std::size_t b = 0; b <= g.n; ++b) {
        if (b != j) {
          r.objects.push_back(g.object(a, b));
        }
      }
    }
    for (std::size_t a = 0; a < g.m; ++a) {
      for (std::size_t b = 0; b <= g.n; ++b) {
        if (b != j) {
          r.horizontal.push_back(g.h(a, b));
        }
      }
    }
    for (std::size_t a = 0; a <= g.m; ++a) {
      for (std::size_t b = 0; b < g.n; ++b) {
        if ((j == 0 && b == 0) || (j == g.n && b == g.n - 1) || (b == j && j != 0)) {
          continue;
        }
        if (b + 1 == j) {
          r.vertical.push_back(compose(g.v(a, b + 1), g.v(a, b)));
        } else {
          r.vertical.push_back(g.v(a, b));
        }
      }
    }
    return r;
  }

  Grid TruncatedBisimplicialSet::degeneracy_h(Grid const& g, std::size_t i) const {
    Grid r;
    r.m = g.m + 1;
    r.n = g.n;
    for (std::size_t a = 0; a <= g.m; ++a) {
      for (int rep = 0; rep < (a == i ? 2 : 1); ++rep) {
        for (std::size_t j = 0; j <= g.n; ++j) {
          r.objects.push_back(g.object(a, j));
        }
        for (std::size_t j = 0; j < g.n; ++j) {
          r.vertical.push_back(g.v(a, j));
        }
      }
    }
    for (std::size_t a = 0; a <= g.m; ++a) {
      if (a == i) {
        for (std::size_t j = 0; j <= g.n; ++j) {
          r.horizontal.push_back(identity[g.object(a, j)]);
        }
      }
      if (a < g.m) {
        for (std::size_t j = 0; j <= g.n; ++j) {
          r.horizontal.push_back(g.h(a, j));
        }
      }
    }
    return r;
  }

  Grid TruncatedBisimplicialSet::degeneracy_v(Grid const& g, std::size_t j) const {
    Grid r;
    r.m = g.m;
    r.n = g.n + 1;
    for (std::size_t a = 0; a <= g.m; ++a) {
      for (std::size_t b = 0; b <= g.n; ++b) {
        r.objects.push_back(g.object(a, b));
        if (b == j) {
          r.objects.push_back(g.object(a, b));
        }
      }
    }
    for (std::size_t a = 0; a < g.m; ++a) {
      for (std::size_t b = 0; b <= g.n; ++b) {
        r.horizontal.push_back(g.h(a, b));
        if (b == j) {
          r.horizontal.push_back(g.h(a, b));
        }
      }
    }
    for (std::size_t a = 0; a <= g.m; ++a) {
      for (std::size_t b = 0; b <= g.n; ++b) {
        if (b == j) {
          r.vertical.push_back(identity[g.object(a, b)]);
        }
        if (b < g.n) {
          r.vertical.push_back(g.v(a, b));
        }
      }
    }
    return r;
  }

  namespace {

    // Builds a simplicial set from grids along one direction.
    TruncatedSimplicialSet slice(TruncatedBisimplicialSet const& W, std::size_t fixed,
                                 bool horizontal) {
      TruncatedSimplicialSet x;
      x.cutoff = horizontal ? W.cutoff_h : W.cutoff_v;
      auto at  = [&](std::size_t k) -> std::vector<Grid> const& {
        return horizontal ? W.grids[k][fixed] : W.grids[fixed][k];
      };
      auto find = [&](std::size_t k, Grid const& g) {
        int const i = horizontal ? W.find(k, fixed, g.key()) : W.find(fixed, k, g.key());
        if (i == kNone) {
          throw Error("bisimplicial set is not closed under its operators");
        }
        return i;
      };
      x.simplices.assign(x.cutoff + 1, {});
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        for (auto const& g : at(k)) {
          x.simplices[k].push_back(g.key());
        }
      }
      x.index.assign(x.cutoff + 1, {});
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        for (std::size_t s = 0; s < x.simplices[k].size(); ++s) {
          x.index[k][x.simplices[k][s]] = static_cast<int>(s);
        }
      }
      x.face.assign(x.cutoff + 1, {});
      x.degeneracy.assign(x.cutoff + 1, {});
      for (std::size_t k = 0; k <= x.cutoff; ++k) {
        auto const& level = at(k);
        if (k >= 1) {
          x.face[k].assign(k + 1, std::vector<int>(level.size()));
        }
        if (k < x.cutoff) {
          x.degeneracy[k].assign(k + 1, std::vector<int>(level.size()));
        }
        for (std::size_t s = 0; s < level.size(); ++s) {
          for (std::size_t i = 0; i <= k; ++i) {
            if (k >= 1) {
              x.face[k][i][s] = find(
                  k - 1, horizontal ? W.face_h(level[s], i) : W.face_v(level[s], i));
            }
            if (k < x.cutoff) {
              x.degeneracy[k][i][s] = find(k + 1, horizontal ? W.degeneracy_h(level[s], i)
                                                             : W.degeneracy_v(level[s], i));
            }
          }
          if (k >= 1) {
            x.face[k][k][s] = find(
                k - 1, horizontal ? W.face_h(level[s], k) : W.face_v(level[s], k));
          }
        }
      }
      finalize(x);
      return x;
    }

  }  // namespace

  TruncatedSimplicialSet TruncatedBisimplicialSet::row(std::size_t m) const {
    return slice(*this, m, false);
  }

  TruncatedSimplicialSet TruncatedBisimplicialSet::column(std::size_t n) const {
    return slice(*this, n, true);
  }

  SimplicialIdentityReport TruncatedBisimplicialSet::check_identities() const {
    SimplicialIdentityReport r;
    auto merge = [&](SimplicialIdentityReport const& s, std::string const& where) {
      r.checked += s.checked;
      for (auto const& f : s.failures) {
        r.failures.push_back(where + ": " + f);
      }
    };
    for (std::size_t m = 0; m <= cutoff_h; ++m) {
      merge(row(m).check_identities(), "row " + std::to_string(m));
    }
    for (std::size_t n = 0; n <= cutoff_v; ++n) {
      merge(column(n).check_identities(), "column " + std::to_string(n));
    }
    auto same = [&](Grid const& a, Grid const& b, char const* what, std::size_t m,
                    std::size_t n) {
      ++r.checked;
      if (a.m != b.m || a.n != b.n || a.key() != b.key() || find(a.m, a.n, a.key()) == kNone) {
        if (r.failures.size() < 20) {
          r.failures.push_back(std::string(what) + " do not commute at (" + std::to_string(m)
                               + ", " + std::to_string(n) + ")");
        }
      }
    };
    for (std::size_t m = 0; m <= cutoff_h; ++m) {
      for (std::size_t n = 0; n <= cutoff_v; ++n) {
        for (auto const& g : grids[m][n]) {
          for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
              if (m >= 1 && n >= 1) {
                same(face_h(face_v(g, j), i), face_v(face_h(g, i), j), "faces", m, n);
              }
              if (m >= 1 && n < cutoff_v) {
                same(face_h(degeneracy_v(g, j), i), degeneracy_v(face_h(g, i), j),
                     "horizontal faces and vertical degeneracies", m, n);
              }
              if (n >= 1 && m < cutoff_h) {
                same(face_v(degeneracy_h(g, i), j), degeneracy_h(face_v(g, j), i),
                     "vertical faces and horizontal degeneracies", m, n);
              }
              if (m < cutoff_h && n < cutoff_v) {
                same(degeneracy_h(degeneracy_v(g, j), i), degeneracy_v(degeneracy_h(g, i), j),
                     "degeneracies", m, n);
              }
            }
          }
        }
      }
    }
    return r;
  }

  TruncatedBisimplicialSet double_nerve_W(FiniteSampleCategory const& s,
                                          std::size_t                 d,
                                          std::size_t                 budget) {
    auto const cat = s.category();
    auto const wc  = marked(s, Marking::wc);
    auto const wg  = marked(s, Marking::wg);
    auto const Nwg = nerve(cat, wg, d, budget);

    TruncatedBisimplicialSet W;
    W.cutoff_h = d;
    W.cutoff_v = d;
    W.compose  = cat.compose;
    W.identity = cat.identity;
    W.grids.assign(d + 1, std::vector<std::vector<Grid>>(d + 1));
    W.index.assign(d + 1, std::vector<std::map<Simplex, int>>(d + 1));

    std::vector<std::vector<int>> h_out(cat.num_objects), v_out(cat.num_objects);
    for (std::size_t a = 0; a < cat.num_arrows(); ++a) {
      if (wc[a]) {
        h_out[cat.src[a]].push_back(static_cast<int>(a));
      }
      if (wg[a]) {
        v_out[cat.src[a]].push_back(static_cast<int>(a));
      }
    }

    for (std::size_t n = 0; n <= d; ++n) {
      // columns: vertical chains of length n
      struct Column {
        std::vector<int> objects;
        std::vector<int> vertical;
      };
      std::vector<Column> cols;
      for (auto const& c : Nwg.simplices[n]) {
        Column col;
        if (n == 0) {
          col.objects = {c[0]};
        } else {
          col.objects.push_back(cat.src[c[0]]);
          for (int a : c) {
            col.objects.push_back(cat.dst[a]);
          }
          col.vertical = c;
        }
        cols.push_back(std::move(col));
      }
      std::map<std::vector<int>, std::size_t> col_index;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        col_index[cols[k].vertical.empty() ? cols[k].objects : cols[k].vertical] = k;
      }

      // ladders out of each column: horizontal arrows h_0..h_n with
      // commuting squares onto another column
      struct Ladder {
        std::size_t      target;
        std::vector<int> h;
      };
      std::vector<std::vector<Ladder>> ladders(cols.size());
      std::size_t                      ladder_count = 0;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        auto const&      col = cols[k];
        std::vector<int> h, v2;
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
          if (j == n) {
            auto const key = n == 0 ? std::vector<int>{cat.dst[h[0]]} : v2;
            ladders[k].push_back({col_index.at(key), h});
            if (++ladder_count > budget) {
              throw BudgetExceeded("double nerve: too many horizontal ladders",
                                   ladder_count * cols.size() / (k + 1));
            }
            return;
          }
          // choose v' out of dst(h_j) and h_{j+1} out of G(j+1)
          for (int vp : v_out[cat.dst[h[j]]]) {
            for (int hn : h_out[col.objects[j + 1]]) {
              if (cat.dst[hn] != cat.dst[vp]) {
                continue;
              }
              if (cat.compose(vp, h[j]) != cat.compose(hn, col.vertical[j])) {
                continue;
              }
              h.push_back(hn);
              v2.push_back(vp);
              rec(j + 1);
              h.pop_back();
              v2.pop_back();
            }
          }
        };
        for (int h0 : h_out[col.objects[0]]) {
          h = {h0};
          v2.clear();
          rec(0);
        }
      }

      // paths[m][k]: chains of m ladders out of column k
      std::vector<std::vector<std::size_t>> paths(d + 1, std::vector<std::size_t>(cols.size(), 1));
      for (std::size_t m = 1; m <= d; ++m) {
        std::size_t total = 0;
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::size_t c = 0;
          for (auto const& l : ladders[k]) {
            c += paths[m - 1][l.target];
          }
          paths[m][k] = c;
          total += c;
        }
        if (total > budget) {
          throw BudgetExceeded("double nerve: " + std::to_string(total) + " grids at ("
                                   + std::to_string(m) + ", " + std::to_string(n)
                                   + "), over the budget of " + std::to_string(budget),
                               total);
        }
      }

      // grids of width m: chains of m ladders
      for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> path{k};
        std::vector<Ladder const*> used;
        std::function<void()> rec = [&]() {
          std::size_t const m = used.size();
          Grid g;
          g.m = m;
          g.n = n;
          for (std::size_t c : path) {
            g.objects.insert(g.objects.end(), cols[c].objects.begin(), cols[c].objects.end());
            g.vertical.insert(g.vertical.end(), cols[c].vertical.begin(),
                              cols[c].vertical.end());
          }
          for (auto const* l : used) {
            g.horizontal.insert(g.horizontal.end(), l->h.begin(), l->h.end());
          }
          W.grids[m][n].push_back(std::move(g));
          if (W.grids[m][n].size() > budget) {
            throw BudgetExceeded("double nerve: too many grids at (" + std::to_string(m) + ", "
                                     + std::to_string(n) + ")",
                                 W.grids[m][n].size());
          }
          if (m == d) {
            return;
          }
          for (auto const& l : ladders[path.back()]) {
            path.push_back(l.target);
            used.push_back(&l);
            rec();
            path.pop_back();
            used.pop_back();
          }
        };
        rec();
      }
    }
    for (std::size_t m = 0; m <= d; ++m) {
      for (std::size_t n = 0; n <= d; ++n) {
        auto& level = W.grids[m][n];
        std::sort(level.begin(), level.end(),
                  [](Grid const& a, Grid const& b) { return a.key() < b.key(); });
        for (std::size_t i = 0; i < level.size(); ++i) {
          W.index[m][n][level[i].key()] = static_cast<int>(i);
        }
      }
    }
    return W;
  }

  DiagonalComparison diagonal(TruncatedBisimplicialSet const& W, FiniteSampleCategory const& s) {
    if (W.cutoff_h != W.cutoff_v) {
      throw PreconditionError("diagonal needs a square truncation");
    }
    std::size_t const d = W.cutoff_h;
    DiagonalComparison out;
    auto&              x = out.diagonal;
    x.cutoff             = d;
    x.simplices.assign(d + 1, {});
    x.index.assign(d + 1, {});
    for (std::size_t k = 0; k <= d; ++k) {
      for (auto const& g : W.grids[k][k]) {
        x.simplices[k].push_back(g.key());
      }
      for (std::size_t i = 0; i < x.simplices[k].size(); ++i) {
        x.index[k][x.simplices[k][i]] = static_cast<int>(i);
      }
    }
    auto find = [&](Grid const& g) {
      int const i = W.find(g.m, g.n, g.key());
      if (i == kNone || g.m != g.n) {
        throw Error("diagonal is not closed under its operators");
      }
      return i;
    };
    x.face.assign(d + 1, {});
    x.degeneracy.assign(d + 1, {});
    for (std::size_t k = 0; k <= d; ++k) {
      auto const& level = W.grids[k][k];
      if (k >= 1) {
        x.face[k].assign(k + 1, std::vector<int>(level.size()));
      }
      if (k < d) {
        x.degeneracy[k].assign(k + 1, std::vector<int>(level.size()));
      }
      for (std::size_t sidx = 0; sidx < level.size(); ++sidx) {
        for (std::size_t i = 0; i <= k; ++i) {
          if (k >= 1) {
            x.face[k][i][sidx] = find(W.face_h(W.face_v(level[sidx], i), i));
          }
          if (k < d) {
            x.degeneracy[k][i][sidx] = find(W.degeneracy_h(W.degeneracy_v(level[sidx], i), i));
          }
        }
      }
    }
    finalize(x);

    out.wg = W.row(0);
    out.wc = W.column(0);
    out.row0_to_diag.map.assign(d + 1, {});
    out.col0_to_diag.map.assign(d + 1, {});
    for (std::size_t k = 0; k <= d; ++k) {
      for (auto const& g : W.grids[0][k]) {
        Grid t = g;
        for (std::size_t r = 0; r < k; ++r) {
          t = W.degeneracy_h(t, 0);
        }
        out.row0_to_diag.map[k].push_back(find(t));
      }
      for (auto const& g : W.grids[k][0]) {
        Grid t = g;
        for (std::size_t r = 0; r < k; ++r) {
          t = W.degeneracy_v(t, 0);
        }
        out.col0_to_diag.map[k].push_back(find(t));
      }
    }

    SimplicialMap stair;
    stair.map.assign(d + 1, {});
    auto const wg = marked(s, Marking::wg);
    for (std::size_t k = 0; k <= d && out.diag_to_wg_failure.empty(); ++k) {
      for (auto const& g : W.grids[k][k]) {
        Simplex c;
        if (k == 0) {
          c = {g.object(0, 0)};
        } else {
          for (std::size_t i = 0; i < k; ++i) {
            c.push_back(W.compose(g.v(i + 1, i), g.h(i, i)));
          }
        }
        int const t = out.wg.find(k, c);
        if (t == kNone) {
          int const bad = *std::find_if(c.begin(), c.end(), [&](int a) { return !wg[a]; });
          out.diag_to_wg_failure = "staircase arrow " + std::to_string(bad) + " ("
                                   + s.names()[s.arrows()[bad].src] + " -> "
                                   + s.names()[s.arrows()[bad].dst] + ") is not in wg";
          break;
        }
        stair.map[k].push_back(t);
      }
    }
    if (out.diag_to_wg_failure.empty()) {
      out.diag_to_wg = std::move(stair);
    }
    return out;
  }

  // ---------------------------------------------------------------- homology

  std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool               first = true;
    if (rank > 0) {
      os << "Z";
      if (rank > 1) {
        os << "^" << rank;
      }
      first = false;
    }
    for (auto t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    if (first) {
      os << "0";
    }
    return os.str();
  }

  std::vector<std::vector<long long>> boundary_matrix(TruncatedSimplicialSet const& x,
                                                      std::size_t                   k) {
    if (k == 0 || k > x.cutoff) {
      throw PreconditionError("boundary_matrix: degree out of range");
    }
    std::vector<int> row_of(x.count(k - 1), -1);
    int              rows = 0;
    for (std::size_t s = 0; s < x.count(k - 1); ++s) {
      if (!x.degenerate(k - 1, static_cast<int>(s))) {
        row_of[s] = rows++;
      }
    }
    std::vector<std::vector<long long>> m(rows);
    std::size_t cols = x.nondegenerate_count(k);
    for (auto& r : m) {
      r.assign(cols, 0);
    }
    std::size_t col = 0;
    for (std::size_t s = 0; s < x.count(k); ++s) {
      if (x.degenerate(k, static_cast<int>(s))) {
        continue;
      }
      for (std::size_t i = 0; i <= k; ++i) {
        int const f = x.face[k][i][s];
        if (row_of[f] >= 0) {
          m[row_of[f]][col] += (i % 2 == 0) ? 1 : -1;
        }
      }
      ++col;
    }
    return m;
  }

  namespace {

    long long checked(__int128 v) {
      if (v > INT64_MAX || v < INT64_MIN) {
        throw Error("integer overflow in Smith normal form");
      }
      return static_cast<long long>(v);
    }

  }  // namespace

  std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
    std::size_t const rows = a.size();
    std::size_t const cols = rows == 0 ? 0 : a[0].size();
    std::vector<long long> diag;
    // a_row -= q * b_row over columns from `from`
    auto row_op = [&](std::size_t r, std::size_t p, long long q, std::size_t from) {
      for (std::size_t c = from; c < cols; ++c) {
        if (a[p][c] != 0) {
          a[r][c] = checked(static_cast<__int128>(a[r][c]) - static_cast<__int128>(q) * a[p][c]);
        }
      }
    };
    auto col_op = [&](std::size_t c, std::size_t p, long long q, std::size_t from) {
      for (std::size_t r = from; r < rows; ++r) {
        if (a[r][p] != 0) {
          a[r][c] = checked(static_cast<__int128>(a[r][c]) - static_cast<__int128>(q) * a[r][p]);
        }
      }
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      // smallest nonzero entry of the remaining block
      long long   best = 0;
      std::size_t br = 0, bc = 0;
      for (std::size_t r = t; r < rows && best != 1; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          long long const v = std::llabs(a[r][c]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            br   = r;
            bc   = c;
            if (v == 1) {
              break;
            }
          }
        }
      }
      if (best == 0) {
        break;
      }
      std::swap(a[t], a[br]);
      for (auto& row : a) {
        std::swap(row[t], row[bc]);
      }
      for (;;) {
        bool changed = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (a[r][t] != 0) {
            row_op(r, t, a[r][t] / a[t][t], t);
            if (a[r][t] != 0) {
              std::swap(a[t], a[r]);
              changed = true;
            }
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[t][c] != 0) {
            col_op(c, t, a[t][c] / a[t][t], t);
            if (a[t][c] != 0) {
              for (auto& row : a) {
                std::swap(row[t], row[c]);
              }
              changed = true;
            }
          }
        }
        if (changed) {
          continue;
        }
        // the pivot must divide the rest of the block
        bool divides = true;
        for (std::size_t r = t + 1; r < rows && divides; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (a[r][c] % a[t][t] != 0) {
              row_op(t, r, -1, t);
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      diag.push_back(std::llabs(a[t][t]));
    }
    return diag;
  }

  namespace {

    // Columns of a boundary map as sparse row -> coefficient maps.
    std::vector<std::map<int, long long>> sparse_boundary(TruncatedSimplicialSet const& x,
                                                          std::size_t                   k,
                                                          int&                          rows) {
      std::vector<int> row_of(x.count(k - 1), -1);
      rows = 0;
      for (std::size_t s = 0; s < x.count(k - 1); ++s) {
        if (!x.degenerate(k - 1, static_cast<int>(s))) {
          row_of[s] = rows++;
        }
      }
      std::vector<std::map<int, long long>> cols;
      for (std::size_t s = 0; s < x.count(k); ++s) {
        if (x.degenerate(k, static_cast<int>(s))) {
          continue;
        }
        std::map<int, long long> c;
        for (std::size_t i = 0; i <= k; ++i) {
          int const f = x.face[k][i][s];
          if (row_of[f] >= 0) {
            long long& v = c[row_of[f]];
            v += (i % 2 == 0) ? 1 : -1;
            if (v == 0) {
              c.erase(row_of[f]);
            }
          }
        }
        cols.push_back(std::move(c));
      }
      return cols;
    }

    // Pivots on unit entries while they last, then finishes the leftover
    // block densely.
    std::vector<long long> sparse_smith_diagonal(std::vector<std::map<int, long long>> cols,
                                                 int                                   rows) {
      std::vector<std::set<int>> row_cols(rows);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (auto const& [r, v] : cols[c]) {
          row_cols[r].insert(static_cast<int>(c));
        }
      }
      std::vector<char>      active(cols.size(), 1);
      std::vector<long long> diag;
      bool                   progress = true;
      while (progress) {
        progress = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (!active[c] || cols[c].empty()) {
            continue;
          }
          int best = -1;
          for (auto const& [r, v] : cols[c]) {
            if ((v == 1 || v == -1) &&
                (best < 0 || row_cols[r].size() < row_cols[best].size())) {
              best = r;
            }
          }
          if (best < 0) {
            continue;
          }
          long long const a     = cols[c].at(best);
          auto const      pivot = cols[c];
          std::vector<int> others(row_cols[best].begin(), row_cols[best].end());
          for (int o : others) {
            if (o == static_cast<int>(c)) {
              continue;
            }
            auto&           col = cols[o];
            long long const f   = col.at(best) * a;
            for (auto const& [r, v] : pivot) {
              long long const nv =
                checked(static_cast<__int128>(col.count(r) ? col[r] : 0) -
                        static_cast<__int128>(f) * v);
              if (nv == 0) {
                col.erase(r);
                row_cols[r].erase(o);
              } else {
                if (!col.count(r)) {
                  row_cols[r].insert(o);
                }
                col[r] = nv;
              }
            }
          }
          for (auto const& [r, v] : pivot) {
            row_cols[r].erase(static_cast<int>(c));
          }
          cols[c].clear();
          active[c] = 0;
          diag.push_back(1);
          progress = true;
        }
      }
      // leftover block
      std::vector<int> live_rows;
      std::vector<int> row_pos(rows, -1);
      for (int r = 0; r < rows; ++r) {
        if (!row_cols[r].empty()) {
          row_pos[r] = static_cast<int>(live_rows.size());
          live_rows.push_back(r);
        }
      }
      std::vector<std::size_t> live_cols;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (active[c] && !cols[c].empty()) {
          live_cols.push_back(c);
        }
      }
      if (!live_rows.empty() && !live_cols.empty()) {
        std::vector<std::vector<long long>> m(live_rows.size(),
                                              std::vector<long long>(live_cols.size(), 0));
        for (std::size_t j = 0; j < live_cols.size(); ++j) {
          for (auto const& [r, v] : cols[live_cols[j]]) {
            m[row_pos[r]][j] = v;
          }
        }
        for (auto v : smith_diagonal(std::move(m))) {
          diag.push_back(v);
        }
      }
      return diag;
    }

  }  // namespace

  HomologyProfile homology(TruncatedSimplicialSet const& x) {
    std::size_t const d = x.cutoff;
    // rank and invariant factors of each boundary C_k -> C_{k-1}
    std::vector<std::size_t>            rank(d + 2, 0);
    std::vector<std::vector<long long>> factors(d + 2);
    for (std::size_t k = 1; k <= d; ++k) {
      int        rows = 0;
      auto       cols = sparse_boundary(x, k, rows);
      auto const sd   = sparse_smith_diagonal(std::move(cols), rows);
      rank[k]       = sd.size();
      for (auto v : sd) {
        if (v > 1) {
          factors[k].push_back(v);
        }
      }
    }
    HomologyProfile p;
    for (std::size_t q = 0; q + 1 <= d; ++q) {
      HomologyGroup g;
      g.rank    = x.nondegenerate_count(q) - rank[q] - rank[q + 1];
      g.torsion = factors[q + 1];
      std::sort(g.torsion.begin(), g.torsion.end());
      p.groups.push_back(std::move(g));
    }
    return p;
  }

  // ------------------------------------------------- classification diagram

  ClassificationLevel classification_level(FiniteSampleCategory const& s,
                                           std::size_t                 k,
                                           std::size_t                 d,
                                           std::size_t                 budget) {
    if (k > 2) {
      throw PreconditionError("classification_level: k must be at most 2");
    }
    auto const base = s.category();
    auto const all  = nerve(base, k, budget);
    auto const& chains = all.simplices[k];

    struct Data {
      std::vector<std::vector<int>>       ladder;  // components t_0..t_k
      std::map<std::tuple<int, int, std::vector<int>>, int> by_key;
    };
    auto data = std::make_shared<Data>();

    std::map<Simplex, int> chain_index;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      chain_index[chains[c]] = static_cast<int>(c);
    }
    auto chain_objects = [&](Simplex const& c) {
      if (k == 0) {
        return std::vector<int>{c[0]};
      }
      std::vector<int> o{base.src[c[0]]};
      for (int a : c) {
        o.push_back(base.dst[a]);
      }
      return o;
    };

    std::vector<std::vector<int>> w_out(base.num_objects);
    for (std::size_t a = 0; a < s.arrows().size(); ++a) {
      if (s.arrows()[a].w) {
        w_out[base.src[a]].push_back(static_cast<int>(a));
      }
    }

    FiniteCategory D;
    D.num_objects = chains.size();
    D.identity.assign(chains.size(), kNone);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      auto const       xs = chain_objects(chains[c]);
      std::vector<int> t, b;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
          Simplex target = k == 0 ? Simplex{base.dst[t[0]]} : b;
          int const tc   = chain_index.at(target);
          int const idx  = static_cast<int>(D.src.size());
          D.src.push_back(static_cast<int>(c));
          D.dst.push_back(tc);
          data->ladder.push_back(t);
          data->by_key[{static_cast<int>(c), tc, t}] = idx;
          if (D.src.size() > budget) {
            throw BudgetExceeded("classification level " + std::to_string(k)
                                     + ": too many ladders",
                                 D.src.size() * chains.size() / (c + 1));
          }
          return;
        }
        // t_{i+1} o a_i = b_i o t_i
        int const ai = chains[c][i];
        for (int bi : [&] {
               std::vector<int> out;
               for (std::size_t a = 0; a < base.num_arrows(); ++a) {
                 if (base.src[a] == base.dst[t[i]]) {
                   out.push_back(static_cast<int>(a));
                 }
               }
               return out;
             }()) {
          for (int tn : w_out[xs[i + 1]]) {
            if (base.dst[tn] != base.dst[bi]) {
              continue;
            }
            if (base.compose(tn, ai) != base.compose(bi, t[i])) {
              continue;
            }
            t.push_back(tn);
            b.push_back(bi);
            rec(i + 1);
            t.pop_back();
            b.pop_back();
          }
        }
      };
      for (int t0 : w_out[xs[0]]) {
        t = {t0};
        b.clear();
        rec(0);
      }
      std::vector<int> ids;
      for (int o : xs) {
        ids.push_back(base.identity[o]);
      }
      D.identity[c] = data->by_key.at({static_cast<int>(c), static_cast<int>(c), ids});
    }
    auto const dsrc = std::make_shared<std::vector<int>>(D.src);
    auto const ddst = std::make_shared<std::vector<int>>(D.dst);
    D.compose = [data, dsrc, ddst, cmp = base.compose](int g, int f) {
      std::vector<int> t;
      for (std::size_t i = 0; i < data->ladder[f].size(); ++i) {
        t.push_back(cmp(data->ladder[g][i], data->ladder[f][i]));
      }
      return data->by_key.at({(*dsrc)[f], (*ddst)[g], t});
    };

    ClassificationLevel out;
    out.k       = k;
    out.objects = chains.size();
    out.nerve   = nerve(D, d, budget);

    std::vector<bool> cof_objects(chains.size(), false);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      cof_objects[c] = k == 0 || std::all_of(chains[c].begin(), chains[c].end(),
                                             [&](int a) { return s.arrows()[a].c; });
    }
    std::vector<bool> cof_ladders(D.num_arrows(), false);
    for (std::size_t l = 0; l < D.num_arrows(); ++l) {
      cof_ladders[l] = std::all_of(data->ladder[l].begin(), data->ladder[l].end(),
                                   [&](int a) { return s.arrows()[a].c; });
    }
    out.cofibrant_nerve = nerve(D, cof_objects, cof_ladders, d, budget);
    out.comparison      = inclusion_map(out.cofibrant_nerve, out.nerve);
    return out;
  }

  // ----------------------------------------------------------------- zig-zag

  std::optional<ZigZag> zigzag_witness(GroupoidFunctor const& F, std::size_t bound) {
    if (!is_equivalence(F)) {
      throw PreconditionError("zigzag_witness: the functor is not an equivalence");
    }
    auto f = mapping_cylinder_factorization(F, bound);
    if (!f.verified()) {
      return std::nullopt;
    }
    auto const&  A  = *F.source;
    auto const&  B  = F.target;
    auto const&  fc = f.pushout.from_c;
    StructureMap tb{B, f.pushout.presentation, {}, {}};
    for (std::size_t y = 0; y < B->num_objects(); ++y) {
      tb.on_objects.push_back(fc.on_objects[A.num_objects() + y]);
    }
    for (std::size_t g = 0; g < B->num_morphisms(); ++g) {
      tb.on_morphisms.push_back(fc.on_morphisms[A.num_morphisms() + g]);
    }
    ZigZag z{f, *f.first, concretize_map(tb, *f.middle)};
    z.source_leg_acyclic = validate_functor(z.from_source).ok()
                           && is_cofibration(z.from_source) && is_equivalence(z.from_source);
    z.target_leg_acyclic = validate_functor(z.from_target).ok()
                           && is_cofibration(z.from_target) && is_equivalence(z.from_target);
    return z;
  }

}  // namespace gpdkit
