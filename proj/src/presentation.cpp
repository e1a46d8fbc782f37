#include "gpdkit/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gpdkit/coset_enumeration.hpp"
#include "gpdkit/errors.hpp"

namespace gpdkit {

  std::optional<std::pair<int, int>> PresentedGroupoid::endpoints(
      Word const& w) const {
    if (w.empty()) {
      return std::nullopt;
    }
    // w = l0 o l1 o ... o lk; lk is applied first
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (letter_src(w[i]) != letter_dst(w[i + 1])) {
        return std::nullopt;
      }
    }
    return std::make_pair(letter_src(w.back()), letter_dst(w.front()));
  }

  std::vector<std::string> PresentedGroupoid::validate() const {
    std::vector<std::string> out;
    int const                n = static_cast<int>(objects.size());
    for (auto const& g : generators) {
      if (g.src < 0 || g.src >= n || g.dst < 0 || g.dst >= n) {
        out.push_back("generator '" + g.id + "' references an undeclared object");
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (std::size_t r = 0; r < relations.size(); ++r) {
      auto const& rel = relations[r];
      for (auto const* side : {&rel.lhs, &rel.rhs}) {
        for (auto l : *side) {
          if (l.generator < 0
              || static_cast<std::size_t>(l.generator) >= generators.size()) {
            out.push_back("relation " + std::to_string(r)
                          + " uses an unknown generator");
          }
        }
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (std::size_t r = 0; r < relations.size(); ++r) {
      auto const& rel = relations[r];
      for (auto const* side : {&rel.lhs, &rel.rhs}) {
        if (side->empty()) {
          continue;
        }
        auto ends = endpoints(*side);
        if (!ends) {
          out.push_back("relation " + std::to_string(r) + ": word "
                        + word_to_string(*side) + " is not composable");
        } else if (ends->first != rel.src || ends->second != rel.dst) {
          out.push_back("relation " + std::to_string(r)
                        + ": sides do not share source and target");
        }
      }
      if (rel.lhs.empty() && rel.rhs.empty()) {
        continue;
      }
      if ((rel.lhs.empty() || rel.rhs.empty()) && rel.src != rel.dst) {
        out.push_back("relation " + std::to_string(r)
                      + ": an empty word must be a loop");
      }
    }
    return out;
  }

  std::string PresentedGroupoid::word_to_string(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += "*";
      }
      out += generators[w[i].generator].id;
      if (w[i].inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  PresentedGroupoid PresentedGroupoid::from_concrete(ConcreteGroupoid const& g) {
    PresentedGroupoid p;
    p.objects    = g.objects();
    p.generators = g.morphisms();
    for (std::size_t a = 0; a < g.num_morphisms(); ++a) {
      for (std::size_t b = 0; b < g.num_morphisms(); ++b) {
        int const ab = g.compose(a, b);
        if (ab != kNone) {
          p.relations.push_back({{Letter{static_cast<int>(a)},
                                  Letter{static_cast<int>(b)}},
                                 {Letter{ab}},
                                 g.src(b),
                                 g.dst(a)});
        }
      }
    }
    return p;
  }

  int evaluate(ConcreteGroupoid const& g, Word const& w, int object_if_empty) {
    if (w.empty()) {
      return g.identity(object_if_empty);
    }
    int acc = kNone;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      int const f = it->inverse ? g.inverse(it->generator) : it->generator;
      acc         = acc == kNone ? f : g.compose(f, acc);
      if (acc == kNone) {
        return kNone;
      }
    }
    return acc;
  }

  namespace {
    Word map_letters(Word const& w, std::vector<int> const& on_generators) {
      Word out;
      for (auto l : w) {
        out.push_back(Letter{on_generators[l.generator], l.inverse});
      }
      return out;
    }
  }  // namespace

  bool PresentedFunctor::injective_on_objects() const {
    std::set<int> seen(on_objects.begin(), on_objects.end());
    return seen.size() == on_objects.size();
  }

  std::vector<std::string> PresentedFunctor::validate() const {
    std::vector<std::string> out;
    auto const&              P = *source;
    auto const&              T = *target;
    for (std::size_t g = 0; g < P.generators.size(); ++g) {
      int const t = on_generators[g];
      if (T.src(t) != on_objects[P.generators[g].src]
          || T.dst(t) != on_objects[P.generators[g].dst]) {
        out.push_back("generator '" + P.generators[g].id
                      + "' is sent to a morphism with the wrong endpoints");
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      auto const& rel = P.relations[r];
      int const   lhs = evaluate(T, map_letters(rel.lhs, on_generators),
                               on_objects[rel.src]);
      int const   rhs = evaluate(T, map_letters(rel.rhs, on_generators),
                               on_objects[rel.src]);
      if (lhs != rhs) {
        out.push_back("relation " + P.word_to_string(rel.lhs) + " = "
                      + P.word_to_string(rel.rhs) + " is not respected");
      }
    }
    return out;
  }

  Pushout pushout_along_cofibration(GroupoidFunctor const& i,
                                    GroupoidFunctor const& f) {
    if (!(i.source == f.source || *i.source == *f.source)) {
      throw PreconditionError("pushout: the two legs have different sources");
    }
    if (!is_cofibration(i)) {
      throw PreconditionError(
          "pushout: the first leg is not a cofibration (not injective on "
          "objects); pushouts are only formed along cofibrations");
    }
    auto const& A = *i.source;
    auto const& B = *i.target;
    auto const& C = *f.target;

    auto P = std::make_shared<PresentedGroupoid>();
    // B-object -> P-object
    std::vector<int> b_obj(B.num_objects(), kNone);
    std::vector<int> a_of_b(B.num_objects(), kNone);
    for (std::size_t a = 0; a < A.num_objects(); ++a) {
      a_of_b[i.on_objects[a]] = static_cast<int>(a);
    }
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
      if (a_of_b[y] == kNone) {
        b_obj[y] = static_cast<int>(P->objects.size());
        P->objects.push_back("b:" + B.object(y));
      }
    }
    int const c_offset = static_cast<int>(P->objects.size());
    for (auto const& z : C.objects()) {
      P->objects.push_back("c:" + z);
    }
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
      if (a_of_b[y] != kNone) {
        b_obj[y] = c_offset + f.on_objects[a_of_b[y]];
      }
    }

    for (auto const& g : B.morphisms()) {
      P->generators.push_back({"b:" + g.id, b_obj[g.src], b_obj[g.dst]});
    }
    int const c_gen = static_cast<int>(B.num_morphisms());
    for (auto const& g : C.morphisms()) {
      P->generators.push_back(
          {"c:" + g.id, g.src + c_offset, g.dst + c_offset});
    }

    auto add_table = [&](ConcreteGroupoid const& G, int gen_offset) {
      for (std::size_t a = 0; a < G.num_morphisms(); ++a) {
        for (std::size_t b = 0; b < G.num_morphisms(); ++b) {
          int const ab = G.compose(a, b);
          if (ab == kNone) {
            continue;
          }
          int const s = P->generators[b + gen_offset].src;
          int const d = P->generators[a + gen_offset].dst;
          P->relations.push_back({{Letter{static_cast<int>(a) + gen_offset},
                                   Letter{static_cast<int>(b) + gen_offset}},
                                  {Letter{ab + gen_offset}},
                                  s,
                                  d});
        }
      }
    };
    add_table(B, 0);
    add_table(C, c_gen);
    for (std::size_t a = 0; a < A.num_morphisms(); ++a) {
      int const bg = i.on_morphisms[a];
      int const cg = f.on_morphisms[a] + c_gen;
      P->relations.push_back({{Letter{bg}},
                              {Letter{cg}},
                              P->generators[cg].src,
                              P->generators[cg].dst});
    }

    Pushout out;
    out.presentation = P;
    out.from_b       = StructureMap{i.target, P, b_obj, {}};
    out.from_b.on_morphisms.resize(B.num_morphisms());
    std::iota(out.from_b.on_morphisms.begin(), out.from_b.on_morphisms.end(), 0);
    out.from_c = StructureMap{f.target, P, {}, {}};
    for (std::size_t z = 0; z < C.num_objects(); ++z) {
      out.from_c.on_objects.push_back(c_offset + static_cast<int>(z));
    }
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
      out.from_c.on_morphisms.push_back(c_gen + static_cast<int>(g));
    }
    return out;
  }

  PresentedFunctor induced_map(Pushout const&         p,
                               GroupoidFunctor const& u,
                               GroupoidFunctor const& v) {
    if (!(u.target == v.target || *u.target == *v.target)) {
      throw PreconditionError("induced_map: cocone legs have different targets");
    }
    auto const&      P = *p.presentation;
    PresentedFunctor h{p.presentation, u.target, {}, {}};
    h.on_objects.assign(P.objects.size(), kNone);
    h.on_generators.assign(P.generators.size(), kNone);
    for (std::size_t y = 0; y < p.from_b.on_objects.size(); ++y) {
      h.on_objects[p.from_b.on_objects[y]] = u.on_objects[y];
    }
    for (std::size_t z = 0; z < p.from_c.on_objects.size(); ++z) {
      h.on_objects[p.from_c.on_objects[z]] = v.on_objects[z];
    }
    for (std::size_t g = 0; g < p.from_b.on_morphisms.size(); ++g) {
      h.on_generators[p.from_b.on_morphisms[g]] = u.on_morphisms[g];
    }
    for (std::size_t g = 0; g < p.from_c.on_morphisms.size(); ++g) {
      h.on_generators[p.from_c.on_morphisms[g]] = v.on_morphisms[g];
    }
    return h;
  }

  std::optional<Concretization> concretize(PresentedGroupoid const& p,
                                           std::size_t              bound) {
    if (bound == 0) {
      throw PreconditionError("concretize: bound must be positive");
    }
    if (auto problems = p.validate(); !problems.empty()) {
      throw PreconditionError("concretize: invalid presentation: "
                              + problems.front());
    }
    std::size_t const n = p.objects.size();

    // Components of the generator graph.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& g : p.generators) {
      int a = find(g.src), b = find(g.dst);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int>              comp_of(n);
    std::vector<std::vector<int>> comp_objects;
    std::map<int, int>            root_comp;
    for (std::size_t x = 0; x < n; ++x) {
      auto [it, fresh] = root_comp.emplace(find(static_cast<int>(x)),
                                           static_cast<int>(comp_objects.size()));
      if (fresh) {
        comp_objects.emplace_back();
      }
      comp_of[x] = it->second;
      comp_objects[it->second].push_back(static_cast<int>(x));
    }
    std::size_t const ncomp = comp_objects.size();

    // Per component: local generator numbering, spanning tree, vertex group.
    std::vector<int>              local(p.generators.size());
    std::vector<std::vector<int>> comp_gens(ncomp);
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      int const c = comp_of[p.generators[g].src];
      local[g]    = static_cast<int>(comp_gens[c].size());
      comp_gens[c].push_back(static_cast<int>(g));
    }
    std::vector<bool> tree(p.generators.size(), false);
    {
      std::vector<bool> reached(n, false);
      for (std::size_t c = 0; c < ncomp; ++c) {
        reached[comp_objects[c].front()] = true;
        bool grew                        = true;
        while (grew) {
          grew = false;
          for (int g : comp_gens[c]) {
            auto const& gen = p.generators[g];
            if (reached[gen.src] != reached[gen.dst]) {
              reached[gen.src] = reached[gen.dst] = true;
              tree[g]                             = true;
              grew                                = true;
            }
          }
        }
      }
    }

    struct ComponentGroup {
      std::size_t              order;
      std::vector<std::size_t> mul;  // order x order
      std::vector<std::size_t> inv;
      std::vector<std::size_t> gen_element;  // by local generator
    };
    std::vector<ComponentGroup> groups(ncomp);
    std::size_t                 total = 0;
    for (std::size_t c = 0; c < ncomp; ++c) {
      std::size_t const k = comp_objects[c].size();
      std::size_t const limit = bound / (k * k);
      if (limit == 0) {
        return std::nullopt;
      }
      GroupPresentation gp;
      gp.generators = comp_gens[c].size();
      for (int g : comp_gens[c]) {
        if (tree[g]) {
          gp.relators.push_back({Letter{local[g]}});
        }
      }
      auto to_local = [&](Word const& w) {
        Word out;
        for (auto l : w) {
          out.push_back(Letter{local[l.generator], l.inverse});
        }
        return out;
      };
      for (auto const& rel : p.relations) {
        if (comp_of[rel.src] != static_cast<int>(c)) {
          continue;
        }
        Word r = to_local(rel.lhs);
        Word s = inverse_word(to_local(rel.rhs));
        r.insert(r.end(), s.begin(), s.end());
        gp.relators.push_back(std::move(r));
      }
      auto const tz = eliminate_generators(gp);
      std::size_t const cap = std::max<std::size_t>(
          64,
          std::min<std::size_t>(8 * limit,
                                4'000'000 / std::max<std::size_t>(
                                                1, 2 * tz.reduced.generators)));
      auto table = enumerate_cosets(tz.reduced, cap);
      if (!table || table->size() > limit) {
        return std::nullopt;
      }
      auto& G = groups[c];
      G.order = table->size();
      G.mul.resize(G.order * G.order);
      for (std::size_t a = 0; a < G.order; ++a) {
        for (std::size_t b = 0; b < G.order; ++b) {
          G.mul[a * G.order + b]
              = static_cast<std::size_t>(table->act(static_cast<int>(a), table->word[b]));
        }
      }
      G.inv.resize(G.order);
      for (std::size_t a = 0; a < G.order; ++a) {
        for (std::size_t b = 0; b < G.order; ++b) {
          if (G.mul[a * G.order + b] == 0) {
            G.inv[a] = b;
          }
        }
      }
      // Values of all local generators, resolving eliminated ones in
      // reverse elimination order via memoized recursion.
      std::size_t const        m = gp.generators;
      std::vector<std::size_t> value(m, 0);
      std::vector<int>         state(m, 0);  // 0 new, 1 visiting, 2 done
      std::function<std::size_t(int)> element = [&](int g) -> std::size_t {
        if (state[g] == 2) {
          return value[g];
        }
        if (state[g] == 1) {
          throw std::logic_error("cyclic Tietze substitution");
        }
        state[g] = 1;
        std::size_t v;
        if (tz.survivor[g] >= 0) {
          v = static_cast<std::size_t>(
              table->act(0, Letter{tz.survivor[g], false}));
        } else {
          v = 0;
          for (auto l : tz.substitution[g]) {
            std::size_t e = element(l.generator);
            if (l.inverse) {
              e = G.inv[e];
            }
            v = G.mul[v * G.order + e];
          }
        }
        state[g] = 2;
        value[g] = v;
        return v;
      };
      for (std::size_t g = 0; g < m; ++g) {
        G.gen_element.push_back(element(static_cast<int>(g)));
      }
      total += k * k * G.order;
      if (total > bound) {
        return std::nullopt;
      }
    }

    // Morphisms are triples (x, y, g) meaning tree(y) o g o tree(x)^-1.
    // position of x within its component
    std::vector<std::size_t> pos(n);
    for (std::size_t c = 0; c < ncomp; ++c) {
      for (std::size_t i = 0; i < comp_objects[c].size(); ++i) {
        pos[comp_objects[c][i]] = i;
      }
    }
    std::vector<std::size_t> comp_offset(ncomp + 1, 0);
    for (std::size_t c = 0; c < ncomp; ++c) {
      std::size_t const k = comp_objects[c].size();
      comp_offset[c + 1]  = comp_offset[c] + k * k * groups[c].order;
    }
    auto triple_index = [&](int x, int y, std::size_t g) {
      std::size_t const c = comp_of[x];
      std::size_t const k = comp_objects[c].size();
      return comp_offset[c] + (pos[x] * k + pos[y]) * groups[c].order + g;
    };
    std::size_t const M = comp_offset[ncomp];
    struct Triple {
      int         x, y;
      std::size_t g;
    };
    std::vector<Triple> triples(M);
    for (std::size_t c = 0; c < ncomp; ++c) {
      for (int x : comp_objects[c]) {
        for (int y : comp_objects[c]) {
          for (std::size_t g = 0; g < groups[c].order; ++g) {
            triples[triple_index(x, y, g)] = {x, y, g};
          }
        }
      }
    }
    auto compose_triples = [&](std::size_t h, std::size_t f) -> std::size_t {
      // h o f with f : x -> y, h : y -> z
      auto const& G = groups[comp_of[triples[f].x]];
      return triple_index(triples[f].x,
                          triples[h].y,
                          G.mul[triples[h].g * G.order + triples[f].g]);
    };
    std::vector<std::size_t> gen_image(p.generators.size());
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      auto const& gen = p.generators[g];
      gen_image[g]    = triple_index(
          gen.src, gen.dst, groups[comp_of[gen.src]].gen_element[local[g]]);
    }
    auto triple_inverse = [&](std::size_t f) {
      auto const& G = groups[comp_of[triples[f].x]];
      return triple_index(triples[f].y, triples[f].x, G.inv[triples[f].g]);
    };

    // Breadth-first words; this also fixes the morphism order.
    std::vector<int>  order_of(M, -1);
    std::vector<int>  order;
    std::vector<Word> words;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const e = triple_index(static_cast<int>(x), static_cast<int>(x), 0);
      order_of[e]         = static_cast<int>(order.size());
      order.push_back(static_cast<int>(e));
      words.push_back({});
    }
    std::vector<std::vector<Letter>> letters_from(n);
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      letters_from[p.generators[g].src].push_back(Letter{static_cast<int>(g), false});
      letters_from[p.generators[g].dst].push_back(Letter{static_cast<int>(g), true});
    }
    for (auto& ls : letters_from) {
      std::sort(ls.begin(), ls.end());
    }
    for (std::size_t q = 0; q < order.size(); ++q) {
      std::size_t const m = static_cast<std::size_t>(order[q]);
      for (auto l : letters_from[triples[m].y]) {
        std::size_t const step
            = l.inverse ? triple_inverse(gen_image[l.generator])
                        : gen_image[l.generator];
        std::size_t const next = compose_triples(step, m);
        if (order_of[next] < 0) {
          order_of[next] = static_cast<int>(order.size());
          order.push_back(static_cast<int>(next));
          Word w{l};
          w.insert(w.end(), words[q].begin(), words[q].end());
          words.push_back(std::move(w));
        }
      }
    }
    if (order.size() != M) {
      throw std::logic_error("concretize: generators do not reach every morphism");
    }

    std::vector<Morphism>  mors;
    std::set<std::string> used;
    for (std::size_t q = 0; q < M; ++q) {
      auto const& t = triples[order[q]];
      std::string id = words[q].empty() ? "1_" + p.objects[t.x]
                                        : p.word_to_string(words[q]);
      // generator ids may themselves contain '*'
      if (!used.insert(id).second) {
        id += "#" + std::to_string(q);
        used.insert(id);
      }
      mors.push_back({std::move(id), t.x, t.y});
    }
    std::vector<int> table(M * M, kNone), ids(n), invs(M);
    for (std::size_t a = 0; a < M; ++a) {
      invs[a] = order_of[triple_inverse(order[a])];
      for (std::size_t b = 0; b < M; ++b) {
        if (triples[order[b]].y == triples[order[a]].x) {
          table[a * M + b] = order_of[compose_triples(order[a], order[b])];
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      ids[x] = static_cast<int>(x);
    }
    Concretization out;
    out.groupoid = share(ConcreteGroupoid(p.objects, mors, table, ids, invs));
    for (auto g : gen_image) {
      out.generator_image.push_back(order_of[g]);
    }
    out.normal_words = std::move(words);
    return out;
  }

  GroupoidFunctor concretize_map(StructureMap const& m, Concretization const& c) {
    GroupoidFunctor F{m.source, c.groupoid, m.on_objects, {}};
    for (int g : m.on_morphisms) {
      F.on_morphisms.push_back(c.generator_image[g]);
    }
    return F;
  }

  GroupoidFunctor concretize_map(PresentedFunctor const& m,
                                 Concretization const&   c) {
    GroupoidFunctor F{c.groupoid, m.target, m.on_objects, {}};
    for (std::size_t k = 0; k < c.normal_words.size(); ++k) {
      F.on_morphisms.push_back(evaluate(*m.target,
                                        map_letters(c.normal_words[k], m.on_generators),
                                        m.on_objects[c.groupoid->src(static_cast<int>(k))]));
    }
    return F;
  }

}  // namespace gpdkit
