#include "gpdkit/model_structure.hpp"

#include <map>
#include <set>
#include <tuple>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/search.hpp"

namespace gpdkit {

  std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::unverified:
        return "unverified";
    }
    return "unverified";
  }

  Verdict verdict(bool ok) {
    return ok ? Verdict::pass : Verdict::fail;
  }

  namespace {

    bool same_maps(GroupoidFunctor const& a, GroupoidFunctor const& b) {
      return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
    }

    bool injective(std::vector<int> const& v) {
      return std::set<int>(v.begin(), v.end()).size() == v.size();
    }

    // Index of the interval identity at end e.
    int interval_identity(int e) {
      return e == 0 ? 0 : 3;
    }

  }  // namespace

  Cylinder cylinder(GroupoidPtr g) {
    auto const I     = interval();
    Cylinder   c;
    c.base     = g;
    c.total    = share(product(*g, I));
    c.base_sum = share(disjoint_union(*g, *g));
    for (int e = 0; e < 2; ++e) {
      GroupoidFunctor end{g, c.total, {}, {}};
      for (std::size_t x = 0; x < g->num_objects(); ++x) {
        end.on_objects.push_back(static_cast<int>(2 * x) + e);
      }
      for (std::size_t f = 0; f < g->num_morphisms(); ++f) {
        end.on_morphisms.push_back(static_cast<int>(4 * f) + interval_identity(e));
      }
      (e == 0 ? c.i0 : c.i1) = std::move(end);
    }
    c.ends       = copair(c.base_sum, c.i0, c.i1);
    c.projection = GroupoidFunctor{c.total, g, {}, {}};
    for (std::size_t k = 0; k < c.total->num_objects(); ++k) {
      c.projection.on_objects.push_back(static_cast<int>(k / 2));
    }
    for (std::size_t k = 0; k < c.total->num_morphisms(); ++k) {
      c.projection.on_morphisms.push_back(static_cast<int>(k / 4));
    }
    return c;
  }

  CylinderFunctor standard_cylinder() {
    return {"standard",
            [](GroupoidPtr g) { return cylinder(std::move(g)); },
            [](GroupoidFunctor const& F, Cylinder const& cx, Cylinder const& cy) {
              GroupoidFunctor IF{cx.total, cy.total, {}, {}};
              for (std::size_t k = 0; k < cx.total->num_objects(); ++k) {
                IF.on_objects.push_back(F.on_objects[k / 2] * 2
                                        + static_cast<int>(k % 2));
              }
              for (std::size_t k = 0; k < cx.total->num_morphisms(); ++k) {
                IF.on_morphisms.push_back(F.on_morphisms[k / 4] * 4
                                          + static_cast<int>(k % 4));
              }
              return IF;
            }};
  }

  CylinderFunctor degenerate_cylinder() {
    return {"degenerate",
            [](GroupoidPtr g) {
              Cylinder c;
              c.base       = g;
              c.total      = g;
              c.base_sum   = share(disjoint_union(*g, *g));
              c.i0         = identity_functor(g);
              c.i1         = identity_functor(g);
              c.ends       = copair(c.base_sum, c.i0, c.i1);
              c.projection = identity_functor(g);
              return c;
            },
            [](GroupoidFunctor const& F, Cylinder const& cx, Cylinder const& cy) {
              return GroupoidFunctor{cx.total, cy.total, F.on_objects, F.on_morphisms};
            }};
  }

  GoodCylinderReport good_cylinder_check(GroupoidFunctor const& i,
                                         CylinderFunctor const& cyl) {
    if (!is_cofibration(i)) {
      throw PreconditionError("good_cylinder_check: the functor is not a cofibration");
    }
    auto const cx = cyl.on_objects(i.source);
    auto const cy = cyl.on_objects(i.target);
    auto const ii = coproduct_map(cx.base_sum, cy.base_sum, i, i);
    auto const p  = pushout_along_cofibration(ii, cx.ends);
    auto const Ii = cyl.on_functors(i, cx, cy);

    GoodCylinderReport r;
    r.cocone_commutes = same_maps(compose(cy.ends, ii), compose(Ii, cx.ends));
    r.pushout_objects = p.presentation->objects.size();
    r.target_objects  = cy.total->num_objects();
    if (!r.cocone_commutes) {
      return r;
    }
    auto const h = induced_map(p, cy.ends, Ii);
    std::map<int, int> seen;
    for (std::size_t k = 0; k < h.on_objects.size(); ++k) {
      auto [it, fresh] = seen.emplace(h.on_objects[k], static_cast<int>(k));
      if (!fresh && r.witness.empty()) {
        r.witness = {p.presentation->objects[it->second],
                     p.presentation->objects[k],
                     cy.total->object(h.on_objects[k])};
      }
    }
    r.pass = r.witness.empty();
    return r;
  }

  Factorization mapping_cylinder_factorization(GroupoidFunctor const& F,
                                               std::size_t            bound) {
    auto const& A   = F.source;
    auto const& B   = F.target;
    auto const  cyl = cylinder(A);
    auto const  AB  = share(disjoint_union(*A, *B));
    auto const  idF = coproduct_map(cyl.base_sum, AB, identity_functor(A), F);

    Factorization out;
    out.original = F;
    out.pushout  = pushout_along_cofibration(cyl.ends, idF);
    auto const& P = out.pushout;

    out.first_presented = StructureMap{A, P.presentation, {}, {}};
    for (std::size_t x = 0; x < A->num_objects(); ++x) {
      out.first_presented.on_objects.push_back(P.from_c.on_objects[x]);
    }
    for (std::size_t f = 0; f < A->num_morphisms(); ++f) {
      out.first_presented.on_morphisms.push_back(P.from_c.on_morphisms[f]);
    }
    out.second_presented = induced_map(P,
                                       compose(F, cyl.projection),
                                       copair(AB, F, identity_functor(B)));

    // Exact on the generating data, with or without a concretization.
    bool composite = true;
    for (std::size_t x = 0; x < A->num_objects(); ++x) {
      composite = composite
                  && out.second_presented.on_objects[out.first_presented.on_objects[x]]
                         == F.on_objects[x];
    }
    for (std::size_t f = 0; f < A->num_morphisms(); ++f) {
      composite
          = composite
            && out.second_presented.on_generators[out.first_presented.on_morphisms[f]]
                   == F.on_morphisms[f];
    }
    out.first_cofibration = verdict(injective(out.first_presented.on_objects));
    out.composite         = verdict(composite);

    out.middle = concretize(*P.presentation, bound);
    if (!out.middle) {
      return out;
    }
    out.first  = concretize_map(out.first_presented, *out.middle);
    out.second = concretize_map(out.second_presented, *out.middle);
    out.first_cofibration  = verdict(is_cofibration(*out.first));
    out.second_equivalence = verdict(validate_functor(*out.second).ok()
                                     && is_equivalence(*out.second));
    out.composite = verdict(composite && compose(*out.second, *out.first) == F);
    return out;
  }

  GroupoidFunctor factorization_map(Factorization const&   f0,
                                    Factorization const&   f1,
                                    GroupoidFunctor const& a,
                                    GroupoidFunctor const& b) {
    if (!f0.middle || !f1.middle) {
      throw PreconditionError("factorization_map: a middle did not concretize");
    }
    if (!same_maps(compose(f1.original, a), compose(b, f0.original))) {
      throw PreconditionError("factorization_map: the square does not commute");
    }
    auto const& P0 = f0.pushout;
    auto const& P1 = f1.pushout;
    auto const& M1 = *f1.middle;
    std::size_t const ma0 = f0.original.source->num_morphisms();
    std::size_t const ma1 = f1.original.source->num_morphisms();
    std::size_t const na0 = f0.original.source->num_objects();
    std::size_t const na1 = f1.original.source->num_objects();

    PresentedFunctor H{P0.presentation, M1.groupoid, {}, {}};
    H.on_objects.assign(P0.presentation->objects.size(), kNone);
    H.on_generators.assign(P0.presentation->generators.size(), kNone);
    // cylinder part
    for (std::size_t k = 0; k < P0.from_b.on_morphisms.size(); ++k) {
      std::size_t const image = a.on_morphisms[k / 4] * 4 + k % 4;
      H.on_generators[P0.from_b.on_morphisms[k]]
          = M1.generator_image[P1.from_b.on_morphisms[image]];
    }
    for (std::size_t k = 0; k < P0.from_b.on_objects.size(); ++k) {
      std::size_t const image = a.on_objects[k / 2] * 2 + k % 2;
      H.on_objects[P0.from_b.on_objects[k]] = P1.from_b.on_objects[image];
    }
    // A + B part
    for (std::size_t k = 0; k < P0.from_c.on_morphisms.size(); ++k) {
      std::size_t const image = k < ma0 ? a.on_morphisms[k]
                                        : ma1 + b.on_morphisms[k - ma0];
      H.on_generators[P0.from_c.on_morphisms[k]]
          = M1.generator_image[P1.from_c.on_morphisms[image]];
    }
    for (std::size_t k = 0; k < P0.from_c.on_objects.size(); ++k) {
      std::size_t const image = k < na0 ? a.on_objects[k]
                                        : na1 + b.on_objects[k - na0];
      H.on_objects[P0.from_c.on_objects[k]] = P1.from_c.on_objects[image];
    }
    return concretize_map(H, *f0.middle);
  }

  std::string_view to_string(MorphismClass c) {
    switch (c) {
      case MorphismClass::all:
        return "all";
      case MorphismClass::cofibrations:
        return "cofibrations";
      case MorphismClass::equivalences:
        return "equivalences";
    }
    return "all";
  }

  bool contains(MorphismClass c, GroupoidFunctor const& F) {
    switch (c) {
      case MorphismClass::all:
        return true;
      case MorphismClass::cofibrations:
        return is_cofibration(F);
      case MorphismClass::equivalences:
        return is_equivalence(F);
    }
    return false;
  }

  Verdict contains(MorphismClass c, PresentedFunctor const& F, std::size_t bound) {
    switch (c) {
      case MorphismClass::all:
        return Verdict::pass;
      case MorphismClass::cofibrations:
        return verdict(F.injective_on_objects());
      case MorphismClass::equivalences: {
        auto const m = concretize(*F.source, bound);
        if (!m) {
          return Verdict::unverified;
        }
        return verdict(is_equivalence(concretize_map(F, *m)));
      }
    }
    return Verdict::unverified;
  }

  namespace {

    Verdict contains(MorphismClass c, StructureMap const& F, std::size_t bound) {
      switch (c) {
        case MorphismClass::all:
          return Verdict::pass;
        case MorphismClass::cofibrations:
          return verdict(injective(F.on_objects));
        case MorphismClass::equivalences: {
          auto const m = concretize(*F.target, bound);
          if (!m) {
            return Verdict::unverified;
          }
          return verdict(is_equivalence(concretize_map(F, *m)));
        }
      }
      return Verdict::unverified;
    }

    std::string describe(GroupoidFunctor const& F,
                         std::vector<GroupoidPtr> const& sample,
                         std::size_t a, std::size_t b) {
      std::string out = "functor from sample[" + std::to_string(a) + "] to sample["
                        + std::to_string(b) + "] with objects [";
      for (std::size_t x = 0; x < F.on_objects.size(); ++x) {
        out += (x ? "," : "") + sample[b]->object(F.on_objects[x]);
      }
      return out + "]";
    }

    void record(AxiomReport& r, Verdict v, std::string const& witness) {
      ++r.checked;
      if (v == Verdict::unverified) {
        ++r.unknown;
        if (r.verdict == Verdict::pass) {
          r.verdict = Verdict::unverified;
        }
      } else if (v == Verdict::fail && r.verdict != Verdict::fail) {
        r.verdict = Verdict::fail;
        r.witness = witness;
      }
    }

  }  // namespace

  GoodSubcategoryReport good_subcategory_check(std::vector<GroupoidPtr> const& sample,
                                               MorphismClass                   cls,
                                               std::size_t                     bound) {
    std::size_t const n = sample.size();
    std::vector<std::vector<std::vector<GroupoidFunctor>>> fun(
        n, std::vector<std::vector<GroupoidFunctor>>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        fun[a][b] = enumerate_functors(sample[a], sample[b]);
      }
    }
    GoodSubcategoryReport r;

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (auto const& F : fun[a][b]) {
          if (is_cofibration(F)) {
            record(r.cofibrations_contained, verdict(contains(cls, F)),
                   "cofibration not in class: " + describe(F, sample, a, b));
          }
        }
      }
    }

    // pushout of u : A -> C along a cofibration i : A -> B gives B -> P
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (auto const& i : fun[a][b]) {
          if (!is_cofibration(i)) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            for (auto const& u : fun[a][c]) {
              if (!contains(cls, u)) {
                continue;
              }
              auto const p = pushout_along_cofibration(i, u);
              record(r.pushout_stable, contains(cls, p.from_b, bound),
                     "pushout of " + describe(u, sample, a, c) + " along "
                         + describe(i, sample, a, b) + " leaves the class");
            }
          }
        }
      }
    }

    // squares with vertical maps in the class
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Factorization> cache;
    auto factor = [&](std::size_t a, std::size_t b, std::size_t k) -> Factorization const& {
      auto key = std::make_tuple(a, b, k);
      auto it  = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, mapping_cylinder_factorization(fun[a][b][k], bound)).first;
      }
      return it->second;
    };
    for (std::size_t a0 = 0; a0 < n; ++a0) {
      for (std::size_t b0 = 0; b0 < n; ++b0) {
        for (std::size_t a1 = 0; a1 < n; ++a1) {
          for (std::size_t b1 = 0; b1 < n; ++b1) {
            for (std::size_t k0 = 0; k0 < fun[a0][b0].size(); ++k0) {
              for (std::size_t k1 = 0; k1 < fun[a1][b1].size(); ++k1) {
                for (auto const& alpha : fun[a0][a1]) {
                  if (!contains(cls, alpha)) {
                    continue;
                  }
                  for (auto const& beta : fun[b0][b1]) {
                    if (!contains(cls, beta)
                        || !same_maps(compose(fun[a1][b1][k1], alpha),
                                      compose(beta, fun[a0][b0][k0]))) {
                      continue;
                    }
                    auto const& f0 = factor(a0, b0, k0);
                    auto const& f1 = factor(a1, b1, k1);
                    if (!f0.middle || !f1.middle) {
                      record(r.factorization_preserves, Verdict::unverified, "");
                      continue;
                    }
                    auto const middle = factorization_map(f0, f1, alpha, beta);
                    auto const p      = pushout_along_cofibration(*f0.first, alpha);
                    auto const h      = induced_map(p, middle, *f1.first);
                    record(r.factorization_preserves, contains(cls, h, bound),
                           "pushout-corner map of the square over "
                               + describe(alpha, sample, a0, a1) + " and "
                               + describe(beta, sample, b0, b1) + " leaves the class");
                  }
                }
              }
            }
          }
        }
      }
    }
    return r;
  }

  void ReedyDiagram::check() const {
    if (objects.size() != arrows.size() + 1) {
      throw PreconditionError("diagram: need one more object than arrows");
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto const& F = arrows[i];
      if (!(F.source == objects[i] || *F.source == *objects[i])
          || !(F.target == objects[i + 1] || *F.target == *objects[i + 1])) {
        throw PreconditionError("diagram: arrow " + std::to_string(i)
                                + " does not chain");
      }
    }
  }

  bool ReedyFactorization::verified() const {
    for (auto const& l : levels) {
      if (!l.first || !l.second) {
        return false;
      }
    }
    return true;
  }

  bool ReedyFactorization::ok() const {
    for (auto const& l : levels) {
      if (l.first_cofibration != Verdict::pass || l.latching_injective != Verdict::pass
          || l.second_equivalence != Verdict::pass || l.squares_commute != Verdict::pass) {
        return false;
      }
    }
    return true;
  }

  PresentedCylinder presented_mapping_cylinder(PresentedFunctor const& h) {
    auto const& P  = *h.source;
    auto const& B  = *h.target;
    int const   np = static_cast<int>(P.objects.size());
    int const   gp = static_cast<int>(P.generators.size());
    int const   mb = static_cast<int>(B.num_morphisms());

    auto M     = std::make_shared<PresentedGroupoid>();
    M->objects = P.objects;
    for (auto const& y : B.objects()) {
      M->objects.push_back(y);
    }
    M->generators = P.generators;
    for (auto const& f : B.morphisms()) {
      M->generators.push_back({f.id, f.src + np, f.dst + np});
    }
    for (int p = 0; p < np; ++p) {
      M->generators.push_back({"rung:" + P.objects[p], p, h.on_objects[p] + np});
    }
    M->relations = P.relations;
    for (int a = 0; a < mb; ++a) {
      for (int b = 0; b < mb; ++b) {
        int const ab = B.compose(a, b);
        if (ab != kNone) {
          M->relations.push_back(
              {{Letter{gp + a}, Letter{gp + b}}, {Letter{gp + ab}}, B.src(b) + np, B.dst(a) + np});
        }
      }
    }
    for (int g = 0; g < gp; ++g) {
      int const p = P.generators[g].src;
      int const q = P.generators[g].dst;
      M->relations.push_back({{Letter{gp + mb + q}, Letter{g}},
                              {Letter{gp + h.on_generators[g]}, Letter{gp + mb + p}},
                              p,
                              h.on_objects[q] + np});
    }

    PresentedCylinder out;
    out.middle = M;
    for (int p = 0; p < np; ++p) {
      out.first_on_objects.push_back(p);
    }
    for (int g = 0; g < gp; ++g) {
      out.first_on_generators.push_back(g);
    }
    out.second = PresentedFunctor{M, h.target, h.on_objects, h.on_generators};
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
      out.second.on_objects.push_back(static_cast<int>(y));
    }
    for (int f = 0; f < mb; ++f) {
      out.second.on_generators.push_back(f);
    }
    for (int p = 0; p < np; ++p) {
      out.second.on_generators.push_back(B.identity(h.on_objects[p]));
    }
    return out;
  }

  ReedyFactorization reedy_factorization(DiagramMorphism const& t, std::size_t bound) {
    t.source.check();
    t.target.check();
    std::size_t const k = t.source.length();
    if (k > 3) {
      throw PreconditionError("reedy_factorization: diagrams longer than [3]");
    }
    if (t.target.length() != k || t.components.size() != k + 1) {
      throw PreconditionError("reedy_factorization: shapes do not match");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!same_maps(compose(t.components[i + 1], t.source.arrows[i]),
                     compose(t.target.arrows[i], t.components[i]))) {
        throw PreconditionError("reedy_factorization: square " + std::to_string(i)
                                + " does not commute");
      }
    }

    ReedyFactorization out;
    out.levels.resize(k + 1);
    {
      auto&      l0 = out.levels[0];
      auto const f  = mapping_cylinder_factorization(t.components[0], bound);
      l0.latching_object = std::make_shared<PresentedGroupoid const>(
          PresentedGroupoid::from_concrete(*t.source.objects[0]));
      l0.middle              = f.pushout.presentation;
      l0.latching_on_objects = f.first_presented.on_objects;
      l0.latching_injective  = verdict(injective(l0.latching_on_objects));
      l0.first_cofibration   = f.first_cofibration;
      if (!f.verified()) {
        return out;
      }
      l0.middle_concrete    = f.middle;
      l0.first              = f.first;
      l0.second             = f.second;
      l0.second_equivalence = f.second_equivalence;
      l0.squares_commute    = f.composite;
    }
    for (std::size_t i = 0; i < k; ++i) {
      auto const& prev = out.levels[i];
      auto&       next = out.levels[i + 1];
      auto const& a    = t.source.arrows[i];
      auto const& b    = t.target.arrows[i];
      auto const  P    = pushout_along_cofibration(*prev.first, a);
      auto const  h = induced_map(P, compose(b, *prev.second), t.components[i + 1]);
      auto const  cyl = presented_mapping_cylinder(h);

      next.latching_object = P.presentation;
      next.middle          = cyl.middle;
      for (int y : cyl.first_on_objects) {
        next.latching_on_objects.push_back(y);
      }
      next.latching_injective = verdict(injective(next.latching_on_objects));
      // A_{i+1} -> P is injective on objects and so is the latching map
      std::vector<int> first_objects;
      for (int x : P.from_c.on_objects) {
        first_objects.push_back(cyl.first_on_objects[x]);
      }
      next.first_cofibration = verdict(injective(first_objects));

      next.middle_concrete = concretize(*cyl.middle, bound);
      if (!next.middle_concrete) {
        return out;
      }
      auto const& M = *next.middle_concrete;
      auto through  = [&](StructureMap const& j) {
        GroupoidFunctor F{j.source, M.groupoid, {}, {}};
        for (int x : j.on_objects) {
          F.on_objects.push_back(cyl.first_on_objects[x]);
        }
        for (int g : j.on_morphisms) {
          F.on_morphisms.push_back(M.generator_image[cyl.first_on_generators[g]]);
        }
        return F;
      };
      next.first      = through(P.from_c);
      next.connecting = through(P.from_b);
      next.second     = concretize_map(cyl.second, M);

      next.first_cofibration  = verdict(is_cofibration(*next.first));
      next.second_equivalence = verdict(validate_functor(*next.second).ok()
                                        && is_equivalence(*next.second));
      next.squares_commute    = verdict(
          validate_functor(*next.first).ok() && validate_functor(*next.connecting).ok()
          && same_maps(compose(*next.second, *next.connecting), compose(b, *prev.second))
          && same_maps(compose(*next.connecting, *prev.first), compose(*next.first, a))
          && same_maps(compose(*next.second, *next.first), t.components[i + 1]));
    }
    return out;
  }

}  // namespace gpdkit
