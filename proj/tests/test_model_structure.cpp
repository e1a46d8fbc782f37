#include <doctest.h>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/model_structure.hpp"
#include "gpdkit/search.hpp"
#include "oracles.hpp"

using namespace gpdkit;

namespace {

  GroupoidFunctor inclusion(GroupoidPtr a, GroupoidPtr b, std::size_t k = 0) {
    return enumerate_functors(a, b, {.injective_on_objects = true}).at(k);
  }

  bool is_codiscrete(ConcreteGroupoid const& g) {
    std::size_t const n = g.num_objects();
    if (g.num_morphisms() != n * n) {
      return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (g.hom(static_cast<int>(x), static_cast<int>(y)).size() != 1) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<GroupoidPtr> small_fixtures() {
    return {share(fixture("B1")), share(fixture("BZ2")), share(codiscrete(2)),
            share(discrete(2)), share(fixture("BZ3"))};
  }

}  // namespace

TEST_CASE("cylinders") {
  auto const b1 = share(fixture("B1"));
  auto       c  = cylinder(b1);
  CHECK(find_isomorphism(c.total, share(codiscrete(2))).has_value());
  CHECK(c.total->object(0) == "(*,0)");

  c = cylinder(share(discrete(2)));
  CHECK(find_isomorphism(c.total, share(disjoint_union(codiscrete(2), codiscrete(2))))
            .has_value());

  auto const bz2 = share(fixture("BZ2"));
  c              = cylinder(bz2);
  CHECK(c.total->num_morphisms() == 8);
  CHECK(c.total->num_objects() == 2);
  CHECK(oracle::count_components(*c.total) == 1);

  for (auto const& g : small_fixtures()) {
    auto const cy = cylinder(g);
    CHECK(cy.total->validate().ok());
    CHECK(cy.total->num_morphisms() == 4 * g->num_morphisms());
    CHECK(compose(cy.projection, cy.i0) == identity_functor(g));
    CHECK(compose(cy.projection, cy.i1) == identity_functor(g));
    CHECK(is_cofibration(cy.ends));
    CHECK(validate_functor(cy.ends).ok());
    CHECK(is_equivalence(cy.projection));
  }
}

TEST_CASE("good cylinder check") {
  auto const d2 = share(discrete(2));
  auto const c2 = share(codiscrete(2));
  auto const b1 = share(fixture("B1"));

  auto r = good_cylinder_check(inclusion(d2, c2));
  CHECK(r.pass);
  CHECK(r.cocone_commutes);
  // no object of Y + Y is hit by X + X except the images; IX adds its own
  CHECK(r.pushout_objects == 4);
  CHECK(r.target_objects == 4);

  auto const bz2 = share(fixture("BZ2"));
  CHECK(good_cylinder_check(identity_functor(bz2)).pass);

  auto const bad = good_cylinder_check(inclusion(b1, c2), degenerate_cylinder());
  CHECK(bad.cocone_commutes);
  CHECK_FALSE(bad.pass);
  CHECK(bad.pushout_objects == 3);
  CHECK(bad.target_objects == 2);
  REQUIRE(bad.witness.size() == 3);
  CHECK(bad.witness[0] != bad.witness[1]);

  // With a bijective-on-objects cofibration the degenerate cylinder slips
  // through: the check is about objects only.
  CHECK(good_cylinder_check(inclusion(d2, c2), degenerate_cylinder()).pass);

  CHECK_THROWS_AS(good_cylinder_check(to_terminal(c2, b1)), PreconditionError);
}

TEST_CASE("good cylinders for all cofibrations between fixtures") {
  auto const gs = small_fixtures();
  std::size_t checked = 0;
  for (auto const& a : gs) {
    for (auto const& b : gs) {
      for (auto const& F : enumerate_functors(a, b, {.injective_on_objects = true})) {
        CHECK(good_cylinder_check(F).pass);
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("mapping cylinder examples") {
  auto const b1  = share(fixture("B1"));
  auto const bz2 = share(fixture("BZ2"));
  auto const d2  = share(discrete(2));

  auto f = mapping_cylinder_factorization(to_terminal(bz2, b1));
  REQUIRE(f.verified());
  CHECK(f.ok());
  CHECK(is_codiscrete(*f.middle->groupoid));
  CHECK(f.middle->groupoid->num_objects() == 2);

  f = mapping_cylinder_factorization(identity_functor(b1));
  REQUIRE(f.verified());
  CHECK(f.ok());
  CHECK(is_codiscrete(*f.middle->groupoid));
  CHECK(f.middle->groupoid->num_objects() == 2);
  // first is the end inclusion of the cylinder, second collapses it
  CHECK(f.first->on_objects == std::vector<int>{0});
  CHECK(f.second->on_objects == std::vector<int>{0, 0});

  f = mapping_cylinder_factorization(to_terminal(d2, b1));
  REQUIRE(f.verified());
  CHECK(f.ok());
  CHECK(is_codiscrete(*f.middle->groupoid));
  CHECK(f.middle->groupoid->num_objects() == 3);
}

TEST_CASE("mapping cylinder contract on all small functors") {
  auto const gs = small_fixtures();
  for (auto const& a : gs) {
    for (auto const& b : gs) {
      for (auto const& F : enumerate_functors(a, b)) {
        auto const f = mapping_cylinder_factorization(F);
        REQUIRE(f.verified());
        CHECK(f.first_cofibration == Verdict::pass);
        CHECK(f.second_equivalence == Verdict::pass);
        CHECK(f.composite == Verdict::pass);
        CHECK(f.middle->groupoid->num_objects() == a->num_objects() + b->num_objects());
        CHECK(f.middle->groupoid->validate().ok());
      }
    }
  }
}

TEST_CASE("unconcretized middles are reported as unverified") {
  auto const bs3 = share(fixture("BS3"));
  auto const f   = mapping_cylinder_factorization(identity_functor(bs3), 10);
  CHECK_FALSE(f.verified());
  CHECK(f.first_cofibration == Verdict::pass);
  CHECK(f.composite == Verdict::pass);
  CHECK(f.second_equivalence == Verdict::unverified);
  CHECK_FALSE(f.ok());
}

TEST_CASE("factorization is functorial on commuting squares") {
  auto const gs      = small_fixtures();
  std::size_t squares = 0;
  for (auto const& a0 : gs) {
    for (auto const& b0 : gs) {
      for (auto const& F0 : enumerate_functors(a0, b0)) {
        for (auto const& a1 : {gs[0], gs[2]}) {
          for (auto const& b1 : {gs[0], gs[2]}) {
            for (auto const& F1 : enumerate_functors(a1, b1)) {
              for (auto const& alpha : enumerate_functors(a0, a1)) {
                for (auto const& beta : enumerate_functors(b0, b1)) {
                  auto const l = compose(F1, alpha);
                  auto const r = compose(beta, F0);
                  if (l.on_objects != r.on_objects || l.on_morphisms != r.on_morphisms) {
                    continue;
                  }
                  auto const f0 = mapping_cylinder_factorization(F0);
                  auto const f1 = mapping_cylinder_factorization(F1);
                  auto const m  = factorization_map(f0, f1, alpha, beta);
                  CHECK(validate_functor(m).ok());
                  CHECK(compose(m, *f0.first) == compose(*f1.first, alpha));
                  CHECK(compose(*f1.second, m) == compose(beta, *f0.second));
                  ++squares;
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(squares > 20);
}

TEST_CASE("good subcategory axioms") {
  std::vector<GroupoidPtr> sample{share(fixture("B1")), share(fixture("BZ2")),
                                  share(codiscrete(2)), share(discrete(2))};
  auto r = good_subcategory_check(sample, MorphismClass::all);
  CHECK(r.pass());

  r = good_subcategory_check(sample, MorphismClass::cofibrations);
  CHECK(r.pass());
  CHECK(r.factorization_preserves.checked > 0);
  CHECK(r.pushout_stable.checked > 0);

  r = good_subcategory_check(sample, MorphismClass::equivalences);
  CHECK_FALSE(r.pass());
  CHECK(r.cofibrations_contained.verdict == Verdict::fail);
  CHECK_FALSE(r.cofibrations_contained.witness.empty());
}

TEST_CASE("Reedy factorization examples") {
  auto const b1  = share(fixture("B1"));
  auto const bz2 = share(fixture("BZ2"));
  auto const incl = enumerate_functors(b1, bz2).at(0);

  DiagramMorphism t{{{b1, bz2}, {incl}},
                    {{bz2, bz2}, {identity_functor(bz2)}},
                    {incl, identity_functor(bz2)}};
  auto const r = reedy_factorization(t);
  REQUIRE(r.verified());
  CHECK(r.ok());
  CHECK(r.levels[0].middle_concrete->groupoid->num_objects() == 2);
  CHECK(r.levels[1].middle_concrete->groupoid->num_objects() == 3);
  CHECK(r.levels[1].latching_object->objects.size() == 2);
  // BZ2 glued to a Z/2-groupoid at one object: the free product Z/2 * Z/2
  CHECK_FALSE(concretize(*r.levels[1].latching_object, kDefaultConcretizationBound)
                  .has_value());
  for (auto const& l : r.levels) {
    CHECK(l.latching_injective == Verdict::pass);
    CHECK(is_equivalence(*l.second));
  }

  DiagramMorphism id{{{b1, b1}, {identity_functor(b1)}},
                     {{b1, b1}, {identity_functor(b1)}},
                     {identity_functor(b1), identity_functor(b1)}};
  auto const s = reedy_factorization(id);
  REQUIRE(s.verified());
  CHECK(s.ok());
  CHECK(is_codiscrete(*s.levels[0].middle_concrete->groupoid));
  CHECK(s.levels[0].middle_concrete->groupoid->num_objects() == 2);
  // level 1 factors the map out of B1 +_{B1} B~_0, which has two objects
  CHECK(is_codiscrete(*s.levels[1].middle_concrete->groupoid));
  CHECK(s.levels[1].middle_concrete->groupoid->num_objects() == 3);
  for (auto const& l : s.levels) {
    CHECK(is_equivalence(*l.second));
  }

  DiagramMorphism broken = t;
  broken.components[1]   = to_terminal(bz2, b1);
  CHECK_THROWS_AS(reedy_factorization(broken), PreconditionError);
}
