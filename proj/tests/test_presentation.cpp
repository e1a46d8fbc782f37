#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpdkit/builders.hpp"
#include "gpdkit/coset_enumeration.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/presentation.hpp"
#include "gpdkit/search.hpp"
#include "pushout_check.hpp"

using namespace gpdkit;

namespace {

  PresentedGroupoid one_generator(bool involution) {
    PresentedGroupoid p;
    p.objects    = {"*"};
    p.generators = {{"s", 0, 0}};
    if (involution) {
      p.relations.push_back({{Letter{0}, Letter{0}}, {}, 0, 0});
    }
    return p;
  }

  // Distinct normal forms of all words of length <= 8 in s and S = s^-1
  // under the rewriting rules S -> s and ss -> 1.
  std::size_t involution_word_oracle() {
    std::set<std::string> forms;
    for (int len = 0; len <= 8; ++len) {
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::string w;
        for (int k = 0; k < len; ++k) {
          w += (bits >> k & 1) ? 'S' : 's';
        }
        std::replace(w.begin(), w.end(), 'S', 's');
        while (w.find("ss") != std::string::npos) {
          w.erase(w.find("ss"), 2);
        }
        forms.insert(w);
      }
    }
    return forms.size();
  }

  GroupoidFunctor inclusion(GroupoidPtr a, GroupoidPtr b, std::size_t k = 0) {
    return enumerate_functors(a, b, {.injective_on_objects = true}).at(k);
  }

}  // namespace

TEST_CASE("concretize small presentations") {
  auto const two = concretize(one_generator(true), 10);
  REQUIRE(two.has_value());
  CHECK(two->groupoid->num_morphisms() == involution_word_oracle());
  CHECK(two->groupoid->num_morphisms() == 2);
  CHECK(two->groupoid->validate().ok());

  CHECK_FALSE(concretize(one_generator(false), 100).has_value());

  PresentedGroupoid point;
  point.objects = {"*"};
  auto const b1 = concretize(point, 1);
  REQUIRE(b1.has_value());
  CHECK(b1->groupoid->num_morphisms() == 1);

  CHECK_THROWS_AS(concretize(point, 0), PreconditionError);

  PresentedGroupoid bad = one_generator(false);
  bad.generators[0].dst = 7;
  CHECK_THROWS_AS(concretize(bad, 10), PreconditionError);
  CHECK_FALSE(bad.validate().empty());
}

TEST_CASE("concretize recovers groupoids from their tables") {
  for (auto const& name : {"BS3", "codiscrete-3", "Z2xcodiscrete-2", "BQ8",
                           "B1+BZ3", "discrete-2", "BA4"}) {
    CAPTURE(name);
    auto const g = share(fixture(name));
    auto const p = PresentedGroupoid::from_concrete(*g);
    auto const c = concretize(p, kDefaultConcretizationBound);
    REQUIRE(c.has_value());
    CHECK(c->groupoid->validate().ok());
    CHECK(c->groupoid->num_morphisms() == g->num_morphisms());
    CHECK(find_isomorphism(g, c->groupoid).has_value());
    // generator k is morphism k of g; the images form an isomorphism
    GroupoidFunctor F{g, c->groupoid, {}, c->generator_image};
    for (std::size_t x = 0; x < g->num_objects(); ++x) {
      F.on_objects.push_back(static_cast<int>(x));
    }
    CHECK(validate_functor(F).ok());
    CHECK(std::set<int>(F.on_morphisms.begin(), F.on_morphisms.end()).size()
          == g->num_morphisms());
  }
}

TEST_CASE("concretization respects the bound") {
  auto const p = PresentedGroupoid::from_concrete(fixture("BS3"));
  CHECK(concretize(p, 6).has_value());
  CHECK_FALSE(concretize(p, 5).has_value());
  auto const q = PresentedGroupoid::from_concrete(codiscrete(3));
  CHECK(concretize(q, 9).has_value());
  CHECK_FALSE(concretize(q, 8).has_value());
}

TEST_CASE("normal words evaluate to their morphisms") {
  auto const g = share(fixture("S3xcodiscrete-2"));
  auto const c = concretize(PresentedGroupoid::from_concrete(*g), 1000);
  REQUIRE(c.has_value());
  for (std::size_t k = 0; k < c->normal_words.size(); ++k) {
    auto const& w = c->normal_words[k];
    Word        image;
    for (auto l : w) {
      image.push_back(Letter{c->generator_image[l.generator], l.inverse});
    }
    CHECK(evaluate(*c->groupoid, image, c->groupoid->src(static_cast<int>(k)))
          == static_cast<int>(k));
  }
}

TEST_CASE("coset enumeration of standard presentations") {
  // <a, b | a^3, b^2, abab> = S3
  GroupPresentation s3{2,
                       {{Letter{0}, Letter{0}, Letter{0}},
                        {Letter{1}, Letter{1}},
                        {Letter{0}, Letter{1}, Letter{0}, Letter{1}}}};
  auto t = enumerate_cosets(s3, 100);
  REQUIRE(t.has_value());
  CHECK(t->size() == 6);

  // <a, b | a^4, b^2 = a^2, b^-1 a b = a^-1> = Q8
  GroupPresentation q8{2,
                       {{Letter{0}, Letter{0}, Letter{0}, Letter{0}},
                        {Letter{1}, Letter{1}, Letter{0, true}, Letter{0, true}},
                        {Letter{1, true}, Letter{0}, Letter{1}, Letter{0}}}};
  t = enumerate_cosets(q8, 1000);
  REQUIRE(t.has_value());
  CHECK(t->size() == 8);

  GroupPresentation z{1, {}};
  CHECK_FALSE(enumerate_cosets(z, 50).has_value());
}

TEST_CASE("Tietze elimination keeps the group") {
  // <a, b, c | c = ab, a^2, b^2, (ab)^3> with c eliminated
  GroupPresentation p{3,
                      {{Letter{2}, Letter{1, true}, Letter{0, true}},
                       {Letter{0}, Letter{0}},
                       {Letter{1}, Letter{1}},
                       {Letter{2}, Letter{2}, Letter{2}}}};
  auto const tz = eliminate_generators(p);
  CHECK(tz.reduced.generators < 3);
  auto const t = enumerate_cosets(tz.reduced, 100);
  REQUIRE(t.has_value());
  CHECK(t->size() == 6);
}

TEST_CASE("pushout along an identity cofibration") {
  auto const c2 = share(codiscrete(2));
  auto const z2 = share(fixture("Z2xcodiscrete-2"));
  auto const f  = inclusion(c2, z2);
  auto const p  = pushout_along_cofibration(identity_functor(c2), f);
  CHECK(p.presentation->objects.size() == 2);
  auto const c = concretize(*p.presentation, kDefaultConcretizationBound);
  REQUIRE(c.has_value());
  CHECK(find_isomorphism(c->groupoid, z2).has_value());
}

TEST_CASE("pushout adjoining a group to a point") {
  auto const b1  = share(fixture("B1"));
  auto const bz2 = share(fixture("BZ2"));
  auto const p   = pushout_along_cofibration(inclusion(b1, bz2), identity_functor(b1));
  auto const c   = concretize(*p.presentation, 10);
  REQUIRE(c.has_value());
  CHECK(find_isomorphism(c->groupoid, bz2).has_value());
}

TEST_CASE("pushouts are only formed along cofibrations") {
  auto const b1 = share(fixture("B1"));
  auto const c2 = share(codiscrete(2));
  CHECK_THROWS_AS(pushout_along_cofibration(to_terminal(c2, b1), to_terminal(c2, b1)),
                  PreconditionError);
}

TEST_CASE("two intervals glued along their ends have an infinite loop group") {
  auto const d2 = share(discrete(2));
  auto const c2 = share(codiscrete(2));
  auto const i  = inclusion(d2, c2);
  auto const p  = pushout_along_cofibration(i, i);
  auto const& P = *p.presentation;
  REQUIRE(P.objects.size() == 2);
  CHECK(P.validate().empty());
  CHECK_FALSE(concretize(P, kDefaultConcretizationBound).has_value());

  // The loop x0 -> x1 (via b) -> x0 (via c) maps onto a generator of Z/n
  // under a functor to BZn, for every n: the vertex group is infinite.
  auto const b_edge = *c2->find_morphism("x0->x1");
  auto const loop   = Word{Letter{p.from_c.on_morphisms[*c2->find_morphism("x1->x0")]},
                           Letter{p.from_b.on_morphisms[b_edge]}};
  for (std::size_t n = 2; n <= 7; ++n) {
    auto const bz = share(classifying(FiniteGroup::cyclic(n)));
    PresentedFunctor h{p.presentation, bz, {0, 0}, {}};
    h.on_generators.assign(P.generators.size(), 0);
    h.on_generators[p.from_b.on_morphisms[b_edge]] = 1;
    h.on_generators[p.from_b.on_morphisms[*c2->find_morphism("x1->x0")]]
        = static_cast<int>(n - 1);
    CHECK(h.validate().empty());
    CHECK(evaluate(*bz, {Letter{h.on_generators[loop[0].generator]},
                         Letter{h.on_generators[loop[1].generator]}},
                   0)
          == 1);
  }
}

TEST_CASE("structure map out of the second leg is a cofibration") {
  auto const b1  = share(fixture("B1"));
  auto const c2  = share(codiscrete(2));
  auto const bz2 = share(fixture("BZ2"));
  auto const p   = pushout_along_cofibration(inclusion(b1, c2), inclusion(b1, bz2));
  std::set<int> objs(p.from_c.on_objects.begin(), p.from_c.on_objects.end());
  CHECK(objs.size() == p.from_c.on_objects.size());
  auto const c = concretize(*p.presentation, 100);
  REQUIRE(c.has_value());
  CHECK(c->groupoid->num_objects() == 2);
  CHECK(c->groupoid->num_morphisms() == 8);
  CHECK(is_cofibration(concretize_map(p.from_c, *c)));
}

TEST_CASE("universal property against small targets") {
  std::vector<GroupoidPtr> targets{share(fixture("B1")), share(fixture("BZ2")),
                                   share(codiscrete(2)), share(discrete(2)),
                                   share(fixture("Z2xcodiscrete-2"))};
  auto const b1  = share(fixture("B1"));
  auto const bz2 = share(fixture("BZ2"));
  auto const c2  = share(codiscrete(2));
  auto const d2  = share(discrete(2));

  auto r = oracle::check_universal_property(inclusion(b1, c2), to_terminal(b1, b1),
                                            targets, 1000);
  CHECK(r.failures == 0);
  CHECK(r.cocones > 0);

  // collapsing both ends of an interval would give BZ; keep one end apart
  r = oracle::check_universal_property(inclusion(b1, d2), inclusion(b1, c2),
                                       targets, 1000);
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cocones > 0);

  r = oracle::check_universal_property(inclusion(b1, bz2), enumerate_functors(b1, c2)[0],
                                       targets, 1000);
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
}
