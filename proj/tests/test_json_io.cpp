#include <doctest.h>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/json_io.hpp"
#include "gpdkit/search.hpp"

using namespace gpdkit;

TEST_CASE("groupoid round trip") {
  for (auto const* name : {"B1", "BZ3", "BS3", "codiscrete-3", "discrete-2", "BZ2+codiscrete-2",
                           "Z2xcodiscrete-2"}) {
    CAPTURE(name);
    auto const g = fixture(name);
    auto const j = to_json(g);
    auto const h = groupoid_from_json(Json::parse(j.dump()));
    CHECK(h == g);
    CHECK(h.validate().ok());
    CHECK(to_json(h).dump() == j.dump());
  }
}

TEST_CASE("groupoid reading errors") {
  auto j = to_json(fixture("codiscrete-2"));
  j["inverses"].erase("x1->x0");
  auto const g = groupoid_from_json(j);
  auto const r = g.validate();
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().morphisms.front() == "x1->x0");

  CHECK_THROWS_AS(groupoid_from_json(Json::parse(R"j({"morphisms": []})j")), StructuralError);
  CHECK_THROWS_AS(groupoid_from_json(Json::parse(R"j({"objects": [1], "morphisms": []})j")),
                  StructuralError);
  CHECK_THROWS_AS(groupoid_from_json(Json::parse(
                    R"j({"objects": ["a"], "morphisms": [], "compose": [["f", "g"]]})j")),
                  StructuralError);
}

TEST_CASE("functor round trip") {
  auto const a = share(fixture("BZ2"));
  auto const b = share(fixture("Z2xcodiscrete-2"));
  for (auto const& F : enumerate_functors(a, b)) {
    auto const G = functor_from_json(Json::parse(to_json(F).dump()));
    CHECK(G == F);
  }
  auto const named = functor_from_json(Json::parse(R"j({"source": "BZ2", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e", "a": "e"}})j"));
  CHECK(validate_functor(named).ok());
  CHECK(is_functor_json(to_json(named)));
  CHECK_FALSE(is_functor_json(to_json(fixture("B1"))));

  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"source": "BZ2", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e"}})j")),
                  StructuralError);
  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"source": "nosuch", "target": "B1",
      "onObjects": {}, "onMorphisms": {}})j")),
                  StructuralError);
  CHECK_THROWS_AS(functor_from_json(Json::parse(R"j({"source": "B1", "target": "B1",
      "onObjects": {"*": "*", "y": "*"}, "onMorphisms": {"e": "e"}})j")),
                  StructuralError);
}

TEST_CASE("presented round trip") {
  auto const p = PresentedGroupoid::from_concrete(fixture("BS3"));
  auto const j = to_json(p);
  auto const q = presented_from_json(Json::parse(j.dump()));
  CHECK(q.objects == p.objects);
  CHECK(q.generators == p.generators);
  REQUIRE(q.relations.size() == p.relations.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    CHECK(q.relations[i].lhs == p.relations[i].lhs);
    CHECK(q.relations[i].rhs == p.relations[i].rhs);
    CHECK(q.relations[i].src == p.relations[i].src);
  }
  CHECK(to_json(q).dump() == j.dump());

  // a loop of order 3 with an inverse letter
  auto const c3 = presented_from_json(Json::parse(R"j({"objects": ["x"],
      "generators": [{"id": "t", "src": "x", "dst": "x"}],
      "relations": [[["t", "t"], ["t^-1"]]]})j"));
  REQUIRE(c3.relations.size() == 1);
  CHECK(c3.relations[0].rhs == Word{{0, true}});
  auto const real = concretize(c3, 100);
  REQUIRE(real.has_value());
  CHECK(real->groupoid->num_morphisms() == 3);

  CHECK_THROWS_AS(presented_from_json(Json::parse(R"j({"objects": ["x"],
      "generators": [{"id": "t", "src": "x", "dst": "y"}]})j")),
                  StructuralError);
  CHECK_THROWS_AS(presented_from_json(Json::parse(R"j({"objects": ["x"],
      "generators": [{"id": "t", "src": "x", "dst": "x"}], "relations": [[["u"], []]]})j")),
                  StructuralError);
}

TEST_CASE("reports") {
  auto const F = functor_from_json(Json::parse(R"j({"source": "BZ2", "target": "B1",
      "onObjects": {"*": "*"}, "onMorphisms": {"e": "e", "a": "e"}})j"));
  auto const f = to_json(mapping_cylinder_factorization(F));
  CHECK(f["checks"]["composite"] == "pass");
  CHECK(f["middle"]["objects"].size() == 2);

  auto const d = to_json(block_decomposition(groupoid_algebra(share(fixture("BS3"))), 1e-9, 3));
  CHECK(d["seed"] == 3);
  CHECK(d["tol"] == 1e-9);
  CHECK(d["blocks"].size() == 3);
}
