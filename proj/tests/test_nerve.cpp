#include <doctest.h>

#include "gpdkit/builders.hpp"
#include "gpdkit/errors.hpp"
#include "gpdkit/nerve.hpp"
#include "gpdkit/search.hpp"
#include "homology_oracle.hpp"
#include "oracles.hpp"

using namespace gpdkit;

namespace {

  std::vector<std::int64_t> const kPrimes{2, 3, 5, 7};

  oracle::ArrowOps ops(FiniteSampleCategory const& s) {
    return {[&s](int g, int f) { return s.compose(g, f); },
            [&s](int a) { return s.identity(s.arrows()[a].src) == a; },
            [&s](int a) { return s.arrows()[a].src; },
            [&s](int a) { return s.arrows()[a].dst; }};
  }

  oracle::ArrowOps ops(ConcreteGroupoid const& g) {
    return {[&g](int a, int b) { return g.compose(a, b); },
            [&g](int a) { return g.is_identity(a); },
            [&g](int a) { return g.src(a); },
            [&g](int a) { return g.dst(a); }};
  }

  // The poset 0 < 1: identities 0, 1 and the arrow 2.
  FiniteCategory arrow_category() {
    FiniteCategory c;
    c.num_objects = 2;
    c.src         = {0, 1, 0};
    c.dst         = {0, 1, 1};
    c.identity    = {0, 1};
    c.compose     = [](int g, int f) {
      if (f == 0 || f == 1) {
        return g;
      }
      return f;  // g is the identity on 1
    };
    return c;
  }

  std::string text(HomologyProfile const& p) {
    std::string out;
    for (auto const& g : p.groups) {
      out += (out.empty() ? "" : " ") + g.to_string();
    }
    return out;
  }

  bool same_simplices(TruncatedSimplicialSet const& a, TruncatedSimplicialSet const& b) {
    return a.cutoff == b.cutoff && a.simplices == b.simplices;
  }

}  // namespace

TEST_CASE("sample enumeration") {
  auto one = enumerate_sample({"B1"});
  CHECK(one.objects().size() == 1);
  CHECK(one.arrows().size() == 1);

  auto s = enumerate_sample({"B1", "codiscrete-2"});
  CHECK(s.arrows().size() == 8);
  CHECK(s.hom(0, 0).size() == 1);
  CHECK(s.hom(0, 1).size() == 2);
  CHECK(s.hom(1, 0).size() == 1);
  CHECK(s.hom(1, 1).size() == 4);
  // the brute-force oracle agrees on every hom-set
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(s.hom(a, b).size()
            == oracle::count_functors(*s.objects()[a], *s.objects()[b]));
    }
  }

  auto z2 = enumerate_sample({"BZ2"});
  CHECK(z2.arrows().size() == 2);

  // composition is associative and unital
  for (std::size_t f = 0; f < s.arrows().size(); ++f) {
    auto const& af = s.arrows()[f];
    CHECK(s.compose(s.identity(af.dst), static_cast<int>(f)) == static_cast<int>(f));
    CHECK(s.compose(static_cast<int>(f), s.identity(af.src)) == static_cast<int>(f));
    for (int g : s.hom(af.dst, 0)) {
      for (int h : s.hom(0, 1)) {
        CHECK(s.compose(h, s.compose(g, static_cast<int>(f)))
              == s.compose(s.compose(h, g), static_cast<int>(f)));
      }
    }
  }

  CHECK_THROWS_AS(enumerate_sample({"codiscrete-5"}), PreconditionError);
}

TEST_CASE("markings") {
  auto s  = enumerate_sample({"B1", "codiscrete-2"});
  auto w  = marked(s, Marking::w);
  auto c  = marked(s, Marking::c);
  auto wc = marked(s, Marking::wc);
  for (std::size_t a = 0; a < s.arrows().size(); ++a) {
    CHECK(wc[a] == (w[a] && c[a]));
    CHECK(w[a] == is_equivalence(s.arrows()[a].functor));
    CHECK(c[a] == is_cofibration(s.arrows()[a].functor));
  }
  CHECK(to_string(Marking::wg) == "wg");
}

TEST_CASE("nerve examples") {
  auto b1 = nerve(fixture("B1"), 3);
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(b1.count(k) == 1);
  }
  auto bz2 = nerve(fixture("BZ2"), 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(bz2.count(k) == (std::size_t{1} << k));
  }
  auto poset = nerve(arrow_category(), 2);
  CHECK(poset.nondegenerate_count(0) == 2);
  CHECK(poset.nondegenerate_count(1) == 1);
  CHECK(poset.nondegenerate_count(2) == 0);
  CHECK(poset.count(2) == 4);

  for (auto const* name : {"B1", "BZ2", "BZ3", "BS3", "codiscrete-3", "discrete-2"}) {
    CAPTURE(name);
    auto const x = nerve(fixture(name), 3);
    auto const r = x.check_identities();
    CHECK(r.checked > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("nerve budget") {
  auto const s = enumerate_sample({"B1", "codiscrete-2"});
  CHECK_THROWS_AS(nerve(s.category(), 3, 100), BudgetExceeded);
  CHECK_NOTHROW(nerve(s.category(), 3, 1000));
}

TEST_CASE("homology examples") {
  CHECK(text(homology(nerve(fixture("B1"), 2))) == "Z 0");
  CHECK(text(homology(nerve(fixture("BZ2"), 3))) == "Z Z/2 0");
  CHECK(text(homology(nerve(fixture("BZ3"), 3))) == "Z Z/3 0");
  CHECK(text(homology(nerve(fixture("BS3"), 3))) == "Z Z/2 0");
  CHECK(text(homology(nerve(fixture("discrete-2"), 2))) == "Z^2 0");
  CHECK(text(homology(nerve(fixture("codiscrete-3"), 3))) == "Z 0 0");
  CHECK(text(homology(nerve(arrow_category(), 2))) == "Z 0");
}

TEST_CASE("homology components") {
  for (auto const* name : {"B1", "BZ2+BZ3", "discrete-3", "codiscrete-2+B1", "BS3"}) {
    CAPTURE(name);
    auto const g = fixture(name);
    CHECK(homology(nerve(g, 2)).groups.at(0).rank == oracle::count_components(g));
  }
}

TEST_CASE("homology agrees with the reduction oracle on fixture nerves") {
  for (auto const* name : {"B1", "BZ2", "BZ3", "BZ4", "BS3", "BD4", "BQ8", "discrete-2",
                           "codiscrete-2", "codiscrete-3", "BZ2+codiscrete-2",
                           "Z2xcodiscrete-2"}) {
    CAPTURE(name);
    auto const g = fixture(name);
    auto const x = nerve(g, 3);
    CHECK(oracle::profile(homology(x), kPrimes)
          == oracle::profile(oracle::chains(x, ops(g)), kPrimes));
  }
  for (auto const& names : std::vector<std::vector<std::string>>{
         {"B1"}, {"BZ2"}, {"B1", "codiscrete-2"}, {"B1", "BZ2", "codiscrete-2"}}) {
    auto const s = enumerate_sample(names);
    for (auto m : {Marking::all, Marking::w, Marking::c, Marking::wc}) {
      CAPTURE(to_string(m));
      auto const x = nerve(s, m, 3);
      CHECK(oracle::profile(homology(x), kPrimes)
            == oracle::profile(oracle::chains(x, ops(s)), kPrimes));
    }
  }
}

TEST_CASE("sparse and dense elimination agree") {
  auto const x = nerve(fixture("BS3"), 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto       d = smith_diagonal(boundary_matrix(x, k));
    auto const h = homology(x);
    std::vector<long long> dense_torsion;
    for (auto v : d) {
      if (v > 1) {
        dense_torsion.push_back(v);
      }
    }
    std::sort(dense_torsion.begin(), dense_torsion.end());
    CHECK(dense_torsion == h.groups.at(k - 1).torsion);
  }
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("double nerve of a point") {
  auto W = double_nerve_W(enumerate_sample({"B1"}), 2);
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(W.count(m, n) == 1);
    }
  }
  auto D = diagonal(W, enumerate_sample({"B1"}));
  CHECK(text(homology(D.diagonal)) == "Z 0");
}

TEST_CASE("double nerve rows and columns") {
  for (auto const& names : std::vector<std::vector<std::string>>{
         {"B1", "codiscrete-2"}, {"B1", "BZ2", "codiscrete-2"}}) {
    auto const s = enumerate_sample(names);
    auto const W = double_nerve_W(s, 2);
    CHECK(W.check_identities().ok());
    CHECK(W.count(0, 0) == s.objects().size());
    auto const wc = marked(s, Marking::wc);
    CHECK(W.count(1, 0)
          == static_cast<std::size_t>(std::count(wc.begin(), wc.end(), true)));
    CHECK(same_simplices(W.row(0), nerve(s, Marking::wg, 2)));
    CHECK(same_simplices(W.column(0), nerve(s, Marking::wc, 2)));

    auto const D = diagonal(W, s);
    for (std::size_t m = 0; m <= 2; ++m) {
      CHECK(D.diagonal.count(m) == W.count(m, m));
    }
    CHECK(D.diagonal.check_identities().ok());
    CHECK(is_simplicial(D.row0_to_diag, D.wg, D.diagonal));
    CHECK(is_simplicial(D.col0_to_diag, D.wc, D.diagonal));
    REQUIRE(D.diag_to_wg.has_value());
    CHECK(is_simplicial(*D.diag_to_wg, D.diagonal, D.wg));
    CHECK(is_identity(compose(*D.diag_to_wg, D.row0_to_diag)));
    CHECK(is_injective(D.row0_to_diag));
  }
}

TEST_CASE("double nerve budget") {
  CHECK_THROWS_AS(double_nerve_W(enumerate_sample({"B1", "codiscrete-2"}), 3, 1000),
                  BudgetExceeded);
}

TEST_CASE("classification levels") {
  auto const s  = enumerate_sample({"B1", "codiscrete-2"});
  auto const l0 = classification_level(s, 0, 3);
  CHECK(l0.objects == s.objects().size());
  CHECK(same_simplices(l0.nerve, nerve(s, Marking::w, 3)));
  CHECK(same_simplices(l0.cofibrant_nerve, nerve(s, Marking::wc, 3)));

  auto const l1 = classification_level(s, 1, 2);
  CHECK(l1.objects == s.arrows().size());
  CHECK(l1.nerve.check_identities().ok());
  CHECK(is_simplicial(l1.comparison, l1.cofibrant_nerve, l1.nerve));
  CHECK(is_injective(l1.comparison));
  CHECK(homology(l1.nerve).groups.at(0) == homology(l0.nerve).groups.at(0));

  CHECK_THROWS_AS(classification_level(s, 1, 3, 1000), BudgetExceeded);
  CHECK_THROWS_AS(classification_level(s, 3, 2), PreconditionError);
}

TEST_CASE("zig-zag witnesses") {
  auto const cod2 = share(fixture("codiscrete-2"));
  auto const b1   = share(fixture("B1"));
  auto const z    = zigzag_witness(to_terminal(cod2, b1));
  REQUIRE(z.has_value());
  CHECK(z->ok());
  REQUIRE(z->factorization.middle.has_value());
  auto const& mid = *z->factorization.middle->groupoid;
  CHECK(mid.num_objects() == 3);
  CHECK(mid.num_morphisms() == 9);

  auto const id = zigzag_witness(identity_functor(b1));
  REQUIRE(id.has_value());
  CHECK(id->ok());
  CHECK(id->factorization.middle->groupoid->num_objects() == 2);

  auto const z2 = share(fixture("BZ2"));
  auto const z3 = share(fixture("BZ3"));
  auto const collapse = enumerate_functors(z2, z3).at(0);
  CHECK_THROWS_AS(zigzag_witness(collapse), PreconditionError);

  auto const s = enumerate_sample({"B1", "BZ2", "codiscrete-2", "Z2xcodiscrete-2"});
  std::size_t seen = 0;
  for (auto const& a : s.arrows()) {
    if (!a.w) {
      continue;
    }
    auto const w = zigzag_witness(a.functor);
    REQUIRE(w.has_value());
    CHECK(w->ok());
    ++seen;
  }
  CHECK(seen > 0);
}
