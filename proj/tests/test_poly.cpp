#include <algorithm>

#include "doctest.h"
#include "wiman/poly.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("poly");

TEST_CASE("difference of squares over GF(19)") {
  Field f = Field::gf(19);
  auto fac = factor_univariate(Poly::from_ints(f, {-1, 0, 1}));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.unit.is_one());
  Poly minus = Poly::from_ints(f, {18, 1});  // t - 1
  Poly plus = Poly::from_ints(f, {1, 1});    // t + 1
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.factors[1].second == 1);
  bool found_minus = fac.factors[0].first == minus || fac.factors[1].first == minus;
  bool found_plus = fac.factors[0].first == plus || fac.factors[1].first == plus;
  CHECK(found_minus);
  CHECK(found_plus);
}

TEST_CASE("t^2 - r is irreducible for a non-residue r") {
  Field f = Field::gf(19);
  // 2^9 = 512 = -1 mod 19, so 2 is a non-residue
  CHECK(f.from_int(2).pow(9) == f.from_int(-1));
  Poly g = Poly::from_ints(f, {-2, 0, 1});
  CHECK(is_irreducible(g));
  auto fac = factor_univariate(g);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first.degree() == 2);
}

TEST_CASE("t^3 - t over GF(3) splits into the three linear factors") {
  Field f = Field::gf(3);
  auto fac = factor_univariate(Poly::from_ints(f, {0, -1, 0, 1}));
  REQUIRE(fac.factors.size() == 3);
  auto rts = roots(Poly::from_ints(f, {0, -1, 0, 1}));
  REQUIRE(rts.size() == 3);
  CHECK(rts[0] == f.from_int(0));
  CHECK(rts[1] == f.from_int(1));
  CHECK(rts[2] == f.from_int(2));
}

TEST_CASE("zero polynomial is rejected") {
  Field f = Field::gf(5);
  CHECK_THROWS_AS(factor_univariate(Poly(f)), domain_error);
  CHECK_THROWS_AS(roots(Poly(f)), domain_error);
}

TEST_CASE("multiply-back identity on random polynomials") {
  for (Field f : {Field::gf(19), Field::gf(3), Field::gf(19, 2)}) {
    Rng rng(f.p() * 1000 + f.k());
    for (int trial = 0; trial < 1000; ++trial) {
      unsigned deg = 1 + static_cast<unsigned>(rng.below(8));
      std::vector<Fe> c;
      for (unsigned i = 0; i <= deg; ++i) c.push_back(f.sample(rng));
      Poly p(f, std::move(c));
      if (p.degree() < 1) continue;
      auto fac = factor_univariate(p);
      Poly back = Poly::constant(fac.unit);
      for (const auto& [g, mult] : fac.factors) {
        CHECK(g.lc().is_one());
        for (unsigned i = 0; i < mult; ++i) back = back * g;
      }
      CHECK(back == p);
    }
  }
}

TEST_CASE("factorization is deterministic run to run") {
  Field f = Field::gf(19, 2);
  Rng rng(99);
  std::vector<Fe> c;
  for (int i = 0; i <= 8; ++i) c.push_back(f.sample(rng));
  Poly p(f, c);
  auto a = factor_univariate(p);
  auto b = factor_univariate(p);
  REQUIRE(a.factors.size() == b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].first == b.factors[i].first);
    CHECK(a.factors[i].second == b.factors[i].second);
  }
}

TEST_CASE("gcd and exact division") {
  Field f = Field::gf(7);
  Poly a = Poly::from_ints(f, {1, 2, 1});   // (t+1)^2
  Poly b = Poly::from_ints(f, {1, 1});      // t+1
  CHECK(Poly::gcd(a, b) == b);
  CHECK(a.exact_div(b) == b);
  CHECK_THROWS_AS(Poly::from_ints(f, {1, 0, 1}).exact_div(b), integrity_error);
}

TEST_SUITE_END();
