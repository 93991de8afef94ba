#include "doctest.h"
#include "wiman/homogeneous.hpp"
#include "wiman/wiman_curve.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("homogeneous");

TEST_CASE("composition with a coordinate projection and with the identity") {
  Field f = Field::gf(19);
  TriPoly X = TriPoly::from_terms(f, 1, {{{1, 0, 0}, 1}});
  TriPoly Y = TriPoly::from_terms(f, 1, {{{0, 1, 0}, 1}});
  TriPoly Z = TriPoly::from_terms(f, 1, {{{0, 0, 1}, 1}});
  CurveMap alpha = wiman_alpha_unchecked(19);
  CHECK(TriPoly::compose(X, alpha.forms[0], alpha.forms[1], alpha.forms[2]) == alpha.forms[0]);
  TriPoly F = TriPoly::from_terms(f, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  CHECK(TriPoly::compose(F, X, Y, Z) == F);
}

TEST_CASE("composition commutes with evaluation") {
  Field f = Field::gf(19);
  TriPoly F = wiman_form(f);
  CurveMap alpha = wiman_alpha_unchecked(19);
  TriPoly comp = TriPoly::compose(F, alpha.forms[0], alpha.forms[1], alpha.forms[2]);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Fe x = f.sample(rng), y = f.sample(rng), z = f.sample(rng);
    Fe g0 = alpha.forms[0].eval(x, y, z);
    Fe g1 = alpha.forms[1].eval(x, y, z);
    Fe g2 = alpha.forms[2].eval(x, y, z);
    CHECK(comp.eval(x, y, z) == F.eval(g0, g1, g2));
  }
}

TEST_CASE("degree and field mismatches are rejected") {
  Field f = Field::gf(19);
  TriPoly F = TriPoly::from_terms(f, 2, {{{2, 0, 0}, 1}});
  TriPoly L = TriPoly::from_terms(f, 1, {{{1, 0, 0}, 1}});
  TriPoly Q = TriPoly::from_terms(f, 2, {{{0, 2, 0}, 1}});
  CHECK_THROWS_AS(TriPoly::compose(F, L, Q, Q), domain_error);
  CHECK_THROWS_AS(F + L, domain_error);
}

TEST_CASE("exact division") {
  Field f = Field::gf(19);
  TriPoly X2Y = TriPoly::from_terms(f, 3, {{{2, 1, 0}, 1}});
  TriPoly Z = TriPoly::from_terms(f, 1, {{{0, 0, 1}, 1}});
  CHECK_FALSE(TriPoly::exact_divide(X2Y, Z).has_value());
  auto self = TriPoly::exact_divide(X2Y, X2Y);
  REQUIRE(self.has_value());
  CHECK(self->degree() == 0);
  CHECK(self->coeff({0, 0, 0}).is_one());
  // multiply-back on a composite
  TriPoly prod = X2Y * Z;
  auto q = TriPoly::exact_divide(prod, Z);
  REQUIRE(q.has_value());
  CHECK(*q == X2Y);
}

TEST_CASE("projective points normalize to a trailing one") {
  Field f = Field::gf(19);
  ProjPoint p(f.from_int(2), f.from_int(4), f.from_int(6));
  CHECK(p[2].is_one());
  ProjPoint q(f.from_int(1), f.from_int(2), f.from_int(3));
  CHECK(p == q);
  ProjPoint r(f.from_int(3), f.from_int(5), f.zero());
  CHECK(r.chart() == 1);
  CHECK(r[1].is_one());
  CHECK_THROWS_AS(ProjPoint(f.zero(), f.zero(), f.zero()), domain_error);
  ProjPoint s(f.one(), f.one(), f.one());
  CHECK(s.frobenius(19) == s);
}

TEST_SUITE_END();
