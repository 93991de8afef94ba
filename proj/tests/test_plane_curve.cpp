#include <set>

#include "doctest.h"
#include "wiman/hermitian.hpp"
#include "wiman/plane_curve.hpp"
#include "wiman/wiman_curve.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("plane_curve");

TEST_CASE("the sextic at p = 19 has exactly four ordinary nodes") {
  PlaneCurve C = wiman_curve(19);
  auto locus = singular_locus(C);
  REQUIRE(locus.size() == 4);
  Field f = Field::gf(19);
  std::set<std::string> want;
  for (i64 sx : {1, -1})
    for (i64 sy : {1, -1}) want.insert(ProjPoint(f.from_int(sx), f.from_int(sy), f.one()).key());
  for (const auto& sp : locus) {
    CHECK(sp.multiplicity == 2);
    CHECK(sp.ordinary);
    CHECK(sp.residue_degree == 1);
    CHECK(want.count(sp.point.key()) == 1);
    want.erase(sp.point.key());
  }
  CHECK(genus_nodal(C) == 6);
}

TEST_CASE("smooth conic") {
  Field f = Field::gf(19);
  PlaneCurve conic(TriPoly::from_terms(f, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}}));
  CHECK(singular_locus(conic).empty());
  CHECK(genus_nodal(conic) == 0);
}

TEST_CASE("cuspidal cubic has a non-ordinary double point") {
  Field f = Field::gf(19);
  PlaneCurve cusp(TriPoly::from_terms(f, 3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}}));
  auto locus = singular_locus(cusp);
  REQUIRE(locus.size() == 1);
  CHECK(locus[0].point == ProjPoint(f.zero(), f.zero(), f.one()));
  CHECK(locus[0].multiplicity == 2);
  CHECK_FALSE(locus[0].ordinary);
  CHECK_THROWS_AS(genus_nodal(cusp), unsupported_error);
}

TEST_CASE("identically vanishing partial is rejected") {
  Field f = Field::gf(3);
  PlaneCurve C(TriPoly::from_terms(f, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}}));
  CHECK_THROWS_AS(singular_locus(C), unsupported_error);
}

TEST_CASE("hermitian models are smooth of genus q(q-1)/2") {
  for (u64 q : {3, 4, 5, 7}) {
    for (auto id : {HermitianModelId::M1, HermitianModelId::M2, HermitianModelId::M3}) {
      auto m = hermitian_model(q, id);
      CHECK(singular_locus(m.curve).empty());
      CHECK(genus_nodal(m.curve) == q * (q - 1) / 2);
    }
  }
}

TEST_CASE("place census of the sextic over GF(19^2)") {
  PlaneCurve C = wiman_curve(19);
  auto census = count_places_deg1(C, Field::gf(19, 2));
  CHECK(census.total == 590);
  CHECK(census.branch_counts.size() == 4);
  u64 branches = 0;
  for (const auto& [pt, b] : census.branch_counts) {
    CHECK((b == 0 || b == 2));
    branches += b;
  }
  CHECK(census.smooth_points + branches == 590);
}

TEST_CASE("hermitian census over the quadratic extension") {
  auto m = hermitian_model(3, HermitianModelId::M1);
  CHECK(count_places_deg1(m.curve, m.fq2).total == 28);
}

TEST_CASE("maximality verdicts") {
  auto v19 = maximality_verdict(wiman_curve(19), 19);
  CHECK(v19.maximal);
  CHECK(v19.places == 590);
  CHECK(v19.bound == 361 + 1 + 228);

  auto v7 = maximality_verdict(wiman_curve(7), 7);
  CHECK_FALSE(v7.maximal);
  CHECK(v7.bound == 49 + 1 + 84);

  // the q = p = 7 Hermitian model is defined over the prime field
  Field f7 = Field::gf(7);
  PlaneCurve h7(TriPoly::from_terms(f7, 8, {{{8, 0, 0}, 1}, {{0, 8, 0}, 1}, {{0, 0, 8}, 1}}));
  auto vh = maximality_verdict(h7, 7);
  CHECK(vh.maximal);
  CHECK(vh.places == 344);
}

TEST_CASE("smooth points are stable under the base-field frobenius") {
  PlaneCurve C = wiman_curve(11);
  Field K = Field::gf(11, 2);
  auto pts = rational_curve_points(C, K);
  std::set<std::string> keys;
  for (const auto& P : pts) keys.insert(P.key());
  for (const auto& P : pts) CHECK(keys.count(P.frobenius(11).key()) == 1);
}

TEST_CASE("census lies in the Weil interval") {
  for (u64 p : {7, 11, 13}) {
    PlaneCurve C = wiman_curve(p);
    u64 g = genus_nodal(C);
    u64 qp = p * p;
    u64 N = count_places_deg1(C, Field::gf(p, 2)).total;
    i64 centered = static_cast<i64>(N) - static_cast<i64>(qp) - 1;
    CHECK(centered * centered <= static_cast<i64>(4 * g * g * qp));
  }
}

TEST_CASE("counting is partition independent") {
  PlaneCurve C = wiman_curve(13);
  Field K = Field::gf(13, 2);
  u64 base = count_places_deg1(C, K).total;
  CHECK(count_places_deg1(C, K, {7, false}).total == base);
  CHECK(count_places_deg1(C, K, {3, true}).total == base);
}

TEST_CASE("factor search at small characteristic") {
  PlaneCurve C2(wiman_form(Field::gf(2)));
  auto f2 = find_small_factor(C2, 3);
  REQUIRE(f2.has_value());
  {
    FieldHom h = embed_hom(C2.base_field(), f2->field());
    auto q = TriPoly::exact_divide(C2.form.map_coeffs(h), *f2);
    REQUIRE(q.has_value());
    CHECK(*q * *f2 == C2.form.map_coeffs(h));
  }
  PlaneCurve C3(wiman_form(Field::gf(3)));
  auto f3 = find_small_factor(C3, 3);
  REQUIRE(f3.has_value());
  {
    FieldHom h = embed_hom(C3.base_field(), f3->field());
    auto q = TriPoly::exact_divide(C3.form.map_coeffs(h), *f3);
    REQUIRE(q.has_value());
  }
}

TEST_CASE("no linear factor at p = 19") {
  PlaneCurve C = wiman_curve(19);
  CHECK_FALSE(find_small_factor(C, 1).has_value());
}

TEST_CASE("factor search budget error") {
  PlaneCurve C = wiman_curve(19);
  CHECK_THROWS_AS(find_small_factor(C, 3, 1000), capped_error);
}

TEST_CASE("p = 5 structure reported honestly") {
  // The sextic is rational at p = 5. Either the nodal formula applies and
  // yields genus 0, or a non-ordinary singularity makes it refuse.
  PlaneCurve C = wiman_curve(5);
  auto locus = singular_locus(C);
  CHECK(locus.size() >= 1);
  try {
    u64 g = genus_nodal(C);
    CHECK(g == 0);
    MESSAGE("p = 5: nodal formula applies, genus 0 with ", locus.size(), " singular points");
  } catch (const unsupported_error& e) {
    MESSAGE("p = 5: non-ordinary singularity, formula refused: ", e.what());
    bool any_non_ordinary = false;
    for (const auto& sp : locus)
      if (!sp.ordinary) any_non_ordinary = true;
    CHECK(any_non_ordinary);
  }
}

TEST_SUITE_END();
