#include <numeric>

#include "doctest.h"
#include "wiman/wiman_curve.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("wiman");

TEST_CASE("defining form coefficients mod 19") {
  Field f = Field::gf(19);
  TriPoly F = wiman_form(f);
  CHECK(F.coeff({6, 0, 0}) == f.from_int(2));  // 1 + 1 from the product term
  CHECK(F.coeff({2, 2, 2}) == f.from_int(-12));
  CHECK(F.coeff({2, 2, 2}) == f.from_int(7));
  CHECK(F.eval(f.one(), f.one(), f.one()).is_zero());  // a node
}

TEST_CASE("standard generators act as printed") {
  auto gens = wiman_generators(19);
  REQUIRE(gens.size() == 5);
  Field f = Field::gf(19);
  ProjPoint P(f.from_int(1), f.from_int(2), f.from_int(3));
  CHECK(gens[0].apply(P) == ProjPoint(f.from_int(1), f.from_int(-2), f.from_int(3)));

  SUBCASE("the monomial map has order 3") {
    const CurveMap& g = gens[3];
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      Fe x = f.sample(rng), y = f.sample(rng), z = f.sample(rng);
      if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
      ProjPoint Q(x, y, z);
      CHECK(g.apply(g.apply(g.apply(Q))) == Q);
    }
  }

  SUBCASE("the unit point is a base point of the quadratic map") {
    const CurveMap& a = gens[4];
    CHECK(a.is_base_point(ProjPoint(f.one(), f.one(), f.one())));
    CHECK(a.is_base_point(ProjPoint(f.one(), f.from_int(-1), f.one())));
    CHECK(a.is_base_point(ProjPoint(f.from_int(-1), f.from_int(-1), f.one())));
    CHECK_FALSE(a.is_base_point(ProjPoint(f.from_int(-1), f.one(), f.one())));
  }
}

TEST_CASE("symbolic identities for the order-5 map") {
  auto r19 = verify_alpha_identities(19);
  CHECK(r19.factorization_ok);
  CHECK(r19.fifth_power_ok);
  auto r7 = verify_alpha_identities(7);
  CHECK(r7.factorization_ok);
  CHECK(r7.fifth_power_ok);

  SUBCASE("the factorization identity pins the cofactor") {
    Field f = Field::gf(19);
    PlaneCurve C = wiman_curve(19);
    CurveMap a = wiman_alpha_unchecked(19);
    TriPoly img = TriPoly::compose(C.form, a.forms[0], a.forms[1], a.forms[2]);
    TriPoly yz = TriPoly::from_terms(f, 1, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    TriPoly xz = TriPoly::from_terms(f, 1, {{{1, 0, 0}, 1}, {{0, 0, 1}, -1}});
    TriPoly xy = TriPoly::from_terms(f, 1, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}});
    auto q = TriPoly::exact_divide(img, (yz * yz) * (xz * xz) * (xy * xy));
    REQUIRE(q.has_value());
    CHECK(*q == C.form * f.from_int(64));
  }

  SUBCASE("a perturbed map is caught") {
    PlaneCurve C = wiman_curve(19);
    CurveMap bad = wiman_alpha_unchecked(19);
    Field f = Field::gf(19);
    // negate the XY coefficient of the first form
    bad.forms[0].add_term({1, 1, 0}, f.from_int(-2));
    auto rep = verify_alpha_identities(C, bad);
    CHECK_FALSE(rep.factorization_ok);
  }
}

TEST_CASE("place construction") {
  PlaneCurve C = wiman_curve(19);
  auto gens = wiman_generators(19);
  PlaceSet ps = build_places(C, Field::gf(19, 2), gens);
  CHECK(ps.places.size() == 590);
  u64 node_places = 0;
  for (const auto& pl : ps.places)
    if (pl.at_node) ++node_places;
  CHECK(node_places == 8);
  CHECK(ps.census.total == 590);

  SUBCASE("insufficient places at a too-small field") {
    CHECK_THROWS_AS(build_places(C, Field::gf(19, 1), gens, {4, 20, 1000}), capped_error);
  }
}

TEST_CASE("permutation construction") {
  PlaneCurve C = wiman_curve(19);
  auto gens = wiman_generators(19);
  Field K = Field::gf(19, 2);
  PlaceSet ps = build_places(C, K, gens);

  SUBCASE("the reflection moves smooth places as expected") {
    Perm phi = map_to_permutation(gens[0], ps);
    for (u32 i = 0; i < ps.places.size(); ++i) {
      const Place& pl = ps.places[i];
      if (pl.at_node) continue;
      ProjPoint img(pl.point[0], -pl.point[1], pl.point[2]);
      CHECK(ps.places[phi.img[i]].point == img);
    }
  }

  SUBCASE("identity map gives the identity permutation") {
    CurveMap id;
    id.name = "id";
    id.forms[0] = TriPoly::from_terms(Field::gf(19), 1, {{{1, 0, 0}, 1}});
    id.forms[1] = TriPoly::from_terms(Field::gf(19), 1, {{{0, 1, 0}, 1}});
    id.forms[2] = TriPoly::from_terms(Field::gf(19), 1, {{{0, 0, 1}, 1}});
    CHECK(map_to_permutation(id, ps).is_identity());
  }

  SUBCASE("the quadratic map resolves node branches to distinct places") {
    Perm alpha = map_to_permutation(gens[4], ps);
    Field f = Field::gf(19);
    FieldHom h = embed_hom(f, K);
    ProjPoint node(h(f.one()), h(f.one()), h(f.one()));
    auto it = ps.branches_at.find(node.key());
    REQUIRE(it != ps.branches_at.end());
    REQUIRE(it->second.size() == 2);
    CHECK(alpha.img[it->second[0]] != alpha.img[it->second[1]]);
  }

  SUBCASE("generator permutation orders") {
    CHECK(map_to_permutation(gens[0], ps).order() == 2);
    CHECK(map_to_permutation(gens[1], ps).order() == 2);
    CHECK(map_to_permutation(gens[2], ps).order() == 2);
    CHECK(map_to_permutation(gens[3], ps).order() == 3);
    CHECK(map_to_permutation(gens[4], ps).order() == 5);
  }
}

TEST_CASE("closures and the certificate") {
  PlaneCurve C = wiman_curve(19);
  auto gens = wiman_generators(19);
  PlaceSet ps = build_places(C, Field::gf(19, 2), gens);
  std::vector<Perm> perms;
  for (const auto& m : gens) perms.push_back(map_to_permutation(m, ps));

  SUBCASE("the three involutions generate a dihedral group of order 8") {
    PermGroup d8 = close_generators({perms[0], perms[1], perms[2]});
    CHECK(d8.order == 8);
    u64 involutions = d8.census.count(2) ? d8.census.at(2) : 0;
    CHECK(involutions >= 4);
    bool abelian = true;
    for (const auto& a : d8.elements)
      for (const auto& b : d8.elements)
        if (compose(a, b).img != compose(b, a).img) abelian = false;
    CHECK_FALSE(abelian);
  }

  SUBCASE("adding the order-3 map reaches order 24") {
    CHECK(close_generators({perms[0], perms[1], perms[2], perms[3]}).order == 24);
  }

  SUBCASE("all five generators close at order 120 with the right census") {
    PermGroup g = close_generators(perms);
    CHECK(g.order == 120);
    std::map<u64, u64> expect{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
    CHECK(g.census == expect);

    // census consistency: totals and Euler-phi divisibility
    u64 total = 0;
    for (const auto& [d, c] : g.census) {
      total += c;
      CHECK(c % euler_phi(d) == 0);
    }
    CHECK(total == g.order);

    // faithfulness: nontrivial elements fix at most 2g+2 = 14 places
    for (const auto& e : g.elements) {
      if (e.is_identity()) continue;
      CHECK(e.fixed() <= 14);
    }

    auto cert = certify_s5(g);
    CHECK(cert.ok);
    CHECK(cert.image_order == 120);
    CHECK(cert.kernel_trivial);
    CHECK(cert.subgroup.size() == 24);
  }

  SUBCASE("a cyclic group of order 120 fails certification") {
    Perm c120;
    c120.img.resize(120);
    for (u32 i = 0; i < 120; ++i) c120.img[i] = (i + 1) % 120;
    PermGroup cyc = close_generators({c120});
    REQUIRE(cyc.order == 120);
    auto cert = certify_s5(cyc);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.diagnostics.empty());
  }

  SUBCASE("closure ceiling") {
    CHECK_THROWS_AS(close_generators(perms, 100), capped_error);
  }
}

TEST_CASE("dihedral relations") {
  CHECK(verify_d8_relations(19).all());
  CHECK(verify_d8_relations(11).all());

  SUBCASE("a mutated reflection breaks the conjugation relation") {
    PlaneCurve C = wiman_curve(19);
    auto gens = wiman_generators(19);
    PlaceSet ps = build_places(C, Field::gf(19, 2), gens);
    Field f = Field::gf(19);
    CurveMap rho_bad;
    rho_bad.name = "rho-yz";
    rho_bad.forms[0] = TriPoly::from_terms(f, 1, {{{1, 0, 0}, 1}});
    rho_bad.forms[1] = TriPoly::from_terms(f, 1, {{{0, 0, 1}, 1}});
    rho_bad.forms[2] = TriPoly::from_terms(f, 1, {{{0, 1, 0}, 1}});
    Perm phi = map_to_permutation(gens[0], ps);
    Perm tau = map_to_permutation(gens[1], ps);
    Perm bad = map_to_permutation(rho_bad, ps);
    auto rep = verify_d8_relations(ps, phi, tau, bad);
    CHECK_FALSE(rep.rho_conjugates_phi_to_tau);
  }
}

TEST_CASE("extension choice does not change the group") {
  u64 p = 13;
  unsigned kmin = default_extension_degree(p);
  auto a = analyze_automorphisms(p, kmin);
  auto b = analyze_automorphisms(p, kmin + 1);
  CHECK(a.closure_order == b.closure_order);
  CHECK(a.census == b.census);
}

TEST_CASE("the node set is permuted by every generator") {
  PlaneCurve C = wiman_curve(19);
  auto gens = wiman_generators(19);
  Field K = Field::gf(19, 2);
  PlaceSet ps = build_places(C, K, gens);
  FieldHom h = embed_hom(Field::gf(19), K);
  for (const auto& m : gens) {
    CurveMap mk = lift_map(m, h);
    for (const auto& [key, idxs] : ps.branches_at) {
      const ProjPoint& node = ps.places[idxs.front()].point;
      if (mk.is_base_point(node)) continue;
      CHECK(ps.branches_at.count(mk.apply(node).key()) == 1);
    }
  }
}

TEST_SUITE_END();
