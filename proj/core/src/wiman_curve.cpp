#include "wiman/wiman_curve.hpp"

#include <algorithm>

namespace wiman {

TriPoly wiman_form(const Field& Fp) {
  auto sym = [&](unsigned e) {
    return TriPoly::from_terms(Fp, e, {{{e, 0, 0}, 1}, {{0, e, 0}, 1}, {{0, 0, e}, 1}});
  };
  TriPoly mixed = TriPoly::from_terms(Fp, 6, {{{2, 2, 2}, -12}});
  return sym(6) + sym(2) * sym(4) + mixed;
}

PlaneCurve wiman_curve(u64 p) { return PlaneCurve(wiman_form(Field::gf(p))); }

namespace {

CurveMap linear_map(const Field& F, const std::string& name, const std::array<std::array<i64, 3>, 3>& rows) {
  CurveMap m;
  m.name = name;
  for (unsigned r = 0; r < 3; ++r) {
    TriPoly f(F, 1);
    Mono xs[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (unsigned c = 0; c < 3; ++c) f.add_term(xs[c], F.from_int(rows[r][c]));
    m.forms[r] = f;
  }
  return m;
}

Fe det3(const std::array<std::array<Fe, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Rank of the symmetric matrix of a conic (char != 2). Rank 3 means the conic
// is irreducible over the closure, hence has no linear factor.
unsigned conic_rank(const TriPoly& q) {
  const Field& F = q.field();
  Fe half = F.from_int(2).inv();
  std::array<std::array<Fe, 3>, 3> m;
  Mono sq[3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  Mono cross[3][3] = {{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}},
                      {{1, 1, 0}, {0, 0, 0}, {0, 1, 1}},
                      {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      m[i][j] = i == j ? q.coeff(sq[i]) : q.coeff(cross[i][j]) * half;
  // Gaussian elimination rank
  unsigned rank = 0;
  for (unsigned col = 0; col < 3 && rank < 3; ++col) {
    unsigned pivot = 3;
    for (unsigned r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 3) continue;
    std::swap(m[rank], m[pivot]);
    for (unsigned r = rank + 1; r < 3; ++r) {
      if (m[r][col].is_zero()) continue;
      Fe c = m[r][col] / m[rank][col];
      for (unsigned cc = 0; cc < 3; ++cc) m[r][cc] = m[r][cc] - c * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

void check_no_common_factor(const CurveMap& m) {
  const Field& F = m.forms[0].field();
  if (m.map_degree() == 1) {
    std::array<std::array<Fe, 3>, 3> a;
    Mono xs[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned c = 0; c < 3; ++c) a[r][c] = m.forms[r].coeff(xs[c]);
    if (det3(a).is_zero())
      throw integrity_error("linear map " + m.name + " is singular");
    return;
  }
  // quadratic: a common factor of the three conics would force the first one
  // to be reducible, so rank 3 settles it
  if (conic_rank(m.forms[0]) == 3) return;
  throw integrity_error("quadratic map " + m.name + " has a degenerate leading conic");
  (void)F;
}

}  // namespace

CurveMap wiman_alpha_unchecked(u64 p) {
  Field F = Field::gf(p);
  CurveMap alpha;
  alpha.name = "alpha";
  alpha.forms[0] = TriPoly::from_terms(
      F, 2, {{{2, 0, 0}, -1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 2, 0}, -1}, {{0, 1, 1}, -1}, {{0, 0, 2}, 1}});
  alpha.forms[1] = TriPoly::from_terms(
      F, 2, {{{2, 0, 0}, -1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 2, 0}, 1}, {{0, 1, 1}, -1}, {{0, 0, 2}, -1}});
  alpha.forms[2] = TriPoly::from_terms(
      F, 2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 2, 0}, -1}, {{0, 1, 1}, -1}, {{0, 0, 2}, -1}});
  return alpha;
}

std::vector<CurveMap> wiman_generators(u64 p) {
  if (p < 7) throw domain_error("the automorphism pipeline requires p >= 7");
  Field F = Field::gf(p);
  PlaneCurve C = wiman_curve(p);
  std::vector<CurveMap> gens;
  gens.push_back(linear_map(F, "phi", {{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}));
  gens.push_back(linear_map(F, "tau", {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
  gens.push_back(linear_map(F, "rho", {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  gens.push_back(linear_map(F, "gamma", {{{0, 0, -1}, {-1, 0, 0}, {0, 1, 0}}}));
  gens.push_back(wiman_alpha_unchecked(p));
  for (const auto& m : gens) {
    check_no_common_factor(m);
    verify_preserves_curve(C, m);
  }
  return gens;
}

AlphaIdentityReport verify_alpha_identities(u64 p) {
  if (p < 7) throw domain_error("identity verification requires p >= 7");
  return verify_alpha_identities(wiman_curve(p), wiman_alpha_unchecked(p));
}

AlphaIdentityReport verify_alpha_identities(const PlaneCurve& C, const CurveMap& alpha) {
  const Field& F = C.base_field();
  AlphaIdentityReport rep;

  TriPoly image = TriPoly::compose(C.form, alpha.forms[0], alpha.forms[1], alpha.forms[2]);
  TriPoly yz = TriPoly::from_terms(F, 1, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  TriPoly xz = TriPoly::from_terms(F, 1, {{{1, 0, 0}, 1}, {{0, 0, 1}, -1}});
  TriPoly xy = TriPoly::from_terms(F, 1, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}});
  TriPoly cof = (yz * yz) * (xz * xz) * (xy * xy);
  TriPoly rhs = (cof * C.form) * F.from_int(64);
  rep.factorization_ok = image == rhs;
  if (!rep.factorization_ok) rep.residual = (image - rhs).str();

  std::array<TriPoly, 3> it = alpha.forms;
  for (int i = 1; i < 5; ++i) {
    std::array<TriPoly, 3> next;
    for (unsigned r = 0; r < 3; ++r)
      next[r] = TriPoly::compose(alpha.forms[r], it[0], it[1], it[2]);
    it = std::move(next);
  }
  TriPoly X = TriPoly::from_terms(F, 1, {{{1, 0, 0}, 1}});
  TriPoly Y = TriPoly::from_terms(F, 1, {{{0, 1, 0}, 1}});
  TriPoly Z = TriPoly::from_terms(F, 1, {{{0, 0, 1}, 1}});
  TriPoly r0 = it[0] * Y - it[1] * X;
  TriPoly r1 = it[0] * Z - it[2] * X;
  TriPoly r2 = it[1] * Z - it[2] * Y;
  rep.fifth_power_ok = r0.is_zero() && r1.is_zero() && r2.is_zero();
  if (!rep.fifth_power_ok && rep.residual.empty()) {
    const TriPoly& bad = !r0.is_zero() ? r0 : (!r1.is_zero() ? r1 : r2);
    rep.residual = bad.str();
  }
  return rep;
}

unsigned default_extension_degree(u64 p) {
  if (p == 19) return 2;
  PlaneCurve C = wiman_curve(p);
  for (unsigned k = 1; k <= 4; ++k) {
    if (count_places_deg1(C, Field::gf(p, k)).total > 14) return k;
  }
  throw capped_error("no extension degree <= 4 yields more than 14 places");
}

D8Report verify_d8_relations(const PlaceSet& ps, const Perm& phi, const Perm& tau, const Perm& rho) {
  (void)ps;
  D8Report r;
  r.phi_squared = compose(phi, phi).is_identity();
  r.tau_squared = compose(tau, tau).is_identity();
  r.rho_squared = compose(rho, rho).is_identity();
  r.phi_tau_commute = compose(phi, tau).img == compose(tau, phi).img;
  r.rho_conjugates_phi_to_tau = compose(rho, compose(phi, rho)).img == tau.img;
  return r;
}

D8Report verify_d8_relations(u64 p, unsigned ext_override) {
  PlaneCurve C = wiman_curve(p);
  auto gens = wiman_generators(p);
  unsigned k = ext_override ? ext_override : default_extension_degree(p);
  PlaceSet ps = build_places(C, Field::gf(p, k), gens);
  Perm phi = map_to_permutation(gens[0], ps);
  Perm tau = map_to_permutation(gens[1], ps);
  Perm rho = map_to_permutation(gens[2], ps);
  D8Report rep = verify_d8_relations(ps, phi, tau, rho);
  for (const auto& [name, ok] :
       {std::pair<const char*, bool>{"phi^2=id", rep.phi_squared},
        {"tau^2=id", rep.tau_squared},
        {"rho^2=id", rep.rho_squared},
        {"phi tau = tau phi", rep.phi_tau_commute},
        {"rho phi rho = tau", rep.rho_conjugates_phi_to_tau}}) {
    if (!ok) throw verification_error(std::string("dihedral relation failed: ") + name);
  }
  return rep;
}

AutomorphismReport analyze_automorphisms(u64 p, unsigned ext_override, u64 ceiling) {
  if (p < 7) throw domain_error("the automorphism pipeline requires p >= 7");
  AutomorphismReport rep;
  rep.p = p;
  rep.ext = ext_override ? ext_override : default_extension_degree(p);
  rep.alpha = verify_alpha_identities(p);
  if (!rep.alpha.factorization_ok || !rep.alpha.fifth_power_ok)
    throw verification_error("symbolic identities for the order-5 map failed at p = " + std::to_string(p));

  PlaneCurve C = wiman_curve(p);
  auto gens = wiman_generators(p);
  PlaceSet ps = build_places(C, Field::gf(p, rep.ext), gens);
  rep.place_count = ps.places.size();

  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const auto& m : gens) perms.push_back(map_to_permutation(m, ps));
  rep.d8 = verify_d8_relations(ps, perms[0], perms[1], perms[2]);
  rep.d8_order = close_generators({perms[0], perms[1], perms[2]}, ceiling).order;

  rep.group = close_generators(perms, ceiling);
  rep.closure_order = rep.group.order;
  rep.census = rep.group.census;

  // faithfulness guards: nontrivial elements move something and fix at most
  // 2g + 2 = 14 places
  for (const auto& e : rep.group.elements) {
    if (e.is_identity()) continue;
    if (e.fixed() > 14)
      throw integrity_error("automorphism fixes " + std::to_string(e.fixed()) +
                            " places, above the 2g+2 bound");
  }
  // the node set must be permuted by every generator
  FieldHom hK = embed_hom(C.base_field(), ps.field);
  for (const auto& m : gens) {
    CurveMap mk = lift_map(m, hK);
    for (const auto& [key, idxs] : ps.branches_at) {
      const ProjPoint& node = ps.places[idxs.front()].point;
      if (mk.is_base_point(node)) continue;
      ProjPoint img = mk.apply(node);
      if (ps.smooth_at.count(img.key()))
        throw integrity_error("generator " + m.name + " moved a node to a smooth point");
    }
  }

  rep.certificate = certify_s5(rep.group);
  return rep;
}

}  // namespace wiman
