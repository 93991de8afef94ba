#pragma once

#include "wiman/places.hpp"

namespace wiman {

/// The classical sextic X^6+Y^6+Z^6+(X^2+Y^2+Z^2)(X^4+Y^4+Z^4)-12X^2Y^2Z^2
/// reduced mod p, expanded and canonicalized.
TriPoly wiman_form(const Field& Fp);
PlaneCurve wiman_curve(u64 p);

/// The five standard automorphisms: the three coordinate involutions, the
/// order-3 monomial map and the order-5 quadratic Cremona map. Each is
/// verified to send the curve into itself; construction fails loudly on a
/// transcription bug. Requires p >= 7.
std::vector<CurveMap> wiman_generators(u64 p);

/// The order-5 quadratic map alone, without the preservation check (test hook
/// for mutation controls).
CurveMap wiman_alpha_unchecked(u64 p);

struct AlphaIdentityReport {
  bool factorization_ok = false;
  bool fifth_power_ok = false;
  std::string residual;  // first failing residual, stringified
};

/// Symbolic checks: the quadratic map multiplies the sextic by
/// 2^6 (Y+Z)^2 (X-Z)^2 (X-Y)^2, and its fifth iterate is projectively the
/// identity (cross-multiplication identities).
AlphaIdentityReport verify_alpha_identities(u64 p);
AlphaIdentityReport verify_alpha_identities(const PlaneCurve& C, const CurveMap& alpha);

struct D8Report {
  bool phi_squared = false;
  bool tau_squared = false;
  bool rho_squared = false;
  bool phi_tau_commute = false;
  bool rho_conjugates_phi_to_tau = false;
  bool all() const {
    return phi_squared && tau_squared && rho_squared && phi_tau_commute && rho_conjugates_phi_to_tau;
  }
};

/// Dihedral relations among the three involutions at the place-permutation
/// level: phi^2 = tau^2 = rho^2 = id, phi tau = tau phi, rho phi rho = tau.
D8Report verify_d8_relations(u64 p, unsigned ext_override = 0);
D8Report verify_d8_relations(const PlaceSet& ps, const Perm& phi, const Perm& tau, const Perm& rho);

/// k = 2 at p = 19 (the reference setup); otherwise the minimal k whose place
/// count exceeds 14 = 2g+2.
unsigned default_extension_degree(u64 p);

struct AutomorphismReport {
  u64 p = 0;
  unsigned ext = 0;
  u64 place_count = 0;
  u64 d8_order = 0;              // closure of the three involutions
  u64 closure_order = 0;         // closure of all five generators
  std::map<u64, u64> census;
  D8Report d8;
  AlphaIdentityReport alpha;
  S5Certificate certificate;
  PermGroup group;
};

/// Full pipeline: generators, places, permutations, closure, census,
/// faithfulness guards and the coset-action certificate.
AutomorphismReport analyze_automorphisms(u64 p, unsigned ext_override = 0, u64 ceiling = 10080);

}  // namespace wiman
