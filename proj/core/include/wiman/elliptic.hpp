#pragma once

#include <vector>

#include "wiman/util.hpp"

namespace wiman {

/// y^2 = A3 x^3 + A2 x^2 + A1 x + A0 over F_p with nonsingular cubic.
struct EllipticModel {
  u64 p = 0;
  i64 a3 = 0, a2 = 0, a1 = 0, a0 = 0;
};

/// The fixed elliptic curve y^2 = x(5x^2 - 95x + 2^9) reduced mod p.
/// Requires p >= 7 (the cubic's discriminant only loses primes 2, 3, 5).
EllipticModel epsilon_curve(u64 p);

struct TraceRow {
  u64 p = 0;
  u64 point_count = 0;   // including the point at infinity
  i64 trace = 0;         // a_p = p + 1 - #E(F_p)
  bool supersingular = false;
  u64 criterion_residue = 0;  // the mod-p binomial-sum residue, m = (p-1)/2
  bool agreement = false;     // residue == 0  <=>  a_p == 0
};

/// Exhaustive exact point count via the quadratic character.
TraceRow trace_of_frobenius(const EllipticModel& e);

/// The residue of sum_{i=0}^{floor(m/2)} m!/((i!)^2 (m-2i)!) 2^{9i} 5^{-m-i} (-19)^{m-2i}
/// evaluated entirely mod p. Requires p != 5 and m < p.
u64 kawakita_sum(u64 p, u64 m);

/// One TraceRow per prime in [p_min, p_max], with the m = (p-1)/2 residue and
/// the agreement flag filled in.
std::vector<TraceRow> scan_primes(u64 p_min, u64 p_max);

}  // namespace wiman
