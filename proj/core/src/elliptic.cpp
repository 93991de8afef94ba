#include "wiman/elliptic.hpp"

#include <cmath>

namespace wiman {

namespace {

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 mod_of(i64 v, u64 p) {
  i64 m = static_cast<i64>(p);
  i64 r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

}  // namespace

EllipticModel epsilon_curve(u64 p) {
  if (!is_prime(p)) throw domain_error("characteristic must be prime");
  if (p < 7) throw domain_error("the elliptic model needs p >= 7");
  EllipticModel e{p, 5, -95, 512, 0};
  // cubic discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2
  u64 a = mod_of(e.a3, p), b = mod_of(e.a2, p), c = mod_of(e.a1, p), d = mod_of(e.a0, p);
  u64 t1 = 18 % p * a % p * b % p * c % p * d % p;
  u64 t2 = 4 * (b * b % p) % p * b % p * d % p;
  u64 t3 = b * b % p * (c * c % p) % p;
  u64 t4 = 4 * a % p * (c * c % p) % p * c % p;
  u64 t5 = 27 % p * (a * a % p) % p * (d * d % p) % p;
  u64 disc = (t1 + t3 + 3 * p - t2 - t4 - t5) % p;
  if (disc == 0) throw domain_error("the cubic is singular mod " + std::to_string(p));
  return e;
}

TraceRow trace_of_frobenius(const EllipticModel& e) {
  u64 p = e.p;
  // quadratic-residue table
  std::vector<char> qr(p, 0);
  for (u64 x = 1; x < p; ++x) qr[x * x % p] = 1;
  u64 a = mod_of(e.a3, p), b = mod_of(e.a2, p), c = mod_of(e.a1, p), d = mod_of(e.a0, p);
  u64 count = 1;  // the point at infinity
  for (u64 x = 0; x < p; ++x) {
    u64 fx = ((a * x % p + b) % p * x % p + c) % p * x % p;
    fx = (fx + d) % p;
    if (fx == 0)
      count += 1;
    else
      count += qr[fx] ? 2 : 0;
  }
  TraceRow row;
  row.p = p;
  row.point_count = count;
  row.trace = static_cast<i64>(p) + 1 - static_cast<i64>(count);
  if (row.trace * row.trace > 4 * static_cast<i64>(p))
    throw integrity_error("Hasse bound violated at p = " + std::to_string(p));
  row.supersingular = mod_of(row.trace, p) == 0;
  return row;
}

u64 kawakita_sum(u64 p, u64 m) {
  if (!is_prime(p) || p < 7) throw domain_error("the criterion needs a prime p >= 7");
  if (p == 5) throw domain_error("p = 5 is excluded (5 must be invertible)");
  if (m >= p)
    throw domain_error("m = " + std::to_string(m) + " >= p; factorials hit zero divisors");
  // factorials up to m are valid mod p
  std::vector<u64> fact(m + 1, 1);
  for (u64 i = 1; i <= m; ++i) fact[i] = fact[i - 1] * (i % p) % p;
  auto inv = [&](u64 x) { return powmod(x, p - 2, p); };
  u64 inv5 = inv(5 % p);
  u64 neg19 = mod_of(-19, p);
  u64 total = 0;
  for (u64 i = 0; 2 * i <= m; ++i) {
    u64 term = fact[m] % p;
    term = term * inv(fact[i] * fact[i] % p) % p;
    term = term * inv(fact[m - 2 * i]) % p;
    term = term * powmod(512 % p, i, p) % p;
    term = term * powmod(inv5, m + i, p) % p;
    term = term * powmod(neg19, m - 2 * i, p) % p;
    total = (total + term) % p;
  }
  return total;
}

std::vector<TraceRow> scan_primes(u64 p_min, u64 p_max) {
  if (p_min < 7) throw domain_error("scan starts at 7");
  if (p_min > p_max) throw domain_error("empty scan range");
  if (p_max > 2'000'000) throw capped_error("scan bounded at p <= 2e6");
  std::vector<TraceRow> rows;
  for (u64 p = p_min; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    TraceRow row = trace_of_frobenius(epsilon_curve(p));
    row.criterion_residue = kawakita_sum(p, (p - 1) / 2);
    row.agreement = (row.criterion_residue == 0) == (row.trace == 0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wiman
