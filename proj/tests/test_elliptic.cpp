#include <algorithm>

#include "doctest.h"
#include "wiman/elliptic.hpp"

using namespace wiman;

TEST_SUITE_BEGIN("elliptic");

TEST_CASE("model construction and reduction") {
  EllipticModel e = epsilon_curve(19);
  CHECK(e.a3 == 5);
  CHECK(((e.a2 % 19) + 19) % 19 == 0);   // -95 = 0 mod 19
  CHECK(((e.a1 % 19) + 19) % 19 == 18);  // 512 = 18 mod 19
  CHECK(e.a0 == 0);
  CHECK_NOTHROW(epsilon_curve(29));
  CHECK_THROWS_AS(epsilon_curve(5), domain_error);
  CHECK_THROWS_AS(epsilon_curve(6), domain_error);
}

TEST_CASE("traces at the first primes") {
  CHECK(trace_of_frobenius(epsilon_curve(19)).trace == 0);
  CHECK(trace_of_frobenius(epsilon_curve(29)).trace == 0);
  CHECK(trace_of_frobenius(epsilon_curve(7)).trace != 0);
}

TEST_CASE("character-sum count agrees with the naive double loop") {
  Rng rng(2024);
  int done = 0;
  for (u64 p = 7; p <= 200 && done < 10; ++p) {
    if (!is_prime(p)) continue;
    if (rng.below(2) == 0 && p > 11) continue;  // random-ish selection
    EllipticModel e = epsilon_curve(p);
    u64 naive = 1;
    for (u64 x = 0; x < p; ++x) {
      u64 fx = ((((5 * x % p + (p - 95 % p)) % p) * x % p + 512 % p) % p) * x % p;
      for (u64 y = 0; y < p; ++y)
        if (y * y % p == fx) ++naive;
    }
    CHECK(trace_of_frobenius(e).point_count == naive);
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("criterion residues") {
  CHECK(kawakita_sum(19, 9) == 0);
  CHECK(kawakita_sum(7, 3) != 0);
  CHECK(kawakita_sum(19, 0) == 1);
  CHECK_THROWS_AS(kawakita_sum(7, 7), domain_error);   // m >= p
  CHECK_THROWS_AS(kawakita_sum(5, 2), domain_error);   // p = 5 excluded
}

TEST_CASE("scan over a small window") {
  auto rows = scan_primes(7, 100);
  std::vector<u64> zeros;
  for (const auto& r : rows) {
    CHECK(r.agreement);
    CHECK(r.trace * r.trace <= static_cast<i64>(4 * r.p));  // Hasse bound
    if (r.criterion_residue == 0) zeros.push_back(r.p);
  }
  CHECK(zeros == std::vector<u64>{19, 29, 79});
  CHECK_THROWS_AS(scan_primes(3, 100), domain_error);
  CHECK_THROWS_AS(scan_primes(100, 7), domain_error);
}

TEST_SUITE_END();
