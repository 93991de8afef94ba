#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiman {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};

/// A mathematically invalid input (non-prime characteristic, wrong degree, ...).
struct domain_error : error {
  using error::error;
};

/// Input outside what the implementation supports (non-ordinary singularity,
/// degenerate elimination, ...). Fails loudly instead of mis-computing.
struct unsupported_error : error {
  using error::error;
};

/// An explicit cap or budget was hit (extension cap, enumeration budget,
/// closure ceiling, series truncation).
struct capped_error : error {
  using error::error;
};

/// Internal consistency violated; indicates a bug, never bad user input.
struct integrity_error : error {
  using error::error;
};

/// A symbolic identity that was expected to hold failed to verify.
struct verification_error : error {
  using error::error;
};

/// Command-line misuse.
struct usage_error : error {
  using error::error;
};

/// SplitMix64: tiny deterministic PRNG, identical output on every platform.
struct Rng {
  u64 state;
  explicit Rng(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 n) { return n <= 1 ? 0 : next() % n; }
};

bool is_prime(u64 n);

/// base^exp, throwing capped_error when the result would exceed limit.
u64 checked_pow(u64 base, unsigned exp, u64 limit);

u64 gcd_u64(u64 a, u64 b);
u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);

/// FNV-1a over a byte view; used to seed deterministic sub-generators.
u64 fnv1a(const void* data, std::size_t len, u64 seed = 0xcbf29ce484222325ULL);

}  // namespace wiman
