#pragma once

#include <utility>
#include <vector>

#include "wiman/field.hpp"

namespace wiman {

/// Univariate polynomial over a finite field, dense low-to-high coefficients.
/// The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Fe> coeffs);

  static Poly x(const Field& f);
  static Poly constant(const Fe& c);
  /// Low-to-high integer coefficients, reduced into the field.
  static Poly from_ints(const Field& f, const std::vector<i64>& coeffs);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe coeff(size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  const Fe& lc() const;

  Fe eval(const Fe& x) const;
  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Fe& s) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly operator/(const Poly& b) const;
  Poly operator%(const Poly& b) const;
  /// Exact quotient; throws integrity_error if the division leaves a remainder.
  Poly exact_div(const Poly& b) const;

  static Poly gcd(Poly a, Poly b);  // monic (or zero)
  Poly powmod(u64 e, const Poly& mod) const;

  std::string str() const;

 private:
  void trim();
  Field f_;
  std::vector<Fe> c_;
};

/// Complete factorization into monic irreducibles with multiplicities.
/// Deterministic: the equal-degree splitting PRNG is seeded from the
/// polynomial's coefficients. Throws domain_error on the zero polynomial.
/// The leading coefficient is returned separately.
struct Factorization {
  Fe unit;
  std::vector<std::pair<Poly, unsigned>> factors;  // sorted canonically
};
Factorization factor_univariate(const Poly& f);

/// Distinct roots of f in its own field, sorted by element index.
std::vector<Fe> roots(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace wiman
