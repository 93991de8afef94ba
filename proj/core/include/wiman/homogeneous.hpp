#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "wiman/field.hpp"

namespace wiman {

using Mono = std::array<unsigned, 3>;  // exponents of X, Y, Z

/// Homogeneous trivariate form of fixed total degree, sparse storage.
/// Invariant: every stored exponent triple sums to the degree and no zero
/// coefficients are kept.
class TriPoly {
 public:
  TriPoly() = default;
  TriPoly(Field f, unsigned degree) : f_(std::move(f)), d_(degree) {}

  static TriPoly monomial(const Field& f, Mono m, const Fe& c);
  /// Integer-coefficient terms reduced into the field.
  static TriPoly from_terms(const Field& f, unsigned degree,
                            const std::vector<std::pair<Mono, i64>>& terms);

  const Field& field() const { return f_; }
  unsigned degree() const { return d_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, Fe>& terms() const { return t_; }
  Fe coeff(Mono m) const;

  /// Accumulate a term (degree-checked), dropping the monomial if it cancels.
  void add_term(Mono m, const Fe& c);

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly operator*(const Fe& s) const;
  friend bool operator==(const TriPoly& a, const TriPoly& b);
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

  Fe eval(const Fe& x, const Fe& y, const Fe& z) const;
  TriPoly partial(unsigned axis) const;
  TriPoly pow(unsigned e) const;

  /// Substitute three forms of a common degree for the variables.
  /// Result degree = degree() * e.
  static TriPoly compose(const TriPoly& F, const TriPoly& g0, const TriPoly& g1, const TriPoly& g2);

  /// Exact division test: returns Q with Q*B == A, or nullopt.
  static std::optional<TriPoly> exact_divide(const TriPoly& A, const TriPoly& B);

  /// Coefficients pushed through a field homomorphism.
  TriPoly map_coeffs(const FieldHom& h) const;

  std::string str() const;

 private:
  Field f_;
  unsigned d_ = 0;
  std::map<Mono, Fe> t_;
};

/// Point of PG(2, F), normalized so the last nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;  // invalid placeholder; usable only after assignment
  ProjPoint(const Fe& x, const Fe& y, const Fe& z);

  const Fe& operator[](unsigned i) const { return c_[i]; }
  const std::array<Fe, 3>& coords() const { return c_; }
  Field field() const { return c_[0].field(); }
  /// Index of the coordinate normalized to 1.
  unsigned chart() const { return chart_; }

  ProjPoint frobenius(u64 q) const;

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  /// Canonical byte key for hashing (same field assumed).
  std::string key() const;
  std::string str() const;

 private:
  std::array<Fe, 3> c_;
  unsigned chart_ = 0;
};

}  // namespace wiman
