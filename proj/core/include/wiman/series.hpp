#pragma once

#include <vector>

#include "wiman/field.hpp"

namespace wiman {

/// Truncated power series: coefficients of s^0 .. s^(trunc-1).
class Series {
 public:
  Series() = default;
  Series(Field f, unsigned trunc) : f_(std::move(f)), c_(trunc, f_.zero()) {}
  Series(Field f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {}

  const Field& field() const { return f_; }
  unsigned trunc() const { return static_cast<unsigned>(c_.size()); }
  Fe at(unsigned i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  void set(unsigned i, const Fe& v);

  /// Lowest order with a nonzero coefficient, or -1 if zero to truncation.
  int ord() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);  // trunc = min
  Series operator*(const Fe& s) const;

  /// Divide by s^m; requires ord() >= m (or zero series). Truncation drops by m.
  Series shifted_down(unsigned m) const;
  /// Multiplicative inverse; requires a unit constant term.
  Series inverse() const;

  std::string str() const;

 private:
  Field f_;
  std::vector<Fe> c_;
};

}  // namespace wiman
