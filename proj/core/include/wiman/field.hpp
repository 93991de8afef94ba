#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wiman/util.hpp"

namespace wiman {

class FieldRep;
using FieldPtr = std::shared_ptr<const FieldRep>;
class Field;

/// Element of a finite field F_{p^k}, stored as the canonical coefficient
/// vector of length k over F_p (entries reduced to 0..p-1). Equality is
/// coefficient-wise; all arithmetic stays inside the owning field.
class Fe {
 public:
  Fe() = default;

  bool valid() const { return rep_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  Field field() const;
  const std::vector<u32>& coeffs() const { return c_; }

  /// Integer value, prime fields only.
  u64 lift() const;

  Fe operator-() const;
  Fe inv() const;
  Fe pow(u64 e) const;

  /// x -> x^q where q is a power of the characteristic.
  Fe frobenius(u64 q) const;

  friend Fe operator+(const Fe& a, const Fe& b);
  friend Fe operator-(const Fe& a, const Fe& b);
  friend Fe operator*(const Fe& a, const Fe& b);
  friend Fe operator/(const Fe& a, const Fe& b);
  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  /// Lexicographic order on coefficient vectors (same field required);
  /// gives Fe a total order usable as a map key.
  friend bool operator<(const Fe& a, const Fe& b);

  std::string str() const;

 private:
  friend class Field;
  friend class FieldRep;
  Fe(FieldPtr r, std::vector<u32> c) : rep_(std::move(r)), c_(std::move(c)) {}
  FieldPtr rep_;
  std::vector<u32> c_;
};

/// Descriptor of F_{p^k}. Construction through gf() is deterministic: the
/// modulus is the lexicographically smallest monic irreducible of degree k
/// over F_p, comparing coefficient vectors low-to-high as integers.
class Field {
 public:
  Field() = default;

  static Field gf(u64 p);               // prime field
  static Field gf(u64 p, unsigned k);   // deterministic extension
  /// Extension with a caller-supplied monic irreducible modulus (length k+1,
  /// low-to-high). Bypasses the deterministic-modulus registry.
  static Field with_modulus(u64 p, std::vector<u32> modulus);

  bool valid() const { return rep_ != nullptr; }
  u64 p() const;
  unsigned k() const;
  u64 size() const;  // p^k
  const std::vector<u32>& modulus() const;

  Fe zero() const;
  Fe one() const;
  Fe from_int(i64 v) const;
  /// Element with the given low-to-high coefficients (length <= k, entries
  /// arbitrary integers, reduced mod p).
  Fe make(const std::vector<i64>& coeffs) const;
  /// Class of t, the modulus root generating the extension (k >= 2).
  Fe gen() const;

  /// Deterministic enumeration: element whose coefficient vector is the
  /// base-p digits of idx, low digit first. idx < size().
  Fe element_by_index(u64 idx) const;
  u64 index_of(const Fe& x) const;
  Fe sample(Rng& rng) const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  const FieldPtr& rep() const { return rep_; }
  std::string str() const;

 private:
  friend class Fe;
  explicit Field(FieldPtr r) : rep_(std::move(r)) {}
  FieldPtr rep_;
};

/// Homomorphism F_{p^e} -> F_{p^m} (e | m) sending the source generator to a
/// fixed root of the source modulus in the target. Identity for e == 1 or
/// equal fields.
struct FieldHom {
  Field src;
  Field dst;
  Fe gen_image;  // invalid when src.k() == 1 or src == dst
  Fe operator()(const Fe& x) const;
};

/// Deterministic embedding (first modulus root in index order).
FieldHom embed_hom(const Field& src, const Field& dst);

}  // namespace wiman
