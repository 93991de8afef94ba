#pragma once

#include <map>
#include <optional>

#include "wiman/plane_curve.hpp"

namespace wiman {

/// 3x3 matrix over a finite field.
struct Mat3 {
  Field f;
  std::array<Fe, 9> a;

  static Mat3 zero(const Field& f);
  static Mat3 identity(const Field& f);
  static Mat3 from_ints(const Field& f, const std::array<std::array<i64, 3>, 3>& rows);
  Fe& at(unsigned r, unsigned c) { return a[r * 3 + c]; }
  const Fe& at(unsigned r, unsigned c) const { return a[r * 3 + c]; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  Mat3 operator*(const Fe& s) const;
  bool operator==(const Mat3& o) const { return a == o.a; }

  /// Transpose with entries raised to the q-th power.
  Mat3 conj_transpose(u64 q) const;
  Mat3 inverse() const;
  Fe det() const;
  Fe trace() const;
  Poly char_poly() const;
  bool is_scalar() const;
  /// Scale so the first nonzero entry in row-major order is 1.
  Mat3 projective_normal() const;
  unsigned rank() const;
  /// Basis of the right nullspace.
  std::vector<std::array<Fe, 3>> nullspace() const;
  std::string str() const;
};

Mat3 mat_pow(const Mat3& m, u64 e);

enum class HermitianModelId { M1 = 1, M2 = 2, M3 = 3 };

/// One of the three standard plane models of the Hermitian curve, with the
/// Gram matrix of its sesquilinear form. M3 carries the element w with
/// w^(q-1) = -1.
struct HermitianModel {
  u64 q = 0;
  HermitianModelId id = HermitianModelId::M1;
  Field fq2;
  PlaneCurve curve;
  Mat3 gram;
  std::optional<Fe> omega;
};

HermitianModel hermitian_model(u64 q, HermitianModelId id);

struct HermitianStats {
  u64 q = 0;
  HermitianModelId id = HermitianModelId::M1;
  u64 point_count = 0;
  std::map<u64, u64> line_sections;  // intersection size -> number of lines
  u64 tangent_lines = 0;
};

/// Exact point count plus the full line-section multiset of PG(2, q^2).
HermitianStats hermitian_stats(u64 q, HermitianModelId id, u64 sweep_cap = 13);

/// Element of the unitary similitude group, normalized to multiplier 1:
/// m* G m = G where * is conjugate-transpose under x -> x^q.
struct UnitaryElement {
  u64 q = 0;
  Mat3 m;
  Mat3 gram;
};

/// Verify the similitude property and normalize the multiplier away.
UnitaryElement make_unitary(u64 q, Mat3 m, const Mat3& gram);

/// Gram-Schmidt sampling against the M1 form; deterministic under the seed.
UnitaryElement random_unitary(u64 q, u64 seed);

/// Least n >= 1 with m^n scalar; capped at q^3 + 1.
u64 projective_order(const UnitaryElement& u);

enum class ElemType { A, B1, B2, B3, C, D, E };
const char* elem_type_name(ElemType t);

struct ElementClass {
  ElemType type;
  u64 order = 0;
  u64 contribution = 0;  // degree contribution to the different divisor
  std::string evidence;
};

/// Classify a nontrivial element by order, characteristic-polynomial
/// structure, Jordan shape and fixed-point membership on the curve; the
/// (type, order, contribution) triple is checked against the admissible
/// combinations before returning.
ElementClass classify_element(const UnitaryElement& u);

struct QuotientGenus {
  u64 group_order = 0;
  u64 delta = 0;  // sum of contributions over nontrivial elements
  u64 genus = 0;  // genus of the quotient curve, integrality enforced
};

/// Riemann-Hurwitz genus of H_q / S for an explicit subgroup S (closure and
/// inverse-closure are verified; the identity must be present).
QuotientGenus quotient_genus(const std::vector<UnitaryElement>& subgroup);

struct Sylow2Certificate {
  std::vector<UnitaryElement> elements;
  u64 involutions = 0;
  u64 delta = 0;
  std::map<u64, u64> order_census;
};

/// The explicit order-32 monomial 2-subgroup of PGU(3,19) in model M1:
/// diag(i,1,1), diag(1,i,1) and the coordinate swap, i of order 4.
Sylow2Certificate sylow2_certificate();

/// Closure of a set of unitary elements under multiplication (projective
/// equality), capped; used to build cyclic and small subgroups for tests.
std::vector<UnitaryElement> unitary_closure(const std::vector<UnitaryElement>& gens, u64 ceiling = 4096);

}  // namespace wiman
