#pragma once

#include <functional>
#include <optional>

#include "wiman/homogeneous.hpp"
#include "wiman/poly.hpp"
#include "wiman/series.hpp"

namespace wiman {

/// Bivariate polynomial, sparse storage; the affine side of curve geometry.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : f_(std::move(f)) {}

  /// Set coordinate `chart` to 1; variables are the remaining coordinates in
  /// increasing index order.
  static BiPoly dehomogenize(const TriPoly& F, unsigned chart);

  const Field& field() const { return f_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<std::pair<unsigned, unsigned>, Fe>& terms() const { return t_; }
  void add_term(unsigned a, unsigned b, const Fe& c);

  Fe eval(const Fe& u, const Fe& v) const;
  BiPoly partial(unsigned axis) const;
  /// f(u + a, v + b)
  BiPoly translate(const Fe& a, const Fe& b) const;
  unsigned min_total_degree() const;  // throws on zero
  unsigned degree_in(unsigned axis) const;
  /// Coefficients of the total-degree-m part: index i holds the u^i v^(m-i) coefficient.
  std::vector<Fe> homogeneous_part(unsigned m) const;
  /// Coefficient of v^j as a polynomial in u.
  std::vector<Poly> as_v_polys() const;
  /// Substitute u := first argument viewed as a Poly variable; partial evaluation.
  Poly eval_u(const Fe& u) const;  // polynomial in v
  Series subst(const Series& u, const Series& v) const;
  BiPoly map_coeffs(const FieldHom& h) const;

 private:
  Field f_;
  std::map<std::pair<unsigned, unsigned>, Fe> t_;
};

struct PlaneCurve {
  TriPoly form;
  PlaneCurve() = default;
  explicit PlaneCurve(TriPoly F);
  unsigned degree() const { return form.degree(); }
  const Field& base_field() const { return form.field(); }
};

/// Tangent cone at a singular point: binary form of degree = multiplicity in
/// the translated affine chart, coefficient i belonging to u^i v^(m-i).
struct TangentCone {
  unsigned chart;
  std::vector<Fe> binary;  // over the point's field
};

struct SingularPoint {
  ProjPoint point;          // over the smallest field containing it
  unsigned multiplicity;
  bool ordinary;
  unsigned residue_degree;  // extension degree of that field over F_p
  TangentCone cone;
};

/// Complete singular locus over the algebraic closure, one entry per closure
/// point, each over its minimal extension. Elimination is resultant-based so
/// non-rational points cannot be missed up to the extension cap.
std::vector<SingularPoint> singular_locus(const PlaneCurve& C, unsigned extension_cap = 12);

/// Genus by the nodal formula; requires every singularity ordinary.
u64 genus_nodal(const PlaneCurve& C, unsigned extension_cap = 12);

struct PlaceCensus {
  Field field;
  u64 smooth_points = 0;
  /// Per rational singular point: number of rational branches there.
  std::vector<std::pair<ProjPoint, u64>> branch_counts;
  u64 total = 0;
};

struct CountOptions {
  unsigned stripes = 1;   // split the affine sweep into x-ranges
  bool swap_xy = false;   // enumerate columns-first instead of rows-first
};

PlaceCensus count_places_deg1(const PlaneCurve& C, const Field& K, const CountOptions& opt = {});

struct MaximalityVerdict {
  u64 p = 0;
  u64 genus = 0;
  u64 places = 0;
  u64 bound = 0;
  bool maximal = false;
};

MaximalityVerdict maximality_verdict(const PlaneCurve& C, u64 p);

/// Exhaustive search for a homogeneous factor of degree <= max_deg with
/// coefficients in F_p or F_{p^2}. A found factor is verified by exact
/// division; nullopt does not certify irreducibility.
std::optional<TriPoly> find_small_factor(const PlaneCurve& C, unsigned max_deg,
                                         u64 candidate_budget = 5'000'000);

/// Distinct tangent directions of a cone over field K (direction vectors
/// (du, dv) in the cone's chart). K must contain the point's field.
std::vector<std::array<Fe, 2>> tangent_directions_over(const SingularPoint& sp, const Field& K);

/// All rational points of the curve over K, smooth and singular alike.
std::vector<ProjPoint> rational_curve_points(const PlaneCurve& C, const Field& K);

/// The singular points rational over K, analyzed with K-coordinates.
std::vector<SingularPoint> rational_singular_over(const PlaneCurve& C, const Field& K);

}  // namespace wiman
