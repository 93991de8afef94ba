#pragma once

#include <optional>
#include <span>
#include <unordered_map>

#include "wiman/perm.hpp"
#include "wiman/plane_curve.hpp"

namespace wiman {

/// Self-map of the plane given by three coprime forms of a common degree.
/// Degree-1 maps carry their matrix rows alongside.
struct CurveMap {
  std::string name;
  std::array<TriPoly, 3> forms;
  unsigned map_degree() const { return forms[0].degree(); }
  ProjPoint apply(const ProjPoint& P) const;  // throws on base points
  bool is_base_point(const ProjPoint& P) const;
};

/// Verify F(M(X,Y,Z)) is divisible by F and return the cofactor.
TriPoly verify_preserves_curve(const PlaneCurve& C, const CurveMap& M);

/// The same map with coefficients pushed into a larger field.
CurveMap lift_map(const CurveMap& M, const FieldHom& h);

/// Degree-1 place of the nonsingular model, supported at a rational point of
/// the plane model. At a split node there is one place per rational branch,
/// tagged with its tangent direction and a truncated branch parametrization.
struct Place {
  ProjPoint point;
  bool at_node = false;
  unsigned chart = 2;
  std::array<Fe, 2> tangent;                            // node places only
  std::shared_ptr<const std::array<Series, 3>> param;   // node places only
};

struct PlaceSet {
  PlaneCurve curve;
  Field field;
  std::vector<Place> places;
  PlaceCensus census;
  std::unordered_map<std::string, u32> smooth_at;               // point key -> index
  std::unordered_map<std::string, std::vector<u32>> branches_at;  // node key -> indices
};

struct BuildPlacesOptions {
  unsigned start_order = 4;
  unsigned truncation_cap = 20;
  u64 min_places = 14;  // faithfulness margin 2g+2
};

/// Index every degree-1 place over K. Branch parametrizations are refined
/// until each map in `validate` has a nonzero leading image coefficient on
/// every branch (cap per options).
PlaceSet build_places(const PlaneCurve& C, const Field& K, std::span<const CurveMap> validate,
                      const BuildPlacesOptions& opt = {});

/// The permutation a curve self-map induces on the indexed places. Base
/// points are resolved through the branch parametrizations.
Perm map_to_permutation(const CurveMap& M, const PlaceSet& ps);

}  // namespace wiman
