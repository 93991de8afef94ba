#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wiman/hermitian.hpp"

namespace wiman {

/// Data of a hypothetical Galois cover H_q -> C.
struct CoverInstance {
  u64 q = 0;
  u64 hermitian_genus = 0;   // q(q-1)/2
  u64 hermitian_points = 0;  // q^3 + 1
  u64 target_genus = 0;
  u64 target_points = 0;
};

/// [lo, hi] for the Galois group order: lo = ceil(points ratio),
/// hi = floor((2g_H - 2)/(2g_C - 2)). Requires target genus >= 2.
std::pair<u64, u64> order_bounds(const CoverInstance& inst);

/// Divisors of |PGU(3,q)| = (q^3+1) q^3 (q^2-1) inside [lo, hi].
std::vector<u64> candidate_orders(const CoverInstance& inst, u64 lo, u64 hi);

/// Riemann-Hurwitz different degree forced by a degree-n quotient map.
i64 delta_required(const CoverInstance& inst, u64 n);

/// Admissible different-contributions per element order in PGU(3,q).
class IValueTable {
 public:
  explicit IValueTable(u64 q);
  u64 q() const { return q_; }
  /// Contributions an order-d element may have, or nullopt when no element
  /// of order d exists in PGU(3,q).
  std::optional<std::vector<u64>> contributions(u64 d) const;

 private:
  u64 q_ = 0;
  u64 p_ = 0;
};

IValueTable ivalue_table(u64 q);

using Census = std::map<u64, u64>;  // element order -> count

struct FeasibilityOptions {
  bool sylow_rule = true;             // exact Sylow count when l^1 || n
  bool unique_involution_rule = true; // 2-groups with one involution need order-8 elements
  u64 budget = 20'000'000;            // censuses examined
};

struct FeasibilityResult {
  bool feasible = false;
  Census witness;
  std::map<u64, std::vector<std::pair<u64, u64>>> witness_blocks;  // order -> [(i, #blocks)]
  u64 censuses_checked = 0;
  u64 assignments_checked = 0;
  /// Constraint-passing census whose best achievable Delta is closest to the
  /// target (equals the witness when feasible).
  Census best_census;
  i64 best_delta = -1;
  std::vector<std::string> notes;
};

/// Exhaustive search over order censuses and per-cyclic-block contribution
/// assignments under necessary subgroup conditions. Infeasible is a proof;
/// Feasible only means the arithmetic is inconclusive.
FeasibilityResult feasibility(u64 q, u64 n, i64 delta, const IValueTable& table,
                              const FeasibilityOptions& opt = {});

/// Check one concrete census against every engine constraint (soundness
/// regression hook: genuine subgroups must always pass).
bool census_passes_constraints(u64 n, const Census& census, const IValueTable& table,
                               const FeasibilityOptions& opt, std::string* why = nullptr);

/// Facts about the subgroups of the symmetric group on 5 letters, computed by
/// exhaustive closure enumeration.
struct S5Facts {
  u64 subgroup_count = 0;
  std::map<u64, u64> count_by_order;
  std::set<u64> orders;
  bool order10_all_dihedral = false;
  bool order20_none_abelian = false;
  std::set<u64> cyclic_orders;   // orders realized by cyclic subgroups
  std::set<u64> abelian_orders;  // orders realized by abelian subgroups
};

S5Facts s5_subgroup_facts();

/// Externally recorded normalizer data, cited and flagged as such.
struct RecordedFact {
  u64 case_order = 0;
  std::vector<u64> quotient_orders;
  std::vector<std::pair<std::string, u64>> structure_notes;  // ("cyclic"|"abelian", |Q|)
  std::string citation;
};

/// Tab-separated: case-order, comma-joined values, comma-joined notes
/// (kind@order), citation. '#' starts a comment line.
std::vector<RecordedFact> parse_facts(std::istream& in);
std::vector<RecordedFact> load_facts_file(const std::string& path);
/// The facts shipped with the tool (same content as the data file).
std::vector<RecordedFact> builtin_normalizer_facts();

enum class CaseVerdict {
  InfeasibleArithmetic,
  InfeasibleConstructive,
  ResolvedByRecordedFact,
  Feasible,
};

struct ExclusionCase {
  u64 order = 0;
  i64 delta_required = 0;
  CaseVerdict verdict = CaseVerdict::Feasible;
  bool arithmetic_infeasible = false;
  bool constructive = false;
  bool external = false;  // verdict rests on recorded facts
  FeasibilityResult arithmetic;
  std::string constructive_note;
  std::vector<std::string> citations;
  std::string narrative;
};

/// Try to close an arithmetically inconclusive case with recorded normalizer
/// data, cross-checked against the independently enumerated subgroup facts.
ExclusionCase resolve_with_facts(ExclusionCase cs, const std::vector<RecordedFact>& facts,
                                 const S5Facts& s5);

struct ExclusionReport {
  CoverInstance instance;
  u64 lo = 0, hi = 0;
  std::vector<u64> candidates;
  std::vector<ExclusionCase> cases;
  std::string verdict;  // "not-galois-covered" | "inconclusive" | "degenerate"
  std::vector<u64> pending;
  u64 arithmetic_cases = 0, constructive_cases = 0, recorded_cases = 0;
};

/// Full pipeline for one instance. The S5 facts are computed independently;
/// the order-32 case additionally receives the constructive certificate.
ExclusionReport exclusion_report(const CoverInstance& inst, const std::vector<RecordedFact>& facts);

/// The instance for the sextic over F_{19^2}, with genus and point count
/// recomputed from scratch rather than trusted.
CoverInstance wiman_cover_instance();

}  // namespace wiman
