#pragma once

#include <map>
#include <string>
#include <vector>

#include "wiman/util.hpp"

namespace wiman {

/// Permutation of {0..n-1} with a provenance label.
struct Perm {
  std::vector<u32> img;
  std::string label;

  static Perm identity(u32 n, std::string label = "id");
  u32 degree() const { return static_cast<u32>(img.size()); }
  bool is_identity() const;
  u64 order() const;   // lcm of cycle lengths
  u64 fixed() const;   // number of fixed points
  Perm inverse() const;
};

/// (a * b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
bool is_bijection(const std::vector<u32>& img);

/// Finite permutation group given by closure of its generators; elements are
/// stored in deterministic breadth-first discovery order, identity first.
struct PermGroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  u64 order = 0;
  std::map<u64, u64> census;  // element order -> count

  const Perm& identity() const { return elements.front(); }
};

/// Breadth-first closure; throws capped_error above the ceiling.
PermGroup close_generators(std::vector<Perm> generators, u64 ceiling = 10080);

/// Index-level multiplication table for a closed group (order bounded).
struct GroupTable {
  u32 n = 0;
  std::vector<u32> mul;        // n*n
  std::vector<u32> inv;        // n
  std::vector<u64> elt_order;  // n
  u32 at(u32 a, u32 b) const { return mul[static_cast<size_t>(a) * n + b]; }
};

GroupTable make_table(const PermGroup& g);

/// All subgroups as sorted element-index sets, deterministically ordered.
/// When order_divides != 0, only subgroups whose order divides it are grown
/// (still a complete enumeration of that family). Group order capped at 200.
std::vector<std::vector<u32>> all_subgroups(const GroupTable& t, u64 order_divides = 0);

/// Coset-action certificate: an order-24 subgroup H, the 5-coset labeling and
/// the induced isomorphism onto the symmetric group on 5 letters.
struct S5Certificate {
  bool ok = false;
  std::string diagnostics;
  std::vector<u32> subgroup_generators;  // element indices generating H
  std::vector<u32> subgroup;             // all of H
  std::vector<u32> coset_of;             // element index -> coset label 0..4
  u64 image_order = 0;
  bool kernel_trivial = false;
};

S5Certificate certify_s5(const PermGroup& g);

}  // namespace wiman
