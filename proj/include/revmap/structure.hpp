#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revmap/finite_group.hpp"
#include "revmap/subgroup.hpp"

namespace revmap {

enum class SylowShape { Cyclic, Dihedral, IndexTwoCyclic, Other };

std::string to_string(SylowShape shape);

struct SylowInfo {
  std::uint64_t prime;
  std::size_t order;
  SylowShape shape;
};

struct StructureReport {
  std::size_t order = 0;
  std::vector<std::uint64_t> primes;
  bool is_cyclic = false;
  bool is_dihedral = false;
  bool is_abelian = false;
  bool is_solvable = false;
  bool is_almost_sylow_cyclic = false;
  bool is_metacyclic = false;
  std::vector<SylowInfo> sylow;
  std::size_t largest_normal_2_subgroup_order = 1;
};

bool is_cyclic(const Subgroup& h);
/// Order 2n with a cyclic index-2 subgroup inverted by an involution outside
/// it. Z2 (n = 1) and the Klein four group (n = 2) count as dihedral.
bool is_dihedral(const Subgroup& h);
bool is_abelian(const Subgroup& h);
/// Even order with a cyclic subgroup of index 2.
bool has_cyclic_index_two_subgroup(const Subgroup& h);
bool is_solvable(const GroupPtr& group);
/// Has a cyclic normal subgroup with cyclic quotient.
bool is_metacyclic(const GroupPtr& group);

/// "Z<n>" for cyclic, "D<2n>" for dihedral, "G<n>" otherwise.
std::string shape_tag(const Subgroup& h);

/// A Sylow p-subgroup grown greedily: start from a p-element of largest
/// order and keep adjoining p-elements that normalize the current subgroup.
/// Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const GroupPtr& group, std::uint64_t p);

SylowShape sylow_shape(const Subgroup& sylow);

/// Intersection of all Sylow p-subgroups, the largest normal p-subgroup.
Subgroup largest_normal_p_subgroup(const GroupPtr& group, std::uint64_t p);

StructureReport structure_report(const GroupPtr& group);

}  // namespace revmap
