#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revmap/finite_group.hpp"
#include "revmap/subgroup.hpp"

namespace revmap {

/// Enumeration cap for automorphism and triple searches. REVMAP_CAP
/// overrides the default of 500.
std::size_t default_enumeration_cap();

/// A homomorphism stored as its total element map.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<ElementId> images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  ElementId operator()(ElementId a) const { return images_[a]; }
  std::span<const ElementId> images() const { return images_; }

  bool is_bijective() const;
  /// Exhaustive check of f(ab) = f(a) f(b) over all pairs.
  bool is_multiplicative() const;

  /// Applies *this first, then `next`.
  GroupHom then(const GroupHom& next) const;
  /// Requires a bijection.
  GroupHom inverse() const;

  /// Images of the source's labeled generators.
  std::vector<std::pair<std::string, ElementId>> generator_images() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<ElementId> images_;
};

using Automorphism = GroupHom;

GroupHom identity_hom(const GroupPtr& group);

/// Extends gens[i] -> images[i] to a homomorphism along a Cayley-graph
/// spanning tree of `source`; empty when the assignment does not extend
/// (some Cayley edge is inconsistent). `gens` must generate `source`.
std::optional<GroupHom> extend_to_hom(const GroupPtr& source, const GroupPtr& target,
                                      std::span<const ElementId> gens,
                                      std::span<const ElementId> images);

/// Every automorphism of the group, identity first, then in lexicographic
/// order of image tables. Throws OverflowError when |G| exceeds `cap`.
std::vector<Automorphism> automorphism_group(const GroupPtr& group,
                                             std::size_t cap = default_enumeration_cap());

/// A witness isomorphism G -> H, or empty.
std::optional<GroupHom> is_isomorphic(const GroupPtr& g, const GroupPtr& h,
                                      std::size_t cap = default_enumeration_cap());

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N acting on the cosets of N. Throws ValidationError when N is not normal.
Quotient quotient_group(const Subgroup& normal);

/// G x H acting on the disjoint union of the two point sets; generator labels
/// gain the suffixes "_1" and "_2".
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace revmap
