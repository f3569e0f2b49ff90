#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "revmap/finite_group.hpp"

namespace revmap {

/// Sorted element ids of the subgroup generated by `gens` (identity included).
std::vector<ElementId> closure(const FiniteGroup& group, std::span<const ElementId> gens);
std::size_t closure_size(const FiniteGroup& group, std::span<const ElementId> gens);

/// A subgroup of a shared parent group, stored as a sorted element list plus
/// a membership mask.
class Subgroup {
 public:
  /// Trusts that `elements` is sorted and closed; use the free functions
  /// below to build validated subgroups.
  Subgroup(GroupPtr parent, std::vector<ElementId> elements);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }

  std::size_t order() const { return elements_.size(); }
  std::size_t index() const { return parent_->order() / elements_.size(); }
  bool contains(ElementId a) const { return member_[a]; }
  std::span<const ElementId> elements() const { return elements_; }

  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<bool> member_;
};

/// Smallest subgroup containing `elems`. Throws ValidationError for ids
/// outside the group.
Subgroup subgroup_generated(const GroupPtr& group, std::span<const ElementId> elems);
Subgroup subgroup_generated(const GroupPtr& group, std::initializer_list<ElementId> elems);
Subgroup trivial_subgroup(const GroupPtr& group);
Subgroup whole_group(const GroupPtr& group);

/// Validates that `elems` is closed and contains the identity.
Subgroup subgroup_from_elements(const GroupPtr& group, std::vector<ElementId> elems);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// H^g = g^-1 H g.
Subgroup conjugate(const Subgroup& h, ElementId g);
bool is_normal(const Subgroup& h);
bool normalizes(const Subgroup& h, ElementId g);
/// Subgroup generated by h and g.
Subgroup join(const Subgroup& h, ElementId g);

Subgroup center(const GroupPtr& group);
Subgroup centralizer(const GroupPtr& group, ElementId a);
/// Subgroup generated by all commutators of elements of h.
Subgroup derived_subgroup(const Subgroup& h);

struct Coset {
  ElementId representative;          // least element id in the coset
  std::vector<ElementId> elements;   // sorted
};

/// Left cosets gH sorted by representative. Throws ValidationError when h
/// does not belong to `group`.
std::vector<Coset> left_cosets(const GroupPtr& group, const Subgroup& h);

/// The cosets of one subgroup together with the element-to-coset lookup.
struct CosetFamily {
  Subgroup subgroup;
  std::vector<Coset> cosets;
  std::vector<std::uint32_t> coset_of;  // indexed by ElementId

  std::size_t size() const { return cosets.size(); }
};

CosetFamily coset_family(const Subgroup& h);

}  // namespace revmap
