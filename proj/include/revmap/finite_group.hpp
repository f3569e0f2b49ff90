#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revmap/permutation.hpp"

namespace revmap {

/// Index of an element inside its FiniteGroup. Indices follow the
/// lexicographic order of the underlying permutations, so the identity is
/// always element 0.
using ElementId = std::uint32_t;

struct LabeledPermutation {
  std::string label;
  Permutation perm;
};

struct LabeledElement {
  std::string label;
  ElementId id;
};

/// Closure cap used when none is given. REVMAP_CLOSURE_CAP overrides it.
std::size_t default_closure_cap();

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully materialized permutation group with labeled generators.
/// Immutable after construction and safe to share between threads.
class FiniteGroup {
 public:
  /// Closes the generators under multiplication. Throws ValidationError when
  /// a generator has the wrong degree and OverflowError when the closure
  /// grows past `cap` elements.
  static GroupPtr from_generators(std::size_t degree, std::vector<LabeledPermutation> generators,
                                  std::size_t cap = default_closure_cap());

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  static constexpr ElementId identity() { return 0; }

  const Permutation& element(ElementId id) const { return elements_[id]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<ElementId> find(const Permutation& perm) const;
  /// Throws ValidationError if `perm` is not in the group.
  ElementId index_of(const Permutation& perm) const;

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_of(elements_[a] * elements_[b]);
  }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  ElementId pow(ElementId a, long long k) const;
  /// x^y = y^-1 x y.
  ElementId conj(ElementId x, ElementId y) const { return mul(mul(inv(y), x), y); }
  ElementId commutator(ElementId x, ElementId y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  std::size_t element_order(ElementId a) const { return orders_[a]; }

  const std::vector<LabeledElement>& generators() const { return generators_; }
  std::optional<ElementId> generator(std::string_view label) const;
  std::vector<ElementId> generator_ids() const;

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<std::size_t> orders_;
  std::vector<LabeledElement> generators_;
};

/// Elements of order exactly 2, in increasing id order.
std::vector<ElementId> involutions(const FiniteGroup& group);

/// A generating set of at most a few elements, found greedily by adjoining
/// the highest-order element outside the current subgroup.
std::vector<ElementId> small_generating_set(const FiniteGroup& group);

}  // namespace revmap
