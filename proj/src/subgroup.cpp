#include "revmap/subgroup.hpp"

#include <algorithm>

#include "revmap/errors.hpp"

namespace revmap {

namespace {

std::vector<bool> closure_mask(const FiniteGroup& group, std::span<const ElementId> gens,
                               std::size_t* count) {
  std::vector<bool> member(group.order(), false);
  std::vector<ElementId> found{FiniteGroup::identity()};
  member[FiniteGroup::identity()] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId g : gens) {
      ElementId next = group.mul(found[i], g);
      if (!member[next]) {
        member[next] = true;
        found.push_back(next);
      }
    }
  }
  *count = found.size();
  return member;
}

std::vector<ElementId> mask_to_list(const std::vector<bool>& member) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < member.size(); ++a) {
    if (member[a]) out.push_back(a);
  }
  return out;
}

void check_ids(const FiniteGroup& group, std::span<const ElementId> elems) {
  for (ElementId a : elems) {
    if (a >= group.order()) {
      throw ValidationError("element id " + std::to_string(a) + " is not in a group of order " +
                            std::to_string(group.order()));
    }
  }
}

}  // namespace

std::vector<ElementId> closure(const FiniteGroup& group, std::span<const ElementId> gens) {
  std::size_t count = 0;
  return mask_to_list(closure_mask(group, gens, &count));
}

std::size_t closure_size(const FiniteGroup& group, std::span<const ElementId> gens) {
  std::size_t count = 0;
  closure_mask(group, gens, &count);
  return count;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_->order(), false) {
  for (ElementId a : elements_) member_[a] = true;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](ElementId a) { return other.contains(a); });
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const ElementId> elems) {
  check_ids(*group, elems);
  return Subgroup(group, closure(*group, elems));
}

Subgroup subgroup_generated(const GroupPtr& group, std::initializer_list<ElementId> elems) {
  return subgroup_generated(group, std::span<const ElementId>(elems.begin(), elems.size()));
}

Subgroup trivial_subgroup(const GroupPtr& group) {
  return Subgroup(group, {FiniteGroup::identity()});
}

Subgroup whole_group(const GroupPtr& group) {
  std::vector<ElementId> all(group->order());
  for (ElementId a = 0; a < all.size(); ++a) all[a] = a;
  return Subgroup(group, std::move(all));
}

Subgroup subgroup_from_elements(const GroupPtr& group, std::vector<ElementId> elems) {
  check_ids(*group, elems);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup candidate(group, elems);
  if (!candidate.contains(FiniteGroup::identity())) {
    throw ValidationError("subset does not contain the identity");
  }
  for (ElementId a : elems) {
    for (ElementId b : elems) {
      if (!candidate.contains(group->mul(a, b))) {
        throw ValidationError("subset is not closed under multiplication");
      }
    }
  }
  return candidate;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw ValidationError("subgroups of different groups");
  std::vector<ElementId> common;
  for (ElementId x : a.elements()) {
    if (b.contains(x)) common.push_back(x);
  }
  return Subgroup(a.parent_ptr(), std::move(common));
}

Subgroup conjugate(const Subgroup& h, ElementId g) {
  const FiniteGroup& group = h.parent();
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (ElementId x : h.elements()) out.push_back(group.conj(x, g));
  std::sort(out.begin(), out.end());
  return Subgroup(h.parent_ptr(), std::move(out));
}

bool normalizes(const Subgroup& h, ElementId g) {
  const FiniteGroup& group = h.parent();
  for (ElementId x : h.elements()) {
    if (!h.contains(group.conj(x, g))) return false;
  }
  return true;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  for (const auto& gen : group.generators()) {
    if (!normalizes(h, gen.id)) return false;
  }
  return true;
}

Subgroup join(const Subgroup& h, ElementId g) {
  std::vector<ElementId> gens(h.elements().begin(), h.elements().end());
  gens.push_back(g);
  return subgroup_generated(h.parent_ptr(), gens);
}

Subgroup centralizer(const GroupPtr& group, ElementId a) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < group->order(); ++x) {
    if (group->mul(a, x) == group->mul(x, a)) out.push_back(x);
  }
  return Subgroup(group, std::move(out));
}

Subgroup center(const GroupPtr& group) {
  std::vector<ElementId> out;
  auto gens = group->generator_ids();
  for (ElementId x = 0; x < group->order(); ++x) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](ElementId g) {
      return group->mul(g, x) == group->mul(x, g);
    });
    if (central) out.push_back(x);
  }
  return Subgroup(group, std::move(out));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementId> commutators;
  for (ElementId x : h.elements()) {
    for (ElementId y : h.elements()) {
      ElementId c = group.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return Subgroup(h.parent_ptr(), closure(group, commutators));
}

std::vector<Coset> left_cosets(const GroupPtr& group, const Subgroup& h) {
  if (h.parent_ptr() != group) throw ValidationError("subgroup does not belong to the group");
  return coset_family(h).cosets;
}

CosetFamily coset_family(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  CosetFamily family{h, {}, std::vector<std::uint32_t>(group.order(), kUnassigned)};
  // Scanning ids in increasing order makes each new coset's first element
  // its least member, so cosets come out sorted by representative.
  for (ElementId g = 0; g < group.order(); ++g) {
    if (family.coset_of[g] != kUnassigned) continue;
    Coset coset{g, {}};
    coset.elements.reserve(h.order());
    auto index = static_cast<std::uint32_t>(family.cosets.size());
    for (ElementId x : h.elements()) {
      ElementId member = group.mul(g, x);
      coset.elements.push_back(member);
      family.coset_of[member] = index;
    }
    std::sort(coset.elements.begin(), coset.elements.end());
    family.cosets.push_back(std::move(coset));
  }
  return family;
}

}  // namespace revmap
