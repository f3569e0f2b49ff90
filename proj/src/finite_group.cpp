#include "revmap/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "revmap/errors.hpp"
#include "revmap/subgroup.hpp"

namespace revmap {

namespace {

constexpr std::size_t kTableLimit = 2048;

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0' || parsed == 0) return fallback;
  return static_cast<std::size_t>(parsed);
}

}  // namespace

std::size_t default_closure_cap() { return env_cap("REVMAP_CLOSURE_CAP", 20000); }

GroupPtr FiniteGroup::from_generators(std::size_t degree, std::vector<LabeledPermutation> generators,
                                      std::size_t cap) {
  for (const auto& gen : generators) {
    if (gen.perm.degree() != degree) {
      throw ValidationError("generator '" + gen.label + "' has degree " +
                            std::to_string(gen.perm.degree()) + ", expected " +
                            std::to_string(degree));
    }
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      Permutation next = current * gen.perm;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw OverflowError("group closure exceeds enumeration cap", cap);
        }
        queue.push_back(std::move(next));
      }
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->elements_.assign(seen.begin(), seen.end());
  std::sort(group->elements_.begin(), group->elements_.end());
  const std::size_t n = group->elements_.size();
  group->index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) group->index_.emplace(group->elements_[i], static_cast<ElementId>(i));

  if (n <= kTableLimit) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group->table_[a * n + b] = group->index_.at(group->elements_[a] * group->elements_[b]);
      }
    }
  }
  group->inverses_.resize(n);
  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    group->inverses_[a] = group->index_.at(group->elements_[a].inverse());
    group->orders_[a] = group->elements_[a].order();
  }
  for (auto& gen : generators) {
    group->generators_.push_back({gen.label, group->index_.at(gen.perm)});
  }
  return group;
}

std::optional<ElementId> FiniteGroup::find(const Permutation& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) {
    throw ValidationError("permutation " + perm.to_cycle_string() + " is not in the group");
  }
  return it->second;
}

ElementId FiniteGroup::pow(ElementId a, long long k) const {
  long long n = static_cast<long long>(orders_[a]);
  long long e = ((k % n) + n) % n;
  ElementId result = identity();
  ElementId base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<ElementId> FiniteGroup::generator(std::string_view label) const {
  for (const auto& gen : generators_) {
    if (gen.label == label) return gen.id;
  }
  return std::nullopt;
}

std::vector<ElementId> FiniteGroup::generator_ids() const {
  std::vector<ElementId> ids;
  ids.reserve(generators_.size());
  for (const auto& gen : generators_) ids.push_back(gen.id);
  return ids;
}

std::vector<ElementId> involutions(const FiniteGroup& group) {
  std::vector<ElementId> result;
  for (ElementId a = 0; a < group.order(); ++a) {
    if (group.element_order(a) == 2) result.push_back(a);
  }
  return result;
}

std::vector<ElementId> small_generating_set(const FiniteGroup& group) {
  std::vector<ElementId> gens;
  std::vector<bool> member(group.order(), false);
  member[FiniteGroup::identity()] = true;
  std::size_t size = 1;
  while (size < group.order()) {
    // Prefer the element whose adjunction grows the subgroup most, breaking
    // ties by element order and then by id.
    ElementId best = 0;
    std::size_t best_size = 0;
    std::size_t best_order = 0;
    for (ElementId a = 0; a < group.order(); ++a) {
      if (member[a]) continue;
      std::vector<ElementId> trial = gens;
      trial.push_back(a);
      std::size_t trial_size = closure_size(group, trial);
      std::size_t order = group.element_order(a);
      if (trial_size > best_size || (trial_size == best_size && order > best_order)) {
        best = a;
        best_size = trial_size;
        best_order = order;
      }
      if (best_size == group.order()) break;
    }
    gens.push_back(best);
    std::vector<ElementId> closed = closure(group, gens);
    std::fill(member.begin(), member.end(), false);
    for (ElementId e : closed) member[e] = true;
    size = closed.size();
  }
  return gens;
}

}  // namespace revmap
