#include "revmap/homomorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "revmap/errors.hpp"

namespace revmap {

namespace {

constexpr ElementId kUnset = ~ElementId{0};

std::vector<std::size_t> order_statistics(const FiniteGroup& group) {
  std::vector<std::size_t> counts(group.order() + 1, 0);
  for (ElementId a = 0; a < group.order(); ++a) ++counts[group.element_order(a)];
  return counts;
}

/// Backtracking search for homomorphisms source -> target that send the
/// chosen generators to elements of equal order, pruned by the orders of
/// pairwise products. Each complete assignment is extended and handed to
/// `accept`; the search stops when `accept` returns false.
template <typename Accept>
void search_isomorphisms(const GroupPtr& source, const GroupPtr& target, Accept&& accept) {
  const FiniteGroup& src = *source;
  const FiniteGroup& dst = *target;
  std::vector<ElementId> gens = small_generating_set(src);
  if (gens.empty()) {
    GroupHom trivial(source, target, std::vector<ElementId>(src.order(), FiniteGroup::identity()));
    if (trivial.is_bijective()) accept(trivial);
    return;
  }

  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (ElementId b = 0; b < dst.order(); ++b) {
      if (dst.element_order(b) == src.element_order(gens[i])) candidates[i].push_back(b);
    }
  }

  std::vector<ElementId> images(gens.size(), kUnset);
  bool stop = false;
  auto consistent = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src.element_order(src.mul(gens[j], gens[k])) !=
          dst.element_order(dst.mul(images[j], images[k]))) {
        return false;
      }
      if (src.element_order(src.mul(gens[j], src.inv(gens[k]))) !=
          dst.element_order(dst.mul(images[j], dst.inv(images[k])))) {
        return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == gens.size()) {
      auto hom = extend_to_hom(source, target, gens, images);
      if (hom && hom->is_bijective() && !accept(*hom)) stop = true;
      return;
    }
    for (ElementId b : candidates[k]) {
      images[k] = b;
      if (consistent(k)) self(self, k + 1);
      if (stop) return;
    }
    images[k] = kUnset;
  };
  recurse(recurse, 0);
}

}  // namespace

std::size_t default_enumeration_cap() {
  const char* value = std::getenv("REVMAP_CAP");
  if (value != nullptr && *value != '\0') {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return 500;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<ElementId> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->order()) {
    throw ValidationError("homomorphism image table has the wrong size");
  }
}

bool GroupHom::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<bool> hit(target_->order(), false);
  for (ElementId b : images_) {
    if (b >= hit.size() || hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

bool GroupHom::is_multiplicative() const {
  for (ElementId a = 0; a < source_->order(); ++a) {
    for (ElementId b = 0; b < source_->order(); ++b) {
      if (images_[source_->mul(a, b)] != target_->mul(images_[a], images_[b])) return false;
    }
  }
  return true;
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (target_ != next.source_) throw ValidationError("cannot compose: target/source mismatch");
  std::vector<ElementId> composed(images_.size());
  for (ElementId a = 0; a < images_.size(); ++a) composed[a] = next.images_[images_[a]];
  return GroupHom(source_, next.target_, std::move(composed));
}

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) throw ValidationError("homomorphism is not invertible");
  std::vector<ElementId> inv(images_.size());
  for (ElementId a = 0; a < images_.size(); ++a) inv[images_[a]] = a;
  return GroupHom(target_, source_, std::move(inv));
}

std::vector<std::pair<std::string, ElementId>> GroupHom::generator_images() const {
  std::vector<std::pair<std::string, ElementId>> out;
  for (const auto& gen : source_->generators()) out.emplace_back(gen.label, images_[gen.id]);
  return out;
}

GroupHom identity_hom(const GroupPtr& group) {
  std::vector<ElementId> images(group->order());
  for (ElementId a = 0; a < images.size(); ++a) images[a] = a;
  return GroupHom(group, group, std::move(images));
}

std::optional<GroupHom> extend_to_hom(const GroupPtr& source, const GroupPtr& target,
                                      std::span<const ElementId> gens,
                                      std::span<const ElementId> images) {
  const FiniteGroup& src = *source;
  const FiniteGroup& dst = *target;
  std::vector<ElementId> map(src.order(), kUnset);
  std::vector<ElementId> queue{FiniteGroup::identity()};
  map[FiniteGroup::identity()] = FiniteGroup::identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId a = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementId next = src.mul(a, gens[k]);
      ElementId image = dst.mul(map[a], images[k]);
      if (map[next] == kUnset) {
        map[next] = image;
        queue.push_back(next);
      } else if (map[next] != image) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != src.order()) {
    throw ValidationError("extend_to_hom: generators do not generate the source group");
  }
  return GroupHom(source, target, std::move(map));
}

std::vector<Automorphism> automorphism_group(const GroupPtr& group, std::size_t cap) {
  if (group->order() > cap) {
    throw OverflowError("automorphism enumeration for a group of order " +
                            std::to_string(group->order()),
                        cap);
  }
  std::vector<Automorphism> result;
  search_isomorphisms(group, group, [&](const GroupHom& hom) {
    result.push_back(hom);
    return true;
  });
  std::sort(result.begin(), result.end(), [](const GroupHom& a, const GroupHom& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(), b.images().begin(),
                                        b.images().end());
  });
  return result;
}

std::optional<GroupHom> is_isomorphic(const GroupPtr& g, const GroupPtr& h, std::size_t cap) {
  if (g->order() > cap || h->order() > cap) {
    throw OverflowError("isomorphism test for groups of order " + std::to_string(g->order()) +
                            " and " + std::to_string(h->order()),
                        cap);
  }
  if (g->order() != h->order()) return std::nullopt;
  if (order_statistics(*g) != order_statistics(*h)) return std::nullopt;
  std::optional<GroupHom> witness;
  search_isomorphisms(g, h, [&](const GroupHom& hom) {
    witness = hom;
    return false;
  });
  return witness;
}

Quotient quotient_group(const Subgroup& normal) {
  if (!is_normal(normal)) throw ValidationError("subgroup is not normal");
  const GroupPtr& source = normal.parent_ptr();
  const FiniteGroup& group = *source;
  CosetFamily family = coset_family(normal);
  const std::size_t degree = family.size();

  auto action = [&](ElementId g) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c) {
      images[c] = family.coset_of[group.mul(family.cosets[c].representative, g)];
    }
    return Permutation(std::move(images));
  };

  std::vector<LabeledPermutation> gens;
  for (const auto& gen : group.generators()) gens.push_back({gen.label, action(gen.id)});
  GroupPtr quotient = FiniteGroup::from_generators(degree, std::move(gens));

  std::vector<ElementId> images(group.order());
  for (ElementId g = 0; g < group.order(); ++g) images[g] = quotient->index_of(action(g));
  return Quotient{quotient, GroupHom(source, quotient, std::move(images))};
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  std::vector<LabeledPermutation> gens;
  for (const auto& gen : g.generators()) {
    gens.push_back({gen.label + "_1", g.element(gen.id).extended(degree)});
  }
  for (const auto& gen : h.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t p = 0; p < g.degree(); ++p) images[p] = static_cast<Point>(p);
    const Permutation& perm = h.element(gen.id);
    for (std::size_t p = 0; p < h.degree(); ++p) {
      images[g.degree() + p] = static_cast<Point>(g.degree() + perm(static_cast<Point>(p)));
    }
    gens.push_back({gen.label + "_2", Permutation(std::move(images))});
  }
  return FiniteGroup::from_generators(degree, std::move(gens), g.order() * h.order());
}

}  // namespace revmap
