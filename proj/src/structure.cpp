#include "revmap/structure.hpp"

#include <algorithm>

#include "revmap/errors.hpp"
#include "revmap/numeric.hpp"

namespace revmap {

namespace {

bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::string to_string(SylowShape shape) {
  switch (shape) {
    case SylowShape::Cyclic: return "cyclic";
    case SylowShape::Dihedral: return "dihedral";
    case SylowShape::IndexTwoCyclic: return "index-2-cyclic";
    case SylowShape::Other: return "other";
  }
  return "other";
}

bool is_cyclic(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](ElementId a) { return group.element_order(a) == h.order(); });
}

bool is_dihedral(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  if (h.order() % 2 != 0) return false;
  const std::size_t n = h.order() / 2;
  if (n == 1) return true;
  for (ElementId c : h.elements()) {
    if (group.element_order(c) != n) continue;
    ElementId c_inv = group.inv(c);
    // <c> has index 2; any involution outside it that inverts c decides.
    std::vector<bool> in_c(group.order(), false);
    ElementId power = FiniteGroup::identity();
    for (std::size_t k = 0; k < n; ++k) {
      in_c[power] = true;
      power = group.mul(power, c);
    }
    for (ElementId t : h.elements()) {
      if (in_c[t] || group.element_order(t) != 2) continue;
      if (group.conj(c, t) == c_inv) return true;
    }
  }
  return false;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& group = h.parent();
  for (ElementId a : h.elements()) {
    for (ElementId b : h.elements()) {
      if (b > a) break;
      if (group.mul(a, b) != group.mul(b, a)) return false;
    }
  }
  return true;
}

bool has_cyclic_index_two_subgroup(const Subgroup& h) {
  if (h.order() % 2 != 0) return false;
  const FiniteGroup& group = h.parent();
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](ElementId a) { return group.element_order(a) == h.order() / 2; });
}

bool is_solvable(const GroupPtr& group) {
  Subgroup current = whole_group(group);
  while (current.order() > 1) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_metacyclic(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  std::vector<bool> seen_cyclic(g.order(), false);
  for (ElementId a = 0; a < g.order(); ++a) {
    if (seen_cyclic[a]) continue;
    Subgroup cyc = subgroup_generated(group, {a});
    // Mark every generator of <a> so each cyclic subgroup is examined once.
    for (ElementId b : cyc.elements()) {
      if (g.element_order(b) == cyc.order()) seen_cyclic[b] = true;
    }
    if (!is_normal(cyc)) continue;
    for (ElementId x = 0; x < g.order(); ++x) {
      std::size_t k = 1;
      ElementId power = x;
      while (!cyc.contains(power)) {
        power = g.mul(power, x);
        ++k;
      }
      if (k * cyc.order() == g.order()) return true;
    }
  }
  return false;
}

std::string shape_tag(const Subgroup& h) {
  if (is_cyclic(h)) return "Z" + std::to_string(h.order());
  if (is_dihedral(h)) return "D" + std::to_string(h.order());
  return "G" + std::to_string(h.order());
}

Subgroup sylow_subgroup(const GroupPtr& group, std::uint64_t p) {
  const FiniteGroup& g = *group;
  const std::size_t target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(group);

  std::vector<ElementId> p_elements;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (is_p_power(g.element_order(a), p)) p_elements.push_back(a);
  }
  ElementId start = p_elements.front();
  for (ElementId a : p_elements) {
    if (g.element_order(a) > g.element_order(start)) start = a;
  }
  std::vector<ElementId> gens{start};
  Subgroup current = subgroup_generated(group, gens);
  // A proper p-subgroup of a Sylow subgroup P is properly contained in its
  // normalizer inside P, so a normalizing p-element outside it always exists.
  while (current.order() < target) {
    bool grown = false;
    for (ElementId y : p_elements) {
      if (current.contains(y) || !normalizes(current, y)) continue;
      gens.push_back(y);
      current = subgroup_generated(group, gens);
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow_subgroup: greedy growth stalled");
  }
  if (current.order() != target) throw Error("sylow_subgroup: order check failed");
  return current;
}

SylowShape sylow_shape(const Subgroup& sylow) {
  if (is_cyclic(sylow)) return SylowShape::Cyclic;
  if (is_dihedral(sylow)) return SylowShape::Dihedral;
  if (has_cyclic_index_two_subgroup(sylow)) return SylowShape::IndexTwoCyclic;
  return SylowShape::Other;
}

Subgroup largest_normal_p_subgroup(const GroupPtr& group, std::uint64_t p) {
  Subgroup core = sylow_subgroup(group, p);
  for (ElementId g = 0; g < group->order() && core.order() > 1; ++g) {
    core = intersection(core, conjugate(core, g));
  }
  return core;
}

StructureReport structure_report(const GroupPtr& group) {
  StructureReport report;
  Subgroup all = whole_group(group);
  report.order = group->order();
  report.primes = prime_divisors(group->order());
  report.is_cyclic = is_cyclic(all);
  report.is_dihedral = is_dihedral(all);
  report.is_abelian = is_abelian(all);
  report.is_solvable = is_solvable(group);
  report.is_metacyclic = is_metacyclic(group);
  // Sylow p-subgroups are conjugate, so one per prime decides the property.
  bool almost = true;
  for (std::uint64_t p : report.primes) {
    Subgroup sylow = sylow_subgroup(group, p);
    SylowShape shape = sylow_shape(sylow);
    report.sylow.push_back({p, sylow.order(), shape});
    if (p == 2) {
      almost = almost && has_cyclic_index_two_subgroup(sylow);
    } else {
      almost = almost && shape == SylowShape::Cyclic;
    }
  }
  report.is_almost_sylow_cyclic = almost;
  report.largest_normal_2_subgroup_order = largest_normal_p_subgroup(group, 2).order();
  return report;
}

}  // namespace revmap
