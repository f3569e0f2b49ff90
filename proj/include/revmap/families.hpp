#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revmap/finite_group.hpp"

namespace revmap {

enum class FamilyKind { Dihedral, DihedralProduct, Rank3CyclicExt, S4Cover, Metacyclic, Explicit };

/// A family tag plus its integer parameters, written in the CLI mini-language
/// as `D:n`, `DxD:m,n`, `R3:m,n,l`, `S4C:m`, `MC:n,m,lambda` or `PERM:<file>`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Dihedral;
  std::vector<long long> params;
  std::string source;  // file path for PERM groups

  std::string to_string() const;
  static FamilySpec parse(std::string_view text);

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws ValidationError when the parameters leave the family's domain.
void validate(const FamilySpec& spec);

/// A family group together with its named elements (g, h / a, u, b, v, w /
/// a, b, c, u, v, w / w, v, u, h).
struct LabeledGroup {
  FamilySpec spec;
  GroupPtr group;

  ElementId label(std::string_view name) const;
  /// Parses a word such as "abw", "g5", "h^-1v" or "1" into an element.
  /// Labels are single letters; products are read left to right.
  ElementId word(std::string_view text) const;
  /// A word in the labels that evaluates to `element`, using as few
  /// label powers as possible.
  std::string spell(ElementId element) const;
};

/// D_{2n} = <g> : <h>, order 2n.
LabeledGroup dihedral(long long n);
/// D_{2m} x D_{2n} = <a, u> x <b, v> with w = uv; m, n > 1 coprime odd.
LabeledGroup dihedral_product(long long m, long long n);
/// (Z_m x Z_n x Z_l) : <u, v> with (a,b,c)^u = (a^-1, b, c^-1) and
/// (a,b,c)^v = (a, b^-1, c^-1); m, n, l > 1 pairwise coprime odd.
LabeledGroup rank3_cyclic_ext(long long m, long long n, long long l);
/// <w^2, u> : (<h> : <v>) of order 8m, where <w> : <v> is dihedral of order 8,
/// u = wv, |h| = m and h permutes (u, w^2 u, w^2) cyclically; m odd, 3 | m.
LabeledGroup s4_cover(long long m);
/// Z_n : Z_m = <g> : <h> with g^h = g^lambda.
LabeledGroup metacyclic(long long n, long long m, long long lambda);
/// Generators read from text, one per line in disjoint-cycle notation;
/// they are labeled a, b, c, ... in order.
LabeledGroup explicit_group(std::string_view text, std::string source = {});

LabeledGroup build_family(const FamilySpec& spec);

}  // namespace revmap
