#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revmap/families.hpp"
#include "revmap/homomorphism.hpp"
#include "revmap/maps.hpp"
#include "revmap/report.hpp"

namespace revmap {

using Params = std::vector<std::pair<std::string, long long>>;

/// All ordered reversing triples, sorted by (x, y, z). Throws OverflowError
/// when |G| exceeds `cap`.
std::vector<ReversingTriple> enumerate_reversing_triples(const GroupPtr& group,
                                                         std::size_t cap = default_enumeration_cap());

/// Reversing triples with yz = zy and y != z, so <y, z> is a Klein four group.
std::vector<ReversingTriple> enumerate_regular_triples(const GroupPtr& group,
                                                       std::size_t cap = default_enumeration_cap());

/// Applying automorphism `automorphism` (an index into the list the classes
/// were built from), then swapping x and y when `swapped`, sends `triple`
/// to the class representative.
struct ClassMember {
  ReversingTriple triple;
  std::size_t automorphism = 0;
  bool swapped = false;
};

struct EquivalenceClass {
  ReversingTriple representative;  // lexicographic minimum of the members
  std::vector<ClassMember> members;

  std::size_t size() const { return members.size(); }
};

ReversingTriple apply(const Automorphism& sigma, const ReversingTriple& triple);
ReversingTriple swap_xy(const ReversingTriple& triple);

/// Partition of `triples` under Aut(G), together with the (x, y)-swap when
/// `allow_swap` (Rev and BiRev equivalence; Reg maps use automorphisms only).
std::vector<EquivalenceClass> equivalence_classes(const std::vector<ReversingTriple>& triples,
                                                  const std::vector<Automorphism>& automorphisms,
                                                  bool allow_swap = true);

struct FilterResult {
  bool passes = false;
  MapInvariants invariants;
};

/// Builds the map and tests gcd(|chi|, |E|) = 1.
FilterResult coprime_filter(const ReversingTriple& triple, MapKind kind);

enum class CanonicalForm {
  DihedralOddForm,
  DihedralRedundant,
  DihedralSplit,
  DxDUvw,
  DxDTwoW,
  R3Ucv,
  S4CBasic,
  S4CConjugate,
};

std::string to_string(CanonicalForm form);

/// One concrete ordered triple of a canonical family, with its parameters.
struct CanonicalPattern {
  CanonicalForm form;
  std::array<ElementId, 3> triple;
  Params params;
};

/// Every canonical triple of the family that is a reversing triple. Empty
/// for metacyclic and explicit groups.
std::vector<CanonicalPattern> canonical_patterns(const LabeledGroup& group);

/// A witnessed match: automorphism `automorphism` sends the triple's
/// entries, listed in the order `positions`, onto `pattern`.
struct CanonicalMatch {
  CanonicalForm form;
  Params params;
  std::size_t automorphism = 0;
  std::array<int, 3> positions{0, 1, 2};
  std::array<ElementId, 3> pattern{};
  bool order_respecting = false;  // positions is (0,1,2) or (1,0,2)
};

/// `form` is empty when nothing matched. `matches` holds one witness per
/// matched form (an order-respecting one when it exists); `form` is the
/// lexicographically least form name among them.
struct CanonicalTag {
  std::optional<CanonicalForm> form;
  std::vector<CanonicalMatch> matches;
  std::string reason;

  const CanonicalMatch* primary() const;
};

CanonicalTag match_canonical_form(const LabeledGroup& group, const ReversingTriple& triple,
                                  const std::vector<Automorphism>& automorphisms);

/// The same search restricted to `patterns`.
CanonicalTag match_patterns(const LabeledGroup& group, const ReversingTriple& triple,
                            const std::vector<Automorphism>& automorphisms,
                            const std::vector<CanonicalPattern>& patterns);

/// Checks that the stored witness really maps the triple onto the pattern.
bool verify_match(const CanonicalMatch& match, const ReversingTriple& triple,
                  const std::vector<Automorphism>& automorphisms);

enum class Clause { Dihedral, DihedralProduct, Rank3Cover, S4Cover, Small, Unmatched };

std::string to_string(Clause clause);

struct MapClause {
  Clause clause = Clause::Unmatched;
  Params params;
  std::string reason;
  std::optional<CanonicalForm> form;
};

/// Assigns a Rev or BiRev map to a clause of the coprime classification.
/// Reg maps and maps failing the coprime filter come back Unmatched with a
/// reason; maps with fewer than 3 vertices or faces come back Small.
MapClause classify_map(const LabeledGroup& group, const CosetMap& map,
                           const MapInvariants& invariants,
                           const std::vector<Automorphism>& automorphisms);

struct DihedralDiscriminants {
  long long n = 0;
  long long i = 0;
  long long j = 0;
  long long delta_rev = 0;
  long long delta_birev = 0;
  long long chi_rev = 0;
  long long chi_birev = 0;
};

/// Closed forms for RevMap and BiRevMap of (h, g^i h, g^j h) in D_{2n}.
DihedralDiscriminants dihedral_discriminants(long long n, long long i, long long j);

/// 0 < i, j < n with gcd(i, j, n) = 1 and gcd(j, n) >= 3: the pairs for
/// which the Rev map has at least three faces in the <h, g^j h> class.
bool valid_dihedral_pair(long long n, long long i, long long j);

/// Enumerates the regular triples of a family group up to automorphism and
/// checks every map, or its dual (x, z, y), against the regular-map table
/// (non-dihedral groups) or the dihedral clauses.
Report verify_regular_table(const LabeledGroup& group, std::size_t cap = default_enumeration_cap());

}  // namespace revmap
