#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "revmap/classify.hpp"
#include "revmap/families.hpp"
#include "revmap/maps.hpp"
#include "revmap/report.hpp"
#include "revmap/structure.hpp"

namespace revmap {

struct SweepConfig {
  long long max_n = 25;           // dihedral-canonical: 3 <= n <= max_n
  long long max_disc_n = 27;      // dihedral-discriminants: 3 <= n <= max_disc_n
  long long max_family_n = 20;    // dihedral groups in the class sweeps
  std::vector<std::pair<long long, long long>> dxd{{3, 5}, {3, 7}, {5, 7}};
  std::vector<std::array<long long, 3>> r3{{3, 5, 7}};
  std::vector<long long> s4c{3, 9, 15};
  std::vector<std::pair<long long, long long>> regular_dxd{{3, 5}, {3, 7}};
  std::vector<long long> regular_s4c{3, 9};
  std::vector<long long> quotient_s4c{3, 9, 15, 21};
  std::size_t cap = default_enumeration_cap();
  std::uint64_t seed = 1;
  std::size_t sample = 8;  // class members re-measured per class

  /// Throws ValidationError for non-positive bounds or when `cap` is below
  /// the largest group order the ranges imply.
  void validate() const;
  std::size_t largest_order() const;
};

/// A map of the verification corpus with the label of the check that built it.
struct CorpusMap {
  LabeledGroup group;
  ReversingTriple triple;
  MapKind kind;
  std::string source;
};

/// Every map the family, discriminant and regular-table checks build, plus
/// the class representatives of all family sweeps.
std::vector<CorpusMap> map_corpus(const SweepConfig& cfg);

std::string repro_command(const LabeledGroup& group, const ReversingTriple& triple, MapKind kind);

Report dihedral_canonical_suite(const SweepConfig& cfg);
Report dihedral_discriminants_suite(const SweepConfig& cfg);
Report reversing_families_suite(const SweepConfig& cfg);
Report coprime_consequences_suite(const SweepConfig& cfg);
Report regular_table_suite(const SweepConfig& cfg);
Report structure_suite(const SweepConfig& cfg);
Report flags_suite(const SweepConfig& cfg);

const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown name.
Report run_suite(const std::string& name, const SweepConfig& cfg);

/// The consequences of coprimality for one coprime map of a group with the
/// given structure; empty when all hold, else the first violated statement.
std::string coprime_consequence_violation(const StructureReport& structure,
                                          const MapInvariants& invariants);

}  // namespace revmap
