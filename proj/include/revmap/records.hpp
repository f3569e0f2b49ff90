#pragma once

#include <array>
#include <string>

#include "revmap/families.hpp"
#include "revmap/maps.hpp"
#include "revmap/report.hpp"
#include "revmap/structure.hpp"

namespace revmap {

Json to_json(const GraphDescriptor& graph);
Json to_json(const StabilizerInfo& stabilizer);

/// The map record: kind, group, triple, V, E, F, chi, coprime, orientable
/// (null when the flag system is ill-formed), flags, stabilizers, graph.
Json map_record(const LabeledGroup& group, const std::array<std::string, 3>& words,
                const MapInvariants& invariants);

/// Same, spelling the triple in the group's labels.
Json map_record(const LabeledGroup& group, const ReversingTriple& triple,
                const MapInvariants& invariants);

Json to_json(const StructureReport& report);

}  // namespace revmap
