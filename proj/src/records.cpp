#include "revmap/records.hpp"

namespace revmap {

Json to_json(const GraphDescriptor& graph) {
  Json j;
  j["family"] = to_string(graph.family);
  j["text"] = graph.to_string();
  j["vertices"] = graph.vertices;
  j["valency"] = graph.valency;
  j["multiplicity"] = graph.multiplicity;
  return j;
}

Json to_json(const StabilizerInfo& stabilizer) {
  Json j;
  j["role"] = stabilizer.role;
  j["subgroup"] = stabilizer.subgroup;
  j["order"] = stabilizer.order;
  j["shape"] = stabilizer.shape;
  return j;
}

Json map_record(const LabeledGroup& group, const std::array<std::string, 3>& words,
                const MapInvariants& inv) {
  Json j;
  j["kind"] = to_string(inv.kind);
  j["group"] = group.spec.to_string();
  j["triple"] = Json::array({words[0], words[1], words[2]});
  j["order"] = inv.group_order;
  j["V"] = inv.num_vertices;
  j["E"] = inv.num_edges;
  j["F"] = inv.num_faces;
  j["chi"] = inv.chi;
  j["coprime"] = inv.coprime;
  if (inv.orientable) {
    j["orientable"] = *inv.orientable;
  } else {
    j["orientable"] = nullptr;
    j["flag_error"] = inv.flag_error;
  }
  j["flags"] = inv.num_flags;
  Json stabs = Json::array();
  for (const auto& s : inv.stabilizers) stabs.push_back(to_json(s));
  j["stabilizers"] = std::move(stabs);
  j["graph"] = to_json(inv.graph);
  return j;
}

Json map_record(const LabeledGroup& group, const ReversingTriple& triple,
                const MapInvariants& inv) {
  return map_record(group, {group.spell(triple.x), group.spell(triple.y), group.spell(triple.z)},
                    inv);
}

Json to_json(const StructureReport& report) {
  Json j;
  j["order"] = report.order;
  j["primes"] = report.primes;
  j["cyclic"] = report.is_cyclic;
  j["dihedral"] = report.is_dihedral;
  j["abelian"] = report.is_abelian;
  j["solvable"] = report.is_solvable;
  j["almostSylowCyclic"] = report.is_almost_sylow_cyclic;
  j["metacyclic"] = report.is_metacyclic;
  Json sylow = Json::array();
  for (const auto& s : report.sylow) {
    Json e;
    e["prime"] = s.prime;
    e["order"] = s.order;
    e["shape"] = to_string(s.shape);
    sylow.push_back(std::move(e));
  }
  j["sylow"] = std::move(sylow);
  j["largestNormal2Subgroup"] = report.largest_normal_2_subgroup_order;
  return j;
}

}  // namespace revmap
