#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revmap/finite_group.hpp"
#include "revmap/subgroup.hpp"

namespace revmap {

enum class MapKind { Rev, BiRev, Reg };

std::string to_string(MapKind kind);
MapKind parse_map_kind(std::string_view text);

/// Involutions x, y, z generating the group, not all three equal.
struct ReversingTriple {
  GroupPtr group;
  ElementId x = 0;
  ElementId y = 0;
  ElementId z = 0;

  friend bool operator==(const ReversingTriple& a, const ReversingTriple& b) {
    return a.group == b.group && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// Cheap predicate used by the enumerator; no exceptions.
bool is_reversing_triple(const FiniteGroup& group, ElementId x, ElementId y, ElementId z);

/// Throws ValidationError naming the first violated condition.
ReversingTriple make_reversing_triple(const GroupPtr& group, ElementId x, ElementId y, ElementId z);

/// One class of map objects: the cosets of a single stabilizer subgroup.
struct ObjectClass {
  std::string label;  // e.g. "<x,y>"
  CosetFamily cosets;
};

/// Vertex, edge and face coset families with incidence by nonempty
/// intersection. Faces of a Rev map are two tagged classes; the other kinds
/// have one. Objects are numbered by coset order; face ids run over the
/// classes in order.
class CosetMap {
 public:
  CosetMap(MapKind kind, ReversingTriple triple);

  MapKind kind() const { return kind_; }
  const ReversingTriple& triple() const { return triple_; }
  const FiniteGroup& group() const { return *triple_.group; }

  const ObjectClass& vertices() const { return vertices_; }
  const ObjectClass& edges() const { return edges_; }
  const std::vector<ObjectClass>& face_classes() const { return faces_; }

  std::size_t num_vertices() const { return vertices_.cosets.size(); }
  std::size_t num_edges() const { return edges_.cosets.size(); }
  std::size_t num_faces() const { return face_offsets_.back(); }

  std::uint32_t vertex_of(ElementId g) const { return vertices_.cosets.coset_of[g]; }
  std::uint32_t edge_of(ElementId g) const { return edges_.cosets.coset_of[g]; }
  std::uint32_t face_of(std::size_t face_class, ElementId g) const {
    return face_offsets_[face_class] + faces_[face_class].cosets.coset_of[g];
  }

  /// Sorted incident objects of each edge.
  const std::vector<std::vector<std::uint32_t>>& edge_vertices() const { return edge_vertices_; }
  const std::vector<std::vector<std::uint32_t>>& edge_faces() const { return edge_faces_; }
  bool vertex_face_incident(std::uint32_t v, std::uint32_t f) const;

 private:
  MapKind kind_;
  ReversingTriple triple_;
  ObjectClass vertices_;
  ObjectClass edges_;
  std::vector<ObjectClass> faces_;
  std::vector<std::uint32_t> face_offsets_;
  std::vector<std::vector<std::uint32_t>> edge_vertices_;
  std::vector<std::vector<std::uint32_t>> edge_faces_;
  std::vector<std::vector<std::uint32_t>> vertex_faces_;  // sorted
};

/// Throws ValidationError for Reg when y and z do not commute.
CosetMap build_map(const ReversingTriple& triple, MapKind kind);

/// DoubledCycle is the lexicographic product C_k[2K1]: each cycle vertex is
/// replaced by two non-adjacent twins (the octahedron when k = 3).
enum class GraphFamily { SingleVertex, Complete2, Cycle, Complete4, TensorOfCycles, DoubledCycle, Other };

std::string to_string(GraphFamily family);

/// The underlying multigraph: a simple base graph whose edges all carry the
/// same multiplicity (loops count once per edge on the single vertex).
struct GraphDescriptor {
  GraphFamily family = GraphFamily::Other;
  std::size_t vertices = 0;
  std::size_t valency = 0;        // with multiplicity
  std::size_t base_valency = 0;   // in the simple base graph
  std::size_t multiplicity = 0;   // 0 when edges carry unequal multiplicities
  std::size_t cycle_length = 0;   // Cycle, DoubledCycle (the quotient cycle)
  std::size_t factor_m = 0;       // TensorOfCycles, factor_m <= factor_n
  std::size_t factor_n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> base_edges;  // Other, sorted

  /// "K1^(6)", "K2^(6)", "C5^(2)", "K4^(2)", "C3xC5", "(C3xC5)^(7)", "C3[2K1]", "Other(...)".
  std::string to_string() const;
};

GraphDescriptor underlying_graph(const CosetMap& map);

/// Simple graph adjacency, sorted neighbor lists.
using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Backtracking isomorphism test against the tensor product C_m x C_n.
bool is_tensor_of_cycles(const Adjacency& graph, std::size_t m, std::size_t n);

/// Whether the graph is C_k[2K1]; on success returns k, else 0.
std::size_t doubled_cycle_length(const Adjacency& graph);

/// |H cap H^z| * 2 / |G_e| with H the vertex stabilizer: the edge
/// multiplicity predicted from the base flag.
std::size_t predicted_multiplicity(const CosetMap& map);

struct Flag {
  std::uint32_t vertex;
  std::uint32_t edge;
  std::uint32_t face;

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// One flag per dart (element, side): 2|G| for Rev and BiRev, |G| for Reg.
/// The partner maps index into `flags` and are fixed-point-free involutions.
struct FlagSystem {
  std::vector<Flag> flags;
  std::vector<std::uint32_t> sigma_vertex;
  std::vector<std::uint32_t> sigma_edge;
  std::vector<std::uint32_t> sigma_face;
};

/// Throws StructuralError when the darts violate the map axioms (a Reg
/// configuration with y = z has sigma_vertex sigma_face fixing every flag).
FlagSystem flag_system(const CosetMap& map);

/// Bipartiteness of the flag graph.
bool is_orientable(const FlagSystem& flags);
bool is_orientable(const CosetMap& map);

/// Index of <xy, xz> in G equals 2; the orientability test for Reg maps.
bool orientation_subgroup_has_index_two(const ReversingTriple& triple);

struct StabilizerInfo {
  std::string role;       // "vertex", "edge", "face"
  std::string subgroup;   // e.g. "<x,z>"
  std::size_t order = 0;
  std::string shape;      // shape_tag, e.g. "D8"
};

struct MapInvariants {
  MapKind kind = MapKind::Rev;
  std::size_t group_order = 0;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t num_faces = 0;
  long long chi = 0;
  bool coprime = false;  // gcd(|chi|, |E|) = 1
  std::vector<StabilizerInfo> stabilizers;
  std::optional<bool> orientable;  // empty when the flag system is ill-formed
  std::string flag_error;
  std::size_t num_flags = 0;
  GraphDescriptor graph;
};

MapInvariants map_invariants(const CosetMap& map);

}  // namespace revmap
