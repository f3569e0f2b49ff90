#include "revmap/maps.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "revmap/errors.hpp"
#include "revmap/numeric.hpp"
#include "revmap/structure.hpp"

namespace revmap {

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

ObjectClass object_class(const GroupPtr& group, std::string label,
                         std::initializer_list<ElementId> gens) {
  return ObjectClass{std::move(label), coset_family(subgroup_generated(group, gens))};
}

}  // namespace

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Rev: return "rev";
    case MapKind::BiRev: return "birev";
    case MapKind::Reg: return "reg";
  }
  return "?";
}

MapKind parse_map_kind(std::string_view text) {
  if (text == "rev" || text == "Rev") return MapKind::Rev;
  if (text == "birev" || text == "BiRev") return MapKind::BiRev;
  if (text == "reg" || text == "Reg") return MapKind::Reg;
  throw ValidationError("unknown map kind '" + std::string(text) + "' (rev|birev|reg)");
}

bool is_reversing_triple(const FiniteGroup& group, ElementId x, ElementId y, ElementId z) {
  if (group.element_order(x) != 2 || group.element_order(y) != 2 || group.element_order(z) != 2) {
    return false;
  }
  if (x == y && y == z) return false;
  const ElementId gens[] = {x, y, z};
  return closure_size(group, gens) == group.order();
}

ReversingTriple make_reversing_triple(const GroupPtr& group, ElementId x, ElementId y, ElementId z) {
  const FiniteGroup& g = *group;
  for (ElementId a : {x, y, z}) {
    if (a >= g.order()) throw ValidationError("triple element outside the group");
    if (g.element_order(a) != 2) {
      throw ValidationError("triple element " + g.element(a).to_cycle_string() +
                            " is not an involution");
    }
  }
  if (x == y && y == z) throw ValidationError("triple has all three entries equal");
  const ElementId gens[] = {x, y, z};
  if (closure_size(g, gens) != g.order()) {
    throw ValidationError("triple does not generate the group");
  }
  return ReversingTriple{group, x, y, z};
}

namespace {

ObjectClass edge_class(MapKind kind, const ReversingTriple& t) {
  if (kind == MapKind::Reg) {
    const FiniteGroup& g = *t.group;
    if (g.mul(t.y, t.z) != g.mul(t.z, t.y)) throw ValidationError("Reg map needs yz = zy");
    return object_class(t.group, "<y,z>", {t.y, t.z});
  }
  return object_class(t.group, "<z>", {t.z});
}

}  // namespace

CosetMap::CosetMap(MapKind kind, ReversingTriple triple)
    : kind_(kind),
      triple_(std::move(triple)),
      vertices_(object_class(triple_.group, "<x,y>", {triple_.x, triple_.y})),
      edges_(edge_class(kind_, triple_)) {
  const GroupPtr& group = triple_.group;
  const FiniteGroup& g = *group;
  const ElementId x = triple_.x, y = triple_.y, z = triple_.z;
  switch (kind_) {
    case MapKind::Rev:
      faces_.push_back(object_class(group, "<x,z>", {x, z}));
      faces_.push_back(object_class(group, "<y,z>", {y, z}));
      break;
    case MapKind::BiRev:
      faces_.push_back(object_class(group, "<x,y^z>", {x, g.conj(y, z)}));
      break;
    case MapKind::Reg:
      faces_.push_back(object_class(group, "<x,z>", {x, z}));
      break;
  }
  face_offsets_.push_back(0);
  for (const auto& fc : faces_) {
    face_offsets_.push_back(face_offsets_.back() + static_cast<std::uint32_t>(fc.cosets.size()));
  }

  edge_vertices_.assign(num_edges(), {});
  edge_faces_.assign(num_edges(), {});
  vertex_faces_.assign(num_vertices(), {});
  for (ElementId a = 0; a < g.order(); ++a) {
    std::uint32_t v = vertex_of(a);
    std::uint32_t e = edge_of(a);
    edge_vertices_[e].push_back(v);
    for (std::size_t c = 0; c < faces_.size(); ++c) {
      std::uint32_t f = face_of(c, a);
      edge_faces_[e].push_back(f);
      vertex_faces_[v].push_back(f);
    }
  }
  for (auto& l : edge_vertices_) sort_unique(l);
  for (auto& l : edge_faces_) sort_unique(l);
  for (auto& l : vertex_faces_) sort_unique(l);
}

bool CosetMap::vertex_face_incident(std::uint32_t v, std::uint32_t f) const {
  return std::binary_search(vertex_faces_[v].begin(), vertex_faces_[v].end(), f);
}

CosetMap build_map(const ReversingTriple& triple, MapKind kind) { return CosetMap(kind, triple); }

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::SingleVertex: return "single-vertex";
    case GraphFamily::Complete2: return "complete-2";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Complete4: return "complete-4";
    case GraphFamily::TensorOfCycles: return "tensor-of-cycles";
    case GraphFamily::DoubledCycle: return "doubled-cycle";
    case GraphFamily::Other: return "other";
  }
  return "other";
}

std::string GraphDescriptor::to_string() const {
  auto extend = [&](const std::string& base, bool parenthesize) {
    if (multiplicity == 1) return base;
    std::string b = parenthesize ? "(" + base + ")" : base;
    return b + "^(" + (multiplicity == 0 ? std::string("?") : std::to_string(multiplicity)) + ")";
  };
  switch (family) {
    case GraphFamily::SingleVertex: return extend("K1", false);
    case GraphFamily::Complete2: return extend("K2", false);
    case GraphFamily::Cycle: return extend("C" + std::to_string(cycle_length), false);
    case GraphFamily::Complete4: return extend("K4", false);
    case GraphFamily::TensorOfCycles:
      return extend("C" + std::to_string(factor_m) + "xC" + std::to_string(factor_n), true);
    case GraphFamily::DoubledCycle:
      return extend("C" + std::to_string(cycle_length) + "[2K1]", true);
    case GraphFamily::Other: {
      std::string out = "Other(v=" + std::to_string(vertices) + ",k=" + std::to_string(base_valency) + ";";
      for (std::size_t i = 0; i < base_edges.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(base_edges[i].first) + "-" + std::to_string(base_edges[i].second);
      }
      return extend(out + ")", false);
    }
  }
  return "?";
}

std::size_t doubled_cycle_length(const Adjacency& graph) {
  const std::size_t count = graph.size();
  if (count < 6 || count % 2 != 0) return 0;
  // Twins share a neighbor list; there must be exactly two per class.
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> twins;
  for (std::uint32_t a = 0; a < count; ++a) {
    if (graph[a].size() != 4) return 0;
    twins[graph[a]].push_back(a);
  }
  if (twins.size() != count / 2) return 0;
  std::vector<std::uint32_t> block(count);
  std::uint32_t next = 0;
  for (const auto& [nbrs, members] : twins) {
    if (members.size() != 2) return 0;
    for (std::uint32_t a : members) block[a] = next;
    ++next;
  }
  // The quotient must be a single cycle through all blocks.
  Adjacency quotient(next);
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b : graph[a]) {
      if (block[a] == block[b]) return 0;
      quotient[block[a]].push_back(block[b]);
    }
  }
  for (auto& l : quotient) sort_unique(l);
  std::uint32_t previous = 0, current = 0;
  std::size_t steps = 0;
  do {
    if (quotient[current].size() != 2) return 0;
    std::uint32_t step = quotient[current][0] == previous && steps > 0 ? quotient[current][1]
                                                                      : quotient[current][0];
    previous = current;
    current = step;
    ++steps;
  } while (current != 0 && steps <= next);
  return steps == next ? next : 0;
}

bool is_tensor_of_cycles(const Adjacency& graph, std::size_t m, std::size_t n) {
  const std::size_t count = graph.size();
  if (m < 3 || n < 3 || m * n != count) return false;
  for (const auto& nbrs : graph) {
    if (nbrs.size() != 4) return false;
  }
  // Target vertex (i, j) is i * n + j.
  auto target_neighbors = [&](std::uint32_t t) {
    std::size_t i = t / n, j = t % n;
    std::array<std::uint32_t, 4> out{};
    std::size_t k = 0;
    for (std::size_t di : {1UL, m - 1}) {
      for (std::size_t dj : {1UL, n - 1}) {
        out[k++] = static_cast<std::uint32_t>(((i + di) % m) * n + (j + dj) % n);
      }
    }
    return out;
  };
  auto target_adjacent = [&](std::uint32_t a, std::uint32_t b) {
    for (auto t : target_neighbors(a)) {
      if (t == b) return true;
    }
    return false;
  };

  // Breadth-first order on the source; every vertex after the first has an
  // earlier neighbor whose image constrains its candidates.
  std::vector<std::uint32_t> order{0};
  std::vector<std::uint32_t> parent(count, 0);
  std::vector<bool> seen(count, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::uint32_t w : graph[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  if (order.size() != count) return false;

  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(count, kFree);
  std::vector<bool> used(count, false);
  std::size_t budget = 5'000'000;
  // Target is vertex-transitive, so the first source vertex maps to (0, 0).
  image[0] = 0;
  used[0] = true;
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == count) return true;
    if (budget-- == 0) return false;
    std::uint32_t s = order[k];
    for (std::uint32_t t : target_neighbors(image[parent[s]])) {
      if (used[t]) continue;
      bool ok = true;
      for (std::uint32_t w : graph[s]) {
        if (image[w] != kFree && !target_adjacent(image[w], t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[s] = t;
      used[t] = true;
      if (self(self, k + 1)) return true;
      image[s] = kFree;
      used[t] = false;
    }
    return false;
  };
  return extend(extend, 1);
}

GraphDescriptor underlying_graph(const CosetMap& map) {
  GraphDescriptor d;
  d.vertices = map.num_vertices();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> multiplicity;
  for (const auto& ends : map.edge_vertices()) {
    std::uint32_t a = ends.front();
    std::uint32_t b = ends.back();
    ++multiplicity[{a, b}];
  }
  Adjacency adjacency(d.vertices);
  std::size_t mult = multiplicity.begin()->second;
  for (const auto& [pair, count] : multiplicity) {
    if (count != mult) mult = 0;
    if (pair.first != pair.second) {
      adjacency[pair.first].push_back(pair.second);
      adjacency[pair.second].push_back(pair.first);
      d.base_edges.push_back(pair);
    }
  }
  for (auto& l : adjacency) sort_unique(l);
  d.multiplicity = mult;
  d.base_valency = adjacency[0].size();
  d.valency = 0;
  for (const auto& ends : map.edge_vertices()) {
    if (ends.front() == 0) d.valency += ends.size() == 1 ? 2 : 1;
    else if (ends.back() == 0) d.valency += 1;
  }

  const std::size_t nv = d.vertices;
  bool regular = std::all_of(adjacency.begin(), adjacency.end(),
                             [&](const auto& l) { return l.size() == d.base_valency; });
  auto connected = [&] {
    std::vector<bool> seen(nv, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::uint32_t a = stack.back();
      stack.pop_back();
      for (std::uint32_t b : adjacency[a]) {
        if (!seen[b]) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    return reached == nv;
  };

  if (nv == 1) {
    d.family = GraphFamily::SingleVertex;
  } else if (nv == 2 && d.base_edges.size() == 1) {
    d.family = GraphFamily::Complete2;
  } else if (regular && d.base_valency == 2 && connected()) {
    d.family = GraphFamily::Cycle;
    d.cycle_length = nv;
  } else if (nv == 4 && regular && d.base_valency == 3) {
    d.family = GraphFamily::Complete4;
  } else if (regular && d.base_valency == 4 && connected()) {
    for (std::size_t m = 3; m * m <= nv; ++m) {
      if (nv % m != 0 || nv / m < 3) continue;
      if (is_tensor_of_cycles(adjacency, m, nv / m)) {
        d.family = GraphFamily::TensorOfCycles;
        d.factor_m = m;
        d.factor_n = nv / m;
        break;
      }
    }
    if (d.family == GraphFamily::Other) {
      if (std::size_t k = doubled_cycle_length(adjacency); k != 0) {
        d.family = GraphFamily::DoubledCycle;
        d.cycle_length = k;
      }
    }
  }
  if (d.family != GraphFamily::Other) d.base_edges.clear();
  return d;
}

std::size_t predicted_multiplicity(const CosetMap& map) {
  const Subgroup& h = map.vertices().cosets.subgroup;
  const Subgroup& edge = map.edges().cosets.subgroup;
  Subgroup meet = intersection(h, conjugate(h, map.triple().z));
  return meet.order() * 2 / edge.order();
}

FlagSystem flag_system(const CosetMap& map) {
  const ReversingTriple& t = map.triple();
  const FiniteGroup& g = *t.group;
  const std::size_t order = g.order();
  // Flags are darts (element, side). Rev: side picks the face class, and the
  // partners are right multiplication by z (vertex), x or y (edge), and the
  // side flip (face). BiRev: side 1 reads the face through gz. Reg: one flag
  // per element with partners z, x, y.
  const std::size_t sides = map.kind() == MapKind::Reg ? 1 : 2;
  const std::size_t n = order * sides;
  auto index = [&](ElementId e, std::size_t side) {
    return static_cast<std::uint32_t>(e * sides + side);
  };

  FlagSystem fs;
  fs.flags.resize(n);
  fs.sigma_vertex.resize(n);
  fs.sigma_edge.resize(n);
  fs.sigma_face.resize(n);
  for (ElementId e = 0; e < order; ++e) {
    for (std::size_t side = 0; side < sides; ++side) {
      const std::uint32_t i = index(e, side);
      Flag& fl = fs.flags[i];
      fl.vertex = map.vertex_of(e);
      fl.edge = map.edge_of(e);
      switch (map.kind()) {
        case MapKind::Rev:
          fl.face = map.face_of(side, e);
          fs.sigma_vertex[i] = index(g.mul(e, t.z), side);
          fs.sigma_edge[i] = index(g.mul(e, side == 0 ? t.x : t.y), side);
          fs.sigma_face[i] = index(e, 1 - side);
          break;
        case MapKind::BiRev:
          fl.face = map.face_of(0, side == 0 ? e : g.mul(e, t.z));
          fs.sigma_vertex[i] = index(g.mul(e, t.z), 1 - side);
          fs.sigma_edge[i] = index(g.mul(e, side == 0 ? t.x : t.y), side);
          fs.sigma_face[i] = index(e, 1 - side);
          break;
        case MapKind::Reg:
          fl.face = map.face_of(0, e);
          fs.sigma_vertex[i] = index(g.mul(e, t.z), 0);
          fs.sigma_edge[i] = index(g.mul(e, t.x), 0);
          fs.sigma_face[i] = index(g.mul(e, t.y), 0);
          break;
      }
    }
  }

  auto describe = [&](std::size_t i) {
    const Flag& fl = fs.flags[i];
    return "(v" + std::to_string(fl.vertex) + ", e" + std::to_string(fl.edge) + ", f" +
           std::to_string(fl.face) + ")";
  };
  // Map axioms on darts: each partner is a fixed-point-free involution that
  // keeps the other two objects, and sigma_vertex commutes with sigma_face
  // without fixed points. Loops, parallel edges and monogons are allowed.
  for (std::uint32_t i = 0; i < n; ++i) {
    const Flag& a = fs.flags[i];
    const std::uint32_t sv = fs.sigma_vertex[i], se = fs.sigma_edge[i], sf = fs.sigma_face[i];
    for (auto [sigma, name] : {std::pair{&fs.sigma_vertex, "vertex"}, std::pair{&fs.sigma_edge, "edge"},
                               std::pair{&fs.sigma_face, "face"}}) {
      const std::uint32_t j = (*sigma)[i];
      if (j == i || (*sigma)[j] != i) {
        throw StructuralError("flag " + describe(i) + " has no proper " + name + "-partner");
      }
    }
    if (fs.flags[sv].edge != a.edge || fs.flags[sv].face != a.face ||
        fs.flags[se].vertex != a.vertex || fs.flags[se].face != a.face ||
        fs.flags[sf].vertex != a.vertex || fs.flags[sf].edge != a.edge) {
      throw StructuralError("flag " + describe(i) + " has a partner leaving its objects");
    }
    const std::uint32_t vf = fs.sigma_face[sv];
    if (vf == i || fs.sigma_vertex[sf] != vf) {
      throw StructuralError("flag " + describe(i) + " breaks the vertex-face partner square");
    }
  }
  return fs;
}

bool is_orientable(const FlagSystem& flags) {
  const std::size_t n = flags.flags.size();
  std::vector<int> colour(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(start)};
    while (!stack.empty()) {
      std::uint32_t a = stack.back();
      stack.pop_back();
      for (const auto* sigma : {&flags.sigma_vertex, &flags.sigma_edge, &flags.sigma_face}) {
        std::uint32_t b = (*sigma)[a];
        if (colour[b] == -1) {
          colour[b] = 1 - colour[a];
          stack.push_back(b);
        } else if (colour[b] == colour[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_orientable(const CosetMap& map) { return is_orientable(flag_system(map)); }

bool orientation_subgroup_has_index_two(const ReversingTriple& triple) {
  const FiniteGroup& g = *triple.group;
  Subgroup even = subgroup_generated(triple.group, {g.mul(triple.x, triple.y), g.mul(triple.x, triple.z)});
  return even.index() == 2;
}

MapInvariants map_invariants(const CosetMap& map) {
  MapInvariants inv;
  inv.kind = map.kind();
  inv.group_order = map.group().order();
  inv.num_vertices = map.num_vertices();
  inv.num_edges = map.num_edges();
  inv.num_faces = map.num_faces();
  inv.chi = static_cast<long long>(inv.num_vertices) - static_cast<long long>(inv.num_edges) +
            static_cast<long long>(inv.num_faces);
  inv.coprime = gcd(inv.chi, static_cast<long long>(inv.num_edges)) == 1;
  auto stab = [](std::string role, const ObjectClass& oc) {
    const Subgroup& s = oc.cosets.subgroup;
    return StabilizerInfo{std::move(role), oc.label, s.order(), shape_tag(s)};
  };
  inv.stabilizers.push_back(stab("vertex", map.vertices()));
  inv.stabilizers.push_back(stab("edge", map.edges()));
  for (const auto& fc : map.face_classes()) inv.stabilizers.push_back(stab("face", fc));
  try {
    FlagSystem fs = flag_system(map);
    inv.num_flags = fs.flags.size();
    inv.orientable = is_orientable(fs);
  } catch (const StructuralError& err) {
    inv.flag_error = err.what();
  }
  inv.graph = underlying_graph(map);
  return inv;
}

}  // namespace revmap
