#include "kstate/stategraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kstate {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Half-edge ids of the plane map built from circles and band cores:
// darts keep their ids, core end k of crossing c is 4n + 2c + k.
struct PlaneMap {
  const SmoothedMap& m;
  const std::vector<char>& kept;
  int n;

  int corner_start(int crossing, int arc) const {
    const bool a_label = m.label(crossing) == Resolution::A;
    static constexpr int kStartA[2] = {0, 2};
    static constexpr int kStartB[2] = {1, 3};
    return 4 * crossing + (a_label ? kStartA[arc] : kStartB[arc]);
  }
  bool is_core(int h) const { return h >= 4 * n; }
  int core_id(int crossing, int arc) const { return 4 * n + 2 * crossing + arc; }
  int core_crossing(int h) const { return (h - 4 * n) / 2; }
  int core_arc(int h) const { return (h - 4 * n) % 2; }

  int alpha(int h) const {
    if (is_core(h)) return 4 * n + ((h - 4 * n) ^ 1);
    return m.mate(h);
  }
  // Inverse rotation at the arc vertex holding h. The rotation is
  // (a, b, core) counterclockwise, a the corner-start dart, b its arc mate.
  int sigma_inverse(int h) const {
    if (is_core(h)) {
      const int a = corner_start(core_crossing(h), core_arc(h));
      return m.arc_mate(a);
    }
    const int crossing = h / 4;
    const int arc = m.arc_index(h);
    const int a = corner_start(crossing, arc);
    if (h == a) return kept[crossing] ? core_id(crossing, arc) : m.arc_mate(a);
    return a;
  }
  int face_next(int h) const { return sigma_inverse(alpha(h)); }
};

} // namespace

const GraphEdge& StateGraph::edge_by_id(int band) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), band,
                             [](const GraphEdge& e, int id) { return e.id < id; });
  if (it == edges_.end() || it->id != band)
    fail(ErrorKind::Internal, "edge " + std::to_string(band) + " not present");
  return *it;
}

void StateGraph::rebuild_view() {
  edges_.clear();
  for (const Band& band : map_.bands()) {
    if (!kept_[band.id]) continue;
    edges_.push_back(GraphEdge{band.id, band.label, band.circles, band.region});
  }
  rotations_.assign(map_.circle_count(), {});
  const auto& sequences = map_.attachment_sequences();
  for (int v = 0; v < map_.circle_count(); ++v) {
    for (const AttachmentEvent& event : sequences[v]) {
      if (!kept_[event.band]) continue;
      rotations_[v].push_back(EdgeEnd{event.band, event.arc, event.region});
    }
  }
}

bool StateGraph::connected() const {
  UnionFind uf(vertex_count());
  for (const GraphEdge& e : edges_) uf.unite(e.ends[0], e.ends[1]);
  for (int v = 0; v < vertex_count(); ++v)
    if (uf.find(v) != uf.find(0)) return false;
  return true;
}

StateGraph build_graph(const SmoothedMap& smoothed) {
  StateGraph g;
  g.map_ = smoothed;
  g.kept_.assign(smoothed.crossing_count(), 1);
  g.rebuild_view();
  return g;
}

ReducedGraph reduce(const StateGraph& graph) {
  ReducedGraph r;
  r.graph_ = graph;
  std::map<std::tuple<int, int, Resolution>, std::vector<int>> classes;
  for (const GraphEdge& e : graph.edges()) {
    const int lo = std::min(e.ends[0], e.ends[1]);
    const int hi = std::max(e.ends[0], e.ends[1]);
    classes[{lo, hi, e.label}].push_back(e.id);
  }
  std::vector<std::pair<int, std::vector<int>>> entries;
  for (auto& [key, ids] : classes) {
    entries.emplace_back(ids.front(), std::vector<int>(ids.begin() + 1, ids.end()));
  }
  std::sort(entries.begin(), entries.end());
  for (auto& [kept_edge, absorbed] : entries) {
    for (int band : absorbed) r.graph_.kept_[band] = 0;
    r.log_.push_back(ReductionEntry{kept_edge, std::move(absorbed)});
  }
  r.graph_.rebuild_view();
  return r;
}

int ReducedGraph::multiplicity(int kept_edge) const {
  for (const ReductionEntry& entry : log_)
    if (entry.kept_edge == kept_edge) return 1 + static_cast<int>(entry.absorbed.size());
  fail(ErrorKind::Internal, "edge " + std::to_string(kept_edge) + " not in reduction log");
}

bool is_tree(const StateGraph& graph) {
  if (!graph.connected()) fail(ErrorKind::Disconnected, "tree test needs a connected graph");
  return graph.edge_count() == graph.vertex_count() - 1;
}

bool is_tree(const ReducedGraph& reduced) { return is_tree(reduced.graph()); }

std::vector<std::pair<int, int>> mixed_parallel_pairs(const StateGraph& graph) {
  std::map<std::pair<int, int>, std::vector<const GraphEdge*>> by_ends;
  for (const GraphEdge& e : graph.edges()) {
    const int lo = std::min(e.ends[0], e.ends[1]);
    const int hi = std::max(e.ends[0], e.ends[1]);
    by_ends[{lo, hi}].push_back(&e);
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto& [ends, bucket] : by_ends) {
    for (size_t i = 0; i < bucket.size(); ++i)
      for (size_t j = i + 1; j < bucket.size(); ++j)
        if (bucket[i]->label != bucket[j]->label)
          pairs.emplace_back(bucket[i]->id, bucket[j]->id);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<GraphFace> embedded_faces(const StateGraph& graph) {
  const SmoothedMap& m = graph.map();
  const int n = m.crossing_count();
  std::vector<char> kept(n);
  for (int c = 0; c < n; ++c) kept[c] = graph.kept(c) ? 1 : 0;
  PlaneMap pm{m, kept, n};

  const int half_edges = 6 * n;
  std::vector<char> present(half_edges, 0);
  for (int d = 0; d < 4 * n; ++d) present[d] = 1;
  for (int c = 0; c < n; ++c)
    if (kept[c]) present[4 * n + 2 * c] = present[4 * n + 2 * c + 1] = 1;

  std::vector<GraphFace> faces;
  std::vector<char> visited(half_edges, 0);
  for (int start = 0; start < half_edges; ++start) {
    if (!present[start] || visited[start]) continue;
    GraphFace face;
    face.id = static_cast<int>(faces.size());
    int h = start;
    do {
      visited[h] = 1;
      if (pm.is_core(h)) {
        const int c = pm.core_crossing(h);
        const int arc = pm.core_arc(h);
        face.core_edges.push_back(c);
        face.core_from.push_back(m.bands()[c].circles[arc]);
        face.core_to.push_back(m.bands()[c].circles[1 - arc]);
      } else {
        if (face.region < 0) face.region = m.region_of_dart(h);
        if (h == m.outer_dart()) face.outer = true;
      }
      h = pm.face_next(h);
    } while (h != start);
    if (face.region < 0)
      fail(ErrorKind::Internal, "face without a circle edge");

    const size_t len = face.core_edges.size();
    face.simple_cycle = len >= 2;
    if (face.simple_cycle) {
      for (size_t i = 0; i < len && face.simple_cycle; ++i) {
        if (face.core_to[i] != face.core_from[(i + 1) % len])
          fail(ErrorKind::Internal, "face projection is not a closed walk");
        for (size_t j = i + 1; j < len; ++j) {
          if (face.core_edges[i] == face.core_edges[j] || face.core_from[i] == face.core_from[j]) {
            face.simple_cycle = false;
            break;
          }
        }
      }
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

int unbounded_face(const std::vector<GraphFace>& faces) {
  // The graph face playing the unbounded one when the spine is drawn in the
  // plane: the face holding the designated outer dart when that face meets a
  // band core, otherwise the first core-meeting face.
  int fallback = -1;
  for (const GraphFace& face : faces) {
    if (face.core_edges.empty()) continue;
    if (face.outer) return face.id;
    if (fallback < 0) fallback = face.id;
  }
  return fallback;
}

std::vector<InnerCycle> inner_cycles(const StateGraph& graph) {
  const std::vector<GraphFace> faces = embedded_faces(graph);
  const int excluded = unbounded_face(faces);
  std::vector<InnerCycle> cycles;
  for (const GraphFace& face : faces) {
    if (face.id == excluded || !face.simple_cycle) continue;
    InnerCycle cycle;
    cycle.edges = face.core_edges;
    cycle.vertices = face.core_from;
    cycle.region = face.region;
    cycle.face = face.id;
    for (int e : cycle.edges) cycle.label_sequence.push_back(graph.edge_by_id(e).label);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::optional<InnerCycle> find_alternating_inner_cycle(const StateGraph& graph) {
  for (InnerCycle& cycle : inner_cycles(graph)) {
    const size_t len = cycle.label_sequence.size();
    if (len % 2 != 0) continue;
    bool alternating = true;
    for (size_t i = 0; i < len; ++i) {
      if (cycle.label_sequence[i] == cycle.label_sequence[(i + 1) % len]) {
        alternating = false;
        break;
      }
    }
    if (alternating) return cycle;
  }
  return std::nullopt;
}

std::vector<GraphPiece> decompose_at_pair(const StateGraph& graph, int v, int w, int x) {
  if (v == w) fail(ErrorKind::NotAdjacent, "decomposition needs two distinct vertices");
  bool x_found = false;
  for (const GraphEdge& e : graph.edges()) {
    if (e.id == x) {
      const int lo = std::min(e.ends[0], e.ends[1]);
      const int hi = std::max(e.ends[0], e.ends[1]);
      if (lo != std::min(v, w) || hi != std::max(v, w))
        fail(ErrorKind::NotAdjacent, "edge " + std::to_string(x) + " does not join " +
                                         std::to_string(v) + " and " + std::to_string(w));
      x_found = true;
    }
  }
  if (!x_found) fail(ErrorKind::NotAdjacent, "edge " + std::to_string(x) + " not in graph");

  // Group the remaining edges: two edges belong together when they share a
  // vertex other than v or w.
  const int bands = graph.map().crossing_count();
  UnionFind uf(bands);
  std::vector<std::vector<int>> at_vertex(graph.vertex_count());
  for (const GraphEdge& e : graph.edges()) {
    if (e.id == x) continue;
    for (int end : {e.ends[0], e.ends[1]})
      if (end != v && end != w) at_vertex[end].push_back(e.id);
  }
  for (const auto& bucket : at_vertex)
    for (size_t i = 1; i < bucket.size(); ++i) uf.unite(bucket[0], bucket[i]);

  std::vector<int> roots;
  std::map<int, int> component_of_root;
  for (const GraphEdge& e : graph.edges()) {
    if (e.id == x) continue;
    const int root = uf.find(e.id);
    if (component_of_root.emplace(root, 0).second) roots.push_back(root);
  }
  const int k = static_cast<int>(roots.size());
  if (k == 0)
    fail(ErrorKind::NotDecomposing, "nothing remains after removing the edge");
  if (k == 1) {
    // A single remaining component only decomposes when it is a parallel
    // edge split off by the duplicated-edge corollary.
    int count = 0;
    bool parallel = true;
    for (const GraphEdge& e : graph.edges()) {
      if (e.id == x) continue;
      ++count;
      for (int end : {e.ends[0], e.ends[1]})
        if (end != v && end != w) parallel = false;
    }
    if (!(count == 1 && parallel))
      fail(ErrorKind::NotDecomposing, "removing {" + std::to_string(v) + "," +
                                          std::to_string(w) + "} leaves a single component");
  }

  // Order components innermost-first: scan the rotation at v counterclockwise
  // from x's end, then the rotation at w for components not seen at v.
  std::vector<int> order;
  auto scan_vertex = [&](int vertex) {
    const auto& rotation = graph.rotations()[vertex];
    const int size = static_cast<int>(rotation.size());
    int x_pos = -1;
    for (int i = 0; i < size; ++i)
      if (rotation[i].edge == x) x_pos = i;
    if (x_pos < 0) return;
    for (int step = 1; step <= size; ++step) {
      const EdgeEnd& end = rotation[(x_pos + step) % size];
      if (end.edge == x) continue;
      const int root = uf.find(end.edge);
      if (std::find(order.begin(), order.end(), root) == order.end()) order.push_back(root);
    }
  };
  scan_vertex(v);
  scan_vertex(w);
  for (int root : roots)
    if (std::find(order.begin(), order.end(), root) == order.end()) order.push_back(root);

  std::vector<GraphPiece> pieces;
  pieces.push_back(GraphPiece{{std::min(v, w), std::max(v, w)}, {x}});
  for (int root : order) {
    GraphPiece piece;
    piece.edges.push_back(x);
    std::vector<char> has_vertex(graph.vertex_count(), 0);
    has_vertex[v] = has_vertex[w] = 1;
    for (const GraphEdge& e : graph.edges()) {
      if (e.id == x || uf.find(e.id) != root) continue;
      piece.edges.push_back(e.id);
      has_vertex[e.ends[0]] = has_vertex[e.ends[1]] = 1;
    }
    for (int u = 0; u < graph.vertex_count(); ++u)
      if (has_vertex[u]) piece.vertices.push_back(u);
    std::sort(piece.edges.begin(), piece.edges.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

BlockDecomposition block_decomposition(const StateGraph& graph) {
  const int vertices = graph.vertex_count();
  BlockDecomposition result;
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertices); // (edge, other)
  for (const GraphEdge& e : graph.edges()) {
    if (e.ends[0] == e.ends[1]) {
      result.blocks.push_back({e.id}); // self-loop
      continue;
    }
    adjacency[e.ends[0]].emplace_back(e.id, e.ends[1]);
    adjacency[e.ends[1]].emplace_back(e.id, e.ends[0]);
  }

  std::vector<int> disc(vertices, -1), low(vertices, 0);
  std::vector<char> is_cut(vertices, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  // Iterative DFS with per-edge parent tracking so parallel edges count as
  // cycles.
  struct Frame {
    int vertex;
    int parent_edge;
    size_t next = 0;
  };
  for (int root = 0; root < vertices; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const int u = frame.vertex;
      if (frame.next < adjacency[u].size()) {
        auto [edge, other] = adjacency[u][frame.next++];
        if (edge == frame.parent_edge) continue;
        if (disc[other] < 0) {
          edge_stack.push_back(edge);
          disc[other] = low[other] = timer++;
          stack.push_back(Frame{other, edge});
        } else if (disc[other] < disc[u]) {
          edge_stack.push_back(edge);
          low[u] = std::min(low[u], disc[other]);
        }
      } else {
        const int tree_edge = frame.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        const int p = stack.back().vertex;
        low[p] = std::min(low[p], low[u]);
        if (p == root) ++root_children;
        if (low[u] >= disc[p]) {
          if (p != root) is_cut[p] = 1;
          std::vector<int> block;
          while (!edge_stack.empty()) {
            const int edge = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(edge);
            if (edge == tree_edge) break;
          }
          std::sort(block.begin(), block.end());
          result.blocks.push_back(std::move(block));
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  for (int v = 0; v < vertices; ++v)
    if (is_cut[v]) result.cut_vertices.push_back(v);
  std::sort(result.blocks.begin(), result.blocks.end());
  return result;
}

std::string StateGraph::to_dot(const char* name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < vertex_count(); ++v) out << "  " << v << ";\n";
  for (const GraphEdge& e : edges_) {
    out << "  " << e.ends[0] << " -- " << e.ends[1] << " [label=\"" << to_char(e.label)
        << "\", band=" << e.id << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ReducedGraph::to_dot(const char* name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < graph_.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const GraphEdge& e : graph_.edges()) {
    const int mult = multiplicity(e.id);
    out << "  " << e.ends[0] << " -- " << e.ends[1] << " [label=\"" << to_char(e.label);
    if (mult > 1) out << " x" << mult;
    out << "\", band=" << e.id << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::json graph_json(const StateGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : g.edges()) {
    j["edges"].push_back({{"id", e.id},
                          {"label", std::string(1, to_char(e.label))},
                          {"ends", {e.ends[0], e.ends[1]}},
                          {"region", e.region}});
  }
  j["rotations"] = nlohmann::json::array();
  for (const auto& rotation : g.rotations()) {
    nlohmann::json row = nlohmann::json::array();
    for (const EdgeEnd& end : rotation)
      row.push_back({{"edge", end.edge}, {"arc", end.arc}, {"region", end.region}});
    j["rotations"].push_back(std::move(row));
  }
  return j;
}

} // namespace

std::string StateGraph::to_json_string() const { return graph_json(*this).dump(); }

std::string ReducedGraph::to_json_string() const {
  nlohmann::json j = graph_json(graph_);
  j["reduction_log"] = nlohmann::json::array();
  for (const ReductionEntry& entry : log_)
    j["reduction_log"].push_back({{"kept", entry.kept_edge}, {"absorbed", entry.absorbed}});
  return j.dump();
}

} // namespace kstate
