#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kstate/state.hpp"

namespace kstate {

/// An edge of the state graph: the band of one crossing. ends[k] is the
/// circle attached at arc k.
struct GraphEdge {
  int id = -1;
  Resolution label = Resolution::A;
  std::array<int, 2> ends{-1, -1};
  int region = -1;
};

/// One edge-end in a vertex rotation.
struct EdgeEnd {
  int edge = -1;
  int arc = -1;
  int region = -1;
};

class ReducedGraph;

/// The labeled state multigraph on circles, embedded in the plane: the
/// rotation at each vertex is the cyclic order of band attachments along its
/// circle. Keeps the smoothed map so faces of the embedding stay computable
/// after edges are dropped (reduction).
class StateGraph {
public:
  const SmoothedMap& map() const { return map_; }
  int vertex_count() const { return map_.circle_count(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<std::vector<EdgeEnd>>& rotations() const { return rotations_; }
  bool kept(int band) const { return kept_[band]; }
  const GraphEdge& edge_by_id(int band) const;

  bool connected() const;

  std::string to_dot(const char* name = "G_sigma") const;
  std::string to_json_string() const;

private:
  friend StateGraph build_graph(const SmoothedMap&);
  friend class ReducedGraph;
  friend ReducedGraph reduce(const StateGraph&);

  SmoothedMap map_;
  std::vector<char> kept_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<EdgeEnd>> rotations_;

  void rebuild_view();
};

StateGraph build_graph(const SmoothedMap& smoothed);

/// Log entry of the reduction: the surviving edge and the parallel
/// same-label edges it stands for.
struct ReductionEntry {
  int kept_edge = -1;
  std::vector<int> absorbed;
};

/// The reduced graph: one edge per (endpoint pair, label) class.
class ReducedGraph {
public:
  const StateGraph& graph() const { return graph_; }
  const std::vector<ReductionEntry>& reduction_log() const { return log_; }
  int multiplicity(int kept_edge) const;

  std::string to_dot(const char* name = "G_sigma_reduced") const;
  std::string to_json_string() const;

private:
  friend ReducedGraph reduce(const StateGraph&);
  StateGraph graph_;
  std::vector<ReductionEntry> log_;
};

ReducedGraph reduce(const StateGraph& graph);

bool is_tree(const StateGraph& graph);
bool is_tree(const ReducedGraph& reduced);

/// All unordered pairs of parallel edges carrying different labels,
/// ascending by edge ids. Empty exactly when the standing assumption of the
/// reduction corollary holds.
std::vector<std::pair<int, int>> mixed_parallel_pairs(const StateGraph& graph);

/// A face of the embedded state graph, traced on the plane map made of the
/// state circles and the band cores.
struct GraphFace {
  int id = -1;
  int region = -1;
  bool outer = false;
  std::vector<int> core_edges; ///< bands crossed, in traversal order
  std::vector<int> core_from;  ///< circle each core leaves
  std::vector<int> core_to;    ///< circle each core enters
  bool simple_cycle = false;   ///< projects to a simple graph cycle, length >= 2
};

std::vector<GraphFace> embedded_faces(const StateGraph& graph);

/// Face id of the graph face that becomes unbounded when the spine is drawn
/// in the plane (-1 when no face meets a core). Inner cycles exclude it; the
/// homology construction takes it as the region C_0.
int unbounded_face(const std::vector<GraphFace>& faces);

/// An inner cycle: a bounded face of the embedded graph whose projection is
/// a simple cycle.
struct InnerCycle {
  std::vector<int> edges;
  std::vector<int> vertices; ///< vertices[i] is the tail of edges[i]
  int region = -1;
  std::vector<Resolution> label_sequence;
  int face = -1;
};

std::vector<InnerCycle> inner_cycles(const StateGraph& graph);

/// First inner cycle whose labels strictly alternate A,B,A,B,...
std::optional<InnerCycle> find_alternating_inner_cycle(const StateGraph& graph);

/// A subgraph produced by a cut-pair decomposition.
struct GraphPiece {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// Murasugi decomposition of the graph at the vertex pair (v,w) along edge x:
/// the first piece is {x} itself, followed by x joined with each component of
/// the graph split at v and w, innermost with respect to x first.
std::vector<GraphPiece> decompose_at_pair(const StateGraph& graph, int v, int w, int x);

/// Two-connected blocks (as edge id sets, each sorted) and cut vertices of
/// the multigraph. A self-loop forms a block by itself.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
};

BlockDecomposition block_decomposition(const StateGraph& graph);

} // namespace kstate
