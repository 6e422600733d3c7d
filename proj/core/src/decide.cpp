#include "kstate/decide.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "kstate/log.hpp"

namespace kstate {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Fibered: return "FIBERED";
    case Verdict::NotFibered: return "NOT_FIBERED";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::SpanningTree: return "SPANNING_TREE";
    case CertificateKind::NotATree: return "NOT_A_TREE";
    case CertificateKind::MixedParallel: return "MIXED_PARALLEL";
    case CertificateKind::AlternatingInnerCycle: return "ALTERNATING_INNER_CYCLE";
    case CertificateKind::None: return "NONE";
  }
  return "NONE";
}

namespace {

// Deterministic cycle in a connected non-tree multigraph: BFS spanning tree
// from vertex 0 preferring low edge ids, then close the lowest non-tree edge
// with the tree path between its endpoints.
void find_cycle(const StateGraph& g, std::vector<int>& cycle_edges,
                std::vector<int>& cycle_vertices) {
  const int vertices = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertices); // (edge, other)
  for (const GraphEdge& e : g.edges()) {
    if (e.ends[0] == e.ends[1]) { // a self-loop is already a cycle
      cycle_edges = {e.id};
      cycle_vertices = {e.ends[0]};
      return;
    }
    adjacency[e.ends[0]].emplace_back(e.id, e.ends[1]);
    adjacency[e.ends[1]].emplace_back(e.id, e.ends[0]);
  }
  std::vector<int> parent_vertex(vertices, -1), parent_edge(vertices, -1), depth(vertices, -1);
  std::vector<char> in_tree(g.map().crossing_count(), 0);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (auto [edge, other] : adjacency[v]) {
      if (depth[other] >= 0) continue;
      depth[other] = depth[v] + 1;
      parent_vertex[other] = v;
      parent_edge[other] = edge;
      in_tree[edge] = 1;
      queue.push_back(other);
    }
  }
  for (const GraphEdge& e : g.edges()) {
    if (in_tree[e.id]) continue;
    int u = e.ends[0], v = e.ends[1];
    std::vector<int> up_u_edges, up_v_edges, up_u_vertices{u}, up_v_vertices{v};
    while (depth[u] > depth[v]) {
      up_u_edges.push_back(parent_edge[u]);
      u = parent_vertex[u];
      up_u_vertices.push_back(u);
    }
    while (depth[v] > depth[u]) {
      up_v_edges.push_back(parent_edge[v]);
      v = parent_vertex[v];
      up_v_vertices.push_back(v);
    }
    while (u != v) {
      up_u_edges.push_back(parent_edge[u]);
      u = parent_vertex[u];
      up_u_vertices.push_back(u);
      up_v_edges.push_back(parent_edge[v]);
      v = parent_vertex[v];
      up_v_vertices.push_back(v);
    }
    // Walk ends[0] up to the meeting vertex, down to ends[1], close with e.
    cycle_edges = up_u_edges;
    cycle_vertices = up_u_vertices;
    for (size_t i = up_v_edges.size(); i > 0; --i) {
      cycle_edges.push_back(up_v_edges[i - 1]);
      cycle_vertices.push_back(up_v_vertices[i - 1]);
    }
    cycle_edges.push_back(e.id);
    return;
  }
  fail(ErrorKind::Internal, "no cycle in a graph that is not a tree");
}

} // namespace

FiberVerdict decide_fiber(const Diagram& diagram, const KauffmanState& state) {
  if (!diagram.connected())
    fail(ErrorKind::Disconnected, "fiber decision needs a connected diagram");
  const SmoothedMap smoothed = smooth(diagram, state);
  const StateGraph graph = build_graph(smoothed);
  const ReducedGraph reduced = reduce(graph);

  FiberVerdict result;
  result.state_class.alternating = is_alternating_state(smoothed).first;
  result.state_class.homogeneous = is_homogeneous_state(smoothed).first;

  if (is_tree(reduced)) {
    result.verdict = Verdict::Fibered;
    result.certificate.kind = CertificateKind::SpanningTree;
    for (const GraphEdge& e : reduced.graph().edges())
      result.certificate.tree_edges.push_back(e.id);
    return result;
  }
  const auto mixed = mixed_parallel_pairs(graph);
  if (!mixed.empty()) {
    result.verdict = Verdict::NotFibered;
    result.certificate.kind = CertificateKind::MixedParallel;
    result.certificate.edge_pair = {mixed.front().first, mixed.front().second};
    return result;
  }
  if (auto cycle = find_alternating_inner_cycle(graph)) {
    result.verdict = Verdict::NotFibered;
    result.certificate.kind = CertificateKind::AlternatingInnerCycle;
    result.certificate.inner_cycle = std::move(*cycle);
    return result;
  }
  if (result.state_class.alternating || result.state_class.homogeneous) {
    result.verdict = Verdict::NotFibered;
    result.certificate.kind = CertificateKind::NotATree;
    find_cycle(reduced.graph(), result.certificate.cycle_edges,
               result.certificate.cycle_vertices);
    return result;
  }
  result.verdict = Verdict::Unknown;
  result.certificate.kind = CertificateKind::None;
  return result;
}

bool verify_certificate(const Diagram& diagram, const KauffmanState& state,
                        const FiberVerdict& verdict) {
  const SmoothedMap smoothed = smooth(diagram, state);
  const StateGraph graph = build_graph(smoothed);
  const ReducedGraph reduced = reduce(graph);
  const Certificate& cert = verdict.certificate;

  if ((verdict.verdict == Verdict::Fibered) != (cert.kind == CertificateKind::SpanningTree))
    return false;

  switch (cert.kind) {
    case CertificateKind::SpanningTree: {
      if (!is_tree(reduced)) return false;
      std::vector<int> expected;
      for (const GraphEdge& e : reduced.graph().edges()) expected.push_back(e.id);
      return cert.tree_edges == expected;
    }
    case CertificateKind::NotATree: {
      if (verdict.verdict != Verdict::NotFibered) return false;
      if (!verdict.state_class.alternating && !verdict.state_class.homogeneous) return false;
      const size_t len = cert.cycle_edges.size();
      if (len == 0 || cert.cycle_vertices.size() != len) return false;
      std::vector<int> seen = cert.cycle_edges;
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
      for (size_t i = 0; i < len; ++i) {
        const GraphEdge& e = reduced.graph().edge_by_id(cert.cycle_edges[i]);
        const int from = cert.cycle_vertices[i];
        const int to = cert.cycle_vertices[(i + 1) % len];
        const bool matches = (e.ends[0] == from && e.ends[1] == to) ||
                             (e.ends[1] == from && e.ends[0] == to);
        if (!matches) return false;
      }
      return true;
    }
    case CertificateKind::MixedParallel: {
      if (verdict.verdict != Verdict::NotFibered) return false;
      const GraphEdge& a = graph.edge_by_id(cert.edge_pair[0]);
      const GraphEdge& b = graph.edge_by_id(cert.edge_pair[1]);
      const auto ends = [](const GraphEdge& e) {
        return std::minmax(e.ends[0], e.ends[1]);
      };
      return a.label != b.label && ends(a) == ends(b);
    }
    case CertificateKind::AlternatingInnerCycle: {
      if (verdict.verdict != Verdict::NotFibered || !cert.inner_cycle) return false;
      const InnerCycle& claimed = *cert.inner_cycle;
      const size_t len = claimed.label_sequence.size();
      if (len < 2 || len % 2 != 0) return false;
      for (size_t i = 0; i < len; ++i)
        if (claimed.label_sequence[i] == claimed.label_sequence[(i + 1) % len]) return false;
      for (const InnerCycle& cycle : inner_cycles(graph))
        if (cycle.face == claimed.face && cycle.edges == claimed.edges) return true;
      return false;
    }
    case CertificateKind::None: {
      if (verdict.verdict != Verdict::Unknown) return false;
      if (verdict.state_class.alternating || verdict.state_class.homogeneous) return false;
      return !is_tree(reduced) && mixed_parallel_pairs(graph).empty() &&
             !find_alternating_inner_cycle(graph).has_value();
    }
  }
  return false;
}

CensusResult census(const Diagram& diagram, int max_crossings, int threads) {
  const int n = diagram.crossing_count();
  if (n > max_crossings)
    fail(ErrorKind::BoundExceeded, "census over " + std::to_string(n) +
                                       " crossings exceeds the bound " +
                                       std::to_string(max_crossings));
  const std::uint64_t total = std::uint64_t{1} << n;
  CensusResult result;
  result.rows.resize(total);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t index = begin; index < end; ++index) {
      std::vector<Resolution> labels(n);
      for (int c = 0; c < n; ++c)
        labels[c] = (index >> (n - 1 - c)) & 1 ? Resolution::B : Resolution::A;
      const KauffmanState state(std::move(labels));
      const SmoothedMap smoothed = smooth(diagram, state);
      const FiberVerdict verdict = decide_fiber(diagram, state);
      CensusRow row;
      row.state = state.str();
      row.circles = smoothed.circle_count();
      row.euler = smoothed.circle_count() - n;
      row.alternating = verdict.state_class.alternating;
      row.homogeneous = verdict.state_class.homogeneous;
      row.verdict = verdict.verdict;
      row.certificate = verdict.certificate.kind;
      result.rows[index] = std::move(row);
    }
  };

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (total < 64 || workers == 1) {
    run_range(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& worker : pool) worker.join();
  }

  for (const CensusRow& row : result.rows) {
    if (row.verdict == Verdict::Fibered)
      ++result.fibered;
    else if (row.verdict == Verdict::NotFibered)
      ++result.not_fibered;
    else
      ++result.unknown;
  }
  log_info("census finished: " + std::to_string(total) + " states");
  return result;
}

std::string to_json_string(const FiberVerdict& verdict) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(verdict.verdict));
  nlohmann::json cert;
  cert["kind"] = std::string(to_string(verdict.certificate.kind));
  switch (verdict.certificate.kind) {
    case CertificateKind::SpanningTree:
      cert["edges"] = verdict.certificate.tree_edges;
      break;
    case CertificateKind::NotATree:
      cert["cycle_edges"] = verdict.certificate.cycle_edges;
      cert["cycle_vertices"] = verdict.certificate.cycle_vertices;
      break;
    case CertificateKind::MixedParallel:
      cert["edges"] = {verdict.certificate.edge_pair[0], verdict.certificate.edge_pair[1]};
      break;
    case CertificateKind::AlternatingInnerCycle: {
      const InnerCycle& cycle = *verdict.certificate.inner_cycle;
      std::string labels;
      for (Resolution r : cycle.label_sequence) labels.push_back(to_char(r));
      cert["cycle_edges"] = cycle.edges;
      cert["cycle_vertices"] = cycle.vertices;
      cert["region"] = cycle.region;
      cert["labels"] = labels;
      break;
    }
    case CertificateKind::None:
      break;
  }
  j["certificate"] = std::move(cert);
  j["state_class"] = {{"alternating", verdict.state_class.alternating},
                      {"homogeneous", verdict.state_class.homogeneous}};
  return j.dump();
}

std::string to_csv(const CensusResult& result) {
  std::ostringstream out;
  out << "state,circles,euler,alternating,homogeneous,verdict,certificate\n";
  for (const CensusRow& row : result.rows) {
    out << row.state << ',' << row.circles << ',' << row.euler << ','
        << (row.alternating ? "true" : "false") << ',' << (row.homogeneous ? "true" : "false")
        << ',' << to_string(row.verdict) << ',' << to_string(row.certificate) << '\n';
  }
  out << "# total=" << result.rows.size() << " fibered=" << result.fibered
      << " not_fibered=" << result.not_fibered << " unknown=" << result.unknown << '\n';
  return out.str();
}

} // namespace kstate
