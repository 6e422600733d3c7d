#include "kstate/homology.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace kstate {

SignedVertexLabeling vertex_signs(const ReducedGraph& reduced) {
  const StateGraph& g = reduced.graph();
  if (!g.connected()) fail(ErrorKind::Disconnected, "vertex signs need a connected graph");
  SignedVertexLabeling labeling;
  labeling.sign.assign(g.vertex_count(), 0);
  std::vector<std::vector<int>> adjacency(g.vertex_count());
  for (const GraphEdge& e : g.edges()) {
    if (e.ends[0] == e.ends[1])
      fail(ErrorKind::NotBipartite, "self-loop at vertex " + std::to_string(e.ends[0]) +
                                        " makes the surface one-sided");
    adjacency[e.ends[0]].push_back(e.ends[1]);
    adjacency[e.ends[1]].push_back(e.ends[0]);
  }
  std::vector<int> queue{0};
  labeling.sign[0] = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int w : adjacency[v]) {
      if (labeling.sign[w] == 0) {
        labeling.sign[w] = static_cast<signed char>(-labeling.sign[v]);
        queue.push_back(w);
      } else if (labeling.sign[w] == labeling.sign[v]) {
        fail(ErrorKind::NotBipartite, "odd cycle through vertices " + std::to_string(v) +
                                          " and " + std::to_string(w));
      }
    }
  }
  return labeling;
}

HomologyMatrix homology_matrix(const ReducedGraph& reduced) {
  const StateGraph& g = reduced.graph();
  if (!g.connected()) fail(ErrorKind::Disconnected, "homology matrix needs a connected graph");
  for (const GraphEdge& e : g.edges()) {
    if (e.label != g.edges().front().label)
      fail(ErrorKind::MixedLabels,
           "graph mixes A and B labels; decompose into uniform pieces first");
  }
  const BlockDecomposition blocks = block_decomposition(g);
  if (!blocks.cut_vertices.empty())
    fail(ErrorKind::CutVertex, "cut vertex " + std::to_string(blocks.cut_vertices.front()) +
                                   "; decompose there first");
  const SignedVertexLabeling signs = vertex_signs(reduced);

  HomologyMatrix result;
  if (g.edge_count() == g.vertex_count() - 1) return result; // disk, trivial map

  // White faces of the embedding: the faces crossing at least one band core.
  const std::vector<GraphFace> faces = embedded_faces(g);
  const int c0_id = unbounded_face(faces);
  std::vector<const GraphFace*> white;
  const GraphFace* c0 = nullptr;
  for (const GraphFace& face : faces) {
    if (face.core_edges.empty()) continue;
    if (!face.simple_cycle)
      fail(ErrorKind::Internal, "two-connected graph traced a non-simple face");
    white.push_back(&face);
    if (face.id == c0_id) c0 = &face;
  }
  const int expected_white = g.edge_count() - g.vertex_count() + 2;
  if (static_cast<int>(white.size()) != expected_white || !c0)
    fail(ErrorKind::Internal, "expected " + std::to_string(expected_white) + " white faces, got " +
                                  std::to_string(white.size()));
  result.outer_region = c0->region;

  std::vector<const GraphFace*> alphas;
  std::map<int, int> index_of_face;
  for (const GraphFace* face : white) {
    if (face == c0) continue;
    index_of_face[face->id] = static_cast<int>(alphas.size());
    alphas.push_back(face);
  }
  const int n = static_cast<int>(alphas.size());

  // Which two white faces each edge borders.
  std::map<int, std::vector<int>> faces_of_edge;
  for (const GraphFace* face : white)
    for (int e : face->core_edges) faces_of_edge[e].push_back(face->id);
  for (auto& [e, ids] : faces_of_edge) {
    if (ids.size() != 2)
      fail(ErrorKind::Internal, "edge " + std::to_string(e) + " borders " +
                                    std::to_string(ids.size()) + " white faces");
  }

  result.entries.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) {
    const GraphFace& face = *alphas[i];
    InnerCycle cycle;
    cycle.edges = face.core_edges;
    cycle.vertices = face.core_from;
    cycle.region = face.region;
    cycle.face = face.id;
    for (int e : cycle.edges) cycle.label_sequence.push_back(g.edge_by_id(e).label);
    result.cycles.push_back(cycle);

    for (size_t k = 0; k < face.core_edges.size(); ++k) {
      const int from = face.core_from[k];
      const int to = face.core_to[k];
      if (signs.sign[from] > 0 && signs.sign[to] < 0) {
        result.entries[i][i] += 1; // Case 1
      } else {
        // Case 2: the letter of the face across the edge, inverted.
        const int edge = face.core_edges[k];
        const auto& pair = faces_of_edge[edge];
        const int across = pair[0] == face.id ? pair[1] : pair[0];
        if (across == c0->id) continue;
        result.entries[index_of_face[across]][i] -= 1;
      }
    }
  }

  // Construction guarantees of the matrix.
  for (int i = 0; i < n; ++i) {
    const BigInt expected = static_cast<int>(alphas[i]->core_edges.size()) / 2;
    if (result.entries[i][i] != expected)
      fail(ErrorKind::Internal, "diagonal entry differs from half the cycle length");
    BigInt row_sum = 0, col_sum = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (result.entries[i][j] > 0 || result.entries[j][i] > 0)
        fail(ErrorKind::Internal, "positive off-diagonal entry");
      row_sum += abs(result.entries[i][j]);
      col_sum += abs(result.entries[j][i]);
    }
    if (result.entries[i][i] < 2 || result.entries[i][i] < row_sum ||
        result.entries[i][i] < col_sum)
      fail(ErrorKind::Internal, "dominance property violated");
  }
  return result;
}

BigInt determinant(const IntMatrix& matrix) {
  const int n = static_cast<int>(matrix.size());
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::NotSquare, "matrix is not square");
  if (n == 0) return 1;

  IntMatrix m = matrix;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous_pivot;
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

DominantDetReport check_dominant_det(const IntMatrix& matrix) {
  const size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) fail(ErrorKind::NotSquare, "matrix is not square");

  DominantDetReport report;
  report.hypotheses_hold = true;
  for (size_t i = 0; i < n; ++i) {
    BigInt off_sum = 0;
    for (size_t j = 0; j < n; ++j)
      if (j != i) off_sum += abs(matrix[i][j]);
    const BigInt bound = std::max<BigInt>(2, off_sum);
    if (matrix[i][i] < bound) {
      report.hypotheses_hold = false;
      break;
    }
  }
  report.determinant = determinant(matrix);
  report.conclusion_verified =
      !report.hypotheses_hold || report.determinant == 0 || report.determinant >= 2;
  return report;
}

IntMatrix sharp_family(int n) {
  if (n < 1) fail(ErrorKind::BoundExceeded, "the family is defined for n >= 1");
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  if (n >= 2) m[0][1] = 2;
  if (n >= 2) m[1][0] = 1;
  if (n >= 3) m[1][2] = -1;
  if (n >= 3) m[2][0] = 1;
  if (n >= 4) m[2][3] = 1;
  for (int i = 3; i < n; ++i) {
    m[i][i - 1] = 1;
    if (i + 1 < n) m[i][i + 1] = 1;
  }
  return m;
}

std::string to_json_string(const HomologyMatrix& matrix) {
  nlohmann::json j;
  const int n = static_cast<int>(matrix.entries.size());
  j["size"] = n;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : matrix.entries) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const BigInt& value : row) jrow.push_back(value.convert_to<long long>());
    j["rows"].push_back(std::move(jrow));
  }
  j["cycles"] = nlohmann::json::array();
  for (const InnerCycle& cycle : matrix.cycles) {
    std::string labels;
    for (Resolution r : cycle.label_sequence) labels.push_back(to_char(r));
    j["cycles"].push_back({{"edges", cycle.edges},
                           {"vertices", cycle.vertices},
                           {"region", cycle.region},
                           {"labels", labels}});
  }
  j["outer_region"] = matrix.outer_region;
  return j.dump();
}

} // namespace kstate
