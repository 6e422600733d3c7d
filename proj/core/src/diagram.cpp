#include "kstate/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace kstate {

namespace {

// Strand continuation at a crossing: under passes 0<->2, over passes 1<->3.
int through(int dart) {
  static constexpr int kThrough[4] = {2, 3, 0, 1};
  return 4 * (dart / 4) + kThrough[dart % 4];
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

Diagram Diagram::parse(std::string_view pd_text, bool allow_disconnected) {
  std::vector<std::array<long long, 4>> raw;
  size_t i = 0;
  const size_t n = pd_text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(pd_text[i]))) ++i;
  };
  skip_ws();
  while (i < n) {
    if (pd_text[i] != 'X' || i + 1 >= n || pd_text[i + 1] != '[')
      fail(ErrorKind::SyntaxError, "expected 'X[' at offset " + std::to_string(i));
    i += 2;
    std::array<long long, 4> term{};
    for (int k = 0; k < 4; ++k) {
      if (i >= n || !std::isdigit(static_cast<unsigned char>(pd_text[i])))
        fail(ErrorKind::SyntaxError, "expected unsigned integer at offset " + std::to_string(i));
      long long value = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(pd_text[i]))) {
        value = value * 10 + (pd_text[i] - '0');
        if (value > 1'000'000'000LL) fail(ErrorKind::SyntaxError, "label out of range");
        ++i;
      }
      if (value == 0) fail(ErrorKind::SyntaxError, "labels must be positive");
      term[k] = value;
      const char expected = (k < 3) ? ',' : ']';
      if (i >= n || pd_text[i] != expected)
        fail(ErrorKind::SyntaxError, std::string("expected '") + expected + "' at offset " +
                                         std::to_string(i));
      ++i;
    }
    raw.push_back(term);
    skip_ws();
  }
  if (raw.empty()) fail(ErrorKind::EmptyDiagram, "a PD code needs at least one crossing");

  Diagram d;
  d.build(std::move(raw), allow_disconnected);
  return d;
}

void Diagram::build(std::vector<std::array<long long, 4>> raw, bool allow_disconnected) {
  const int n = static_cast<int>(raw.size());
  crossings_.assign(n, Crossing{});

  // Normalize labels to dense edge ids in order of first appearance.
  std::map<long long, int> label_to_edge;
  std::vector<int> occurrences;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      auto [it, inserted] = label_to_edge.try_emplace(raw[c][s], static_cast<int>(label_to_edge.size()));
      if (inserted) occurrences.push_back(0);
      const int e = it->second;
      crossings_[c].edge[s] = e;
      ++occurrences[e];
    }
  }
  if (static_cast<int>(label_to_edge.size()) != 2 * n)
    fail(ErrorKind::BadLabels, "expected exactly " + std::to_string(2 * n) + " distinct labels, got " +
                                   std::to_string(label_to_edge.size()));
  for (auto& [label, e] : label_to_edge) {
    if (occurrences[e] != 2)
      fail(ErrorKind::BadLabels, "label " + std::to_string(label) + " occurs " +
                                     std::to_string(occurrences[e]) + " times (want 2)");
  }

  edge_darts_.assign(2 * n, {-1, -1});
  for (int dart = 0; dart < 4 * n; ++dart) {
    const int e = edge_of_dart(dart);
    if (edge_darts_[e][0] < 0)
      edge_darts_[e][0] = dart;
    else
      edge_darts_[e][1] = dart;
  }
  mate_.assign(4 * n, -1);
  for (int e = 0; e < 2 * n; ++e) {
    mate_[edge_darts_[e][0]] = edge_darts_[e][1];
    mate_[edge_darts_[e][1]] = edge_darts_[e][0];
  }

  // Connectivity of the underlying 4-valent map.
  UnionFind crossing_uf(n);
  for (int e = 0; e < 2 * n; ++e)
    crossing_uf.unite(edge_darts_[e][0] / 4, edge_darts_[e][1] / 4);
  std::vector<int> roots;
  for (int c = 0; c < n; ++c)
    if (crossing_uf.find(c) == c) roots.push_back(c);
  map_components_ = static_cast<int>(roots.size());
  if (map_components_ > 1 && !allow_disconnected)
    fail(ErrorKind::Disconnected, "diagram has " + std::to_string(map_components_) +
                                      " split components (pass allow_disconnected to accept)");

  trace_faces();

  // Euler check per map component certifies a sphere embedding.
  std::vector<int> comp_vertices(n, 0), comp_edges(n, 0), comp_faces(n, 0);
  for (int c = 0; c < n; ++c) ++comp_vertices[crossing_uf.find(c)];
  for (int e = 0; e < 2 * n; ++e) ++comp_edges[crossing_uf.find(edge_darts_[e][0] / 4)];
  for (const Face& f : faces_) ++comp_faces[crossing_uf.find(f.boundary.front() / 4)];
  for (int root : roots) {
    const int chi = comp_vertices[root] - comp_edges[root] + comp_faces[root];
    if (chi != 2)
      fail(ErrorKind::NonPlanar, "face tracing gives V-E+F=" + std::to_string(chi) +
                                     " on a component (want 2)");
  }

  const int top_edge = 2 * n - 1;
  outer_dart_ = std::max(edge_darts_[top_edge][0], edge_darts_[top_edge][1]);

  orient();
}

void Diagram::trace_faces() {
  const int darts = dart_count();
  face_of_dart_.assign(darts, -1);
  faces_.clear();
  for (int start = 0; start < darts; ++start) {
    if (face_of_dart_[start] >= 0) continue;
    Face face;
    face.id = static_cast<int>(faces_.size());
    int d = start;
    do {
      face_of_dart_[d] = face.id;
      face.boundary.push_back(d);
      d = prev_ccw(mate_[d]);
    } while (d != start);
    faces_.push_back(std::move(face));
  }
}

void Diagram::orient() {
  const int n = crossing_count();
  const int darts = dart_count();
  // incoming[d]: 1 if the edge at d points into the crossing. Constraints:
  //   slot 0 incoming, slot 2 outgoing,
  //   the two darts of an edge disagree,
  //   slots 1 and 3 of a crossing disagree.
  incoming_.assign(darts, -1);
  std::vector<int> stack;
  auto assign = [&](int dart, int value) {
    if (incoming_[dart] >= 0) {
      if (incoming_[dart] != value)
        fail(ErrorKind::OrientationConflict,
             "no consistent orientation: dart " + std::to_string(dart) +
                 " is forced both ways");
      return;
    }
    incoming_[dart] = static_cast<signed char>(value);
    stack.push_back(dart);
  };
  auto propagate = [&] {
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      const int v = incoming_[d];
      assign(mate_[d], 1 - v);
      const int s = d % 4;
      if (s == 1 || s == 3) assign(4 * (d / 4) + (s == 1 ? 3 : 1), 1 - v);
    }
  };
  for (int c = 0; c < n; ++c) {
    assign(4 * c + 0, 1);
    assign(4 * c + 2, 0);
    propagate();
  }
  // Components never forced (all-over strands): orient so their lowest dart
  // is outgoing.
  for (int d = 0; d < darts; ++d) {
    if (incoming_[d] < 0) {
      assign(d, 0);
      propagate();
    }
  }

  // Link components: orbits of edges under strand continuation.
  UnionFind edge_uf(edge_count());
  for (int d = 0; d < darts; ++d)
    edge_uf.unite(edge_of_dart(d), edge_of_dart(through(d)));
  edge_component_.assign(edge_count(), -1);
  component_count_ = 0;
  for (int e = 0; e < edge_count(); ++e) {
    const int r = edge_uf.find(e);
    if (edge_component_[r] < 0) edge_component_[r] = component_count_++;
    edge_component_[e] = edge_component_[r];
  }
}

bool Diagram::alternating_diagram() const {
  const int darts = dart_count();
  std::vector<char> seen(darts, 0);
  for (int start = 0; start < darts; ++start) {
    if (seen[start] || !incoming(start)) continue;
    // Walk the component through its passages; under/over must alternate
    // cyclically.
    int d = start;
    int previous = -1;
    do {
      seen[d] = 1;
      const int pass_under = (d % 4 == 0) ? 1 : 0;
      if (previous >= 0 && previous == pass_under) return false;
      previous = pass_under;
      d = mate_[through(d)];
    } while (d != start);
    const int first_under = (start % 4 == 0) ? 1 : 0;
    if (previous == first_under) return false;
  }
  return true;
}

bool Diagram::reduced_diagram() const {
  for (int c = 0; c < crossing_count(); ++c) {
    if (face_of(4 * c + 0) == face_of(4 * c + 2)) return false;
    if (face_of(4 * c + 1) == face_of(4 * c + 3)) return false;
  }
  return true;
}

std::string Diagram::to_pd() const {
  std::ostringstream out;
  for (int c = 0; c < crossing_count(); ++c) {
    if (c) out << ' ';
    out << "X[" << crossings_[c].edge[0] + 1 << ',' << crossings_[c].edge[1] + 1 << ','
        << crossings_[c].edge[2] + 1 << ',' << crossings_[c].edge[3] + 1 << ']';
  }
  return out.str();
}

std::string Diagram::to_json_string() const {
  std::ostringstream out;
  out << "{\"crossings\":[";
  for (int c = 0; c < crossing_count(); ++c) {
    if (c) out << ',';
    out << '[' << crossings_[c].edge[0] + 1 << ',' << crossings_[c].edge[1] + 1 << ','
        << crossings_[c].edge[2] + 1 << ',' << crossings_[c].edge[3] + 1 << ']';
  }
  out << "]}";
  return out.str();
}

Diagram Diagram::mirrored() const {
  std::vector<std::array<long long, 4>> raw;
  raw.reserve(crossing_count());
  for (int c = 0; c < crossing_count(); ++c) {
    // The incoming over-strand becomes the incoming under-strand.
    const int offset = incoming(4 * c + 1) ? 1 : 3;
    std::array<long long, 4> term{};
    for (int s = 0; s < 4; ++s) term[s] = crossings_[c].edge[(s + offset) % 4] + 1;
    raw.push_back(term);
  }
  Diagram m;
  m.build(std::move(raw), true);
  return m;
}

Diagram parse_pd(std::string_view pd_text, bool allow_disconnected) {
  return Diagram::parse(pd_text, allow_disconnected);
}

OrientationInfo orientation(const Diagram& diagram) {
  OrientationInfo info;
  info.incoming.resize(diagram.dart_count());
  for (int d = 0; d < diagram.dart_count(); ++d)
    info.incoming[d] = diagram.incoming(d) ? 1 : 0;
  info.edge_component.resize(diagram.edge_count());
  for (int e = 0; e < diagram.edge_count(); ++e)
    info.edge_component[e] = diagram.component_of_edge(e);
  info.component_count = diagram.component_count();
  return info;
}

} // namespace kstate
