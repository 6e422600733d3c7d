#include "kstate/state.hpp"

#include <algorithm>
#include <numeric>

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

} // namespace

KauffmanState KauffmanState::from_string(std::string_view text, int crossings) {
  if (static_cast<int>(text.size()) != crossings)
    fail(ErrorKind::LengthMismatch, "state string has length " + std::to_string(text.size()) +
                                        ", diagram has " + std::to_string(crossings) +
                                        " crossings");
  std::vector<Resolution> labels(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'A')
      labels[i] = Resolution::A;
    else if (text[i] == 'B')
      labels[i] = Resolution::B;
    else
      fail(ErrorKind::BadCharacter,
           std::string("state strings use the alphabet {A,B}, found '") + text[i] + "'");
  }
  return KauffmanState(std::move(labels));
}

KauffmanState make_state(const Diagram& diagram, std::string_view selector) {
  if (selector == "ALL_A") return KauffmanState::all_a(diagram.crossing_count());
  if (selector == "ALL_B") return KauffmanState::all_b(diagram.crossing_count());
  return KauffmanState::from_string(selector, diagram.crossing_count());
}

KauffmanState seifert_state(const Diagram& diagram) {
  // The A-arc joins slots (0,1). Slot 0 is always incoming, so the A-arc
  // respects orientation exactly when slot 1 is outgoing.
  std::vector<Resolution> labels(diagram.crossing_count());
  for (int c = 0; c < diagram.crossing_count(); ++c)
    labels[c] = diagram.incoming(4 * c + 1) ? Resolution::B : Resolution::A;
  return KauffmanState(std::move(labels));
}

int SmoothedMap::arc_mate(int dart) const {
  const int s = dart % 4;
  const int base = 4 * (dart / 4);
  if (labels_[dart / 4] == Resolution::A) {
    static constexpr int kPairA[4] = {1, 0, 3, 2};
    return base + kPairA[s];
  }
  static constexpr int kPairB[4] = {3, 2, 1, 0};
  return base + kPairB[s];
}

bool SmoothedMap::arc_corner_start(int dart) const {
  const int s = dart % 4;
  return labels_[dart / 4] == Resolution::A ? (s == 0 || s == 2) : (s == 1 || s == 3);
}

int SmoothedMap::arc_index(int dart) const {
  const int s = dart % 4;
  if (labels_[dart / 4] == Resolution::A) return s <= 1 ? 0 : 1;
  return (s == 1 || s == 2) ? 0 : 1;
}

SmoothedMap smooth(const Diagram& diagram, const KauffmanState& state) {
  if (state.size() != diagram.crossing_count())
    fail(ErrorKind::LengthMismatch, "state has " + std::to_string(state.size()) +
                                        " labels for " + std::to_string(diagram.crossing_count()) +
                                        " crossings");
  SmoothedMap m;
  m.n_ = diagram.crossing_count();
  m.labels_ = state.labels();
  const int darts = diagram.dart_count();
  m.mate_.resize(darts);
  for (int d = 0; d < darts; ++d) m.mate_[d] = diagram.mate(d);
  m.face_of_dart_.resize(darts);
  for (int d = 0; d < darts; ++d) m.face_of_dart_[d] = diagram.face_of(d);
  m.outer_dart_ = diagram.outer_dart();
  m.diagram_components_ = diagram.component_count();

  // Circles: orbits of darts under alternating edge and arc hops.
  m.circle_of_dart_.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (m.circle_of_dart_[start] >= 0) continue;
    CircleOrbit orbit;
    orbit.id = static_cast<int>(m.circles_.size());
    int d = start;
    while (true) {
      m.circle_of_dart_[d] = orbit.id;
      orbit.darts.push_back(d);
      const int across = m.mate_[d];
      m.circle_of_dart_[across] = orbit.id;
      orbit.darts.push_back(across);
      d = m.arc_mate(across);
      if (d == start) break;
    }
    m.circles_.push_back(std::move(orbit));
  }

  // Regions: diagram faces merged at each smoothed crossing. The resolution
  // arcs cut off two corners; the two remaining corners and the old crossing
  // point join into the band's region.
  UnionFind region_uf(diagram.face_count());
  for (int c = 0; c < m.n_; ++c) {
    if (state.at(c) == Resolution::A)
      region_uf.unite(diagram.face_of(4 * c + 1), diagram.face_of(4 * c + 3));
    else
      region_uf.unite(diagram.face_of(4 * c + 0), diagram.face_of(4 * c + 2));
  }
  // Dense region ids ordered by the lowest dart incident to the class.
  std::vector<int> class_min_dart(diagram.face_count(), darts);
  for (const Face& f : diagram.faces()) {
    const int root = region_uf.find(f.id);
    class_min_dart[root] = std::min(class_min_dart[root], f.boundary.front());
  }
  std::vector<std::pair<int, int>> roots; // (min dart, root)
  for (int f = 0; f < diagram.face_count(); ++f)
    if (region_uf.find(f) == f) roots.emplace_back(class_min_dart[f], f);
  std::sort(roots.begin(), roots.end());
  std::vector<int> region_of_root(diagram.face_count(), -1);
  m.regions_.resize(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    region_of_root[roots[i].second] = static_cast<int>(i);
    m.regions_[i].id = static_cast<int>(i);
  }
  m.region_of_face_.resize(diagram.face_count());
  for (int f = 0; f < diagram.face_count(); ++f) {
    m.region_of_face_[f] = region_of_root[region_uf.find(f)];
    m.regions_[m.region_of_face_[f]].faces.push_back(f);
  }
  m.outer_region_ = m.region_of_face_[diagram.face_of(m.outer_dart_)];

  // Bands: one per crossing, joining the circles of its two arcs, living in
  // the merged region.
  m.bands_.resize(m.n_);
  for (int c = 0; c < m.n_; ++c) {
    Band& band = m.bands_[c];
    band.id = c;
    band.label = state.at(c);
    const int arc0_dart = (state.at(c) == Resolution::A) ? 4 * c + 0 : 4 * c + 1;
    const int arc1_dart = (state.at(c) == Resolution::A) ? 4 * c + 2 : 4 * c + 3;
    band.circles = {m.circle_of_dart_[arc0_dart], m.circle_of_dart_[arc1_dart]};
    const int merged_dart = (state.at(c) == Resolution::A) ? 4 * c + 1 : 4 * c + 0;
    band.region = m.region_of_face_[diagram.face_of(merged_dart)];
  }

  // Attachment sequences: an event per arc hop along each circle.
  m.attachments_.resize(m.circles_.size());
  for (const CircleOrbit& orbit : m.circles_) {
    auto& events = m.attachments_[orbit.id];
    const size_t len = orbit.darts.size();
    for (size_t k = 1; k < len; k += 2) {
      const int dart = orbit.darts[k]; // arc hop leaves from odd positions
      const int c = dart / 4;
      AttachmentEvent event;
      event.band = c;
      event.label = m.labels_[c];
      event.arc = m.arc_index(dart);
      event.other_circle = m.bands_[c].circles[1 - event.arc];
      event.region = m.bands_[c].region;
      events.push_back(event);
    }
  }

  return m;
}

SurfaceInvariants surface_invariants(const SmoothedMap& smoothed) {
  SurfaceInvariants inv;
  const int circles = smoothed.circle_count();
  const int n = smoothed.crossing_count();
  inv.euler_characteristic = circles - n;

  UnionFind graph_uf(circles);
  for (const Band& band : smoothed.bands()) graph_uf.unite(band.circles[0], band.circles[1]);
  int graph_components = 0;
  for (int v = 0; v < circles; ++v)
    if (graph_uf.find(v) == v) ++graph_components;
  inv.first_betti = n - circles + graph_components;

  // Boundary trace: along an edge, through the band sides at each crossing.
  // This reproduces the strands of the diagram, so orbits are the link
  // components.
  UnionFind edge_uf(2 * n);
  std::vector<int> edge_id(4 * n, -1);
  {
    int next = 0;
    for (int d = 0; d < 4 * n; ++d) {
      if (edge_id[d] >= 0) continue;
      edge_id[d] = edge_id[smoothed.mate(d)] = next++;
    }
  }
  for (int d = 0; d < 4 * n; ++d) {
    static constexpr int kThrough[4] = {2, 3, 0, 1};
    const int t = 4 * (d / 4) + kThrough[d % 4];
    edge_uf.unite(edge_id[d], edge_id[t]);
  }
  int boundary = 0;
  for (int e = 0; e < 2 * n; ++e)
    if (edge_uf.find(e) == e) ++boundary;
  inv.boundary_components = boundary;

  // Orientable iff the state graph is bipartite: each band carries one half
  // twist, so orientation survives exactly the even cycles.
  std::vector<int> color(circles, -1);
  std::vector<std::vector<int>> adjacency(circles);
  bool bipartite = true;
  for (const Band& band : smoothed.bands()) {
    if (band.circles[0] == band.circles[1]) bipartite = false;
    adjacency[band.circles[0]].push_back(band.circles[1]);
    adjacency[band.circles[1]].push_back(band.circles[0]);
  }
  for (int start = 0; start < circles && bipartite; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    while (!queue.empty() && bipartite) {
      const int v = queue.back();
      queue.pop_back();
      for (int w : adjacency[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  inv.orientable = bipartite;
  return inv;
}

std::string SmoothedMap::to_json_string() const {
  nlohmann::json j;
  j["circles"] = nlohmann::json::array();
  for (const CircleOrbit& c : circles_) j["circles"].push_back({{"id", c.id}, {"darts", c.darts}});
  j["regions"] = nlohmann::json::array();
  for (const RegionInfo& r : regions_)
    j["regions"].push_back({{"id", r.id}, {"faces", r.faces}, {"outer", r.id == outer_region_}});
  j["bands"] = nlohmann::json::array();
  for (const Band& b : bands_) {
    j["bands"].push_back({{"id", b.id},
                          {"label", std::string(1, to_char(b.label))},
                          {"circles", {b.circles[0], b.circles[1]}},
                          {"region", b.region}});
  }
  j["attachments"] = nlohmann::json::array();
  for (const auto& events : attachments_) {
    nlohmann::json row = nlohmann::json::array();
    for (const AttachmentEvent& e : events) {
      row.push_back({{"band", e.band},
                     {"label", std::string(1, to_char(e.label))},
                     {"other_circle", e.other_circle},
                     {"region", e.region}});
    }
    j["attachments"].push_back(std::move(row));
  }
  return j.dump();
}

} // namespace kstate
