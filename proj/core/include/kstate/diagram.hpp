#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kstate/errors.hpp"

namespace kstate {

/// One edge-end incidence of the diagram. Dart ids are dense: the dart at
/// slot s of crossing c has id 4*c + s. Slots run counterclockwise around
/// the crossing with slot 0 the incoming under-strand.
struct Dart {
  int id = -1;
  int crossing = -1;
  int slot = -1;
};

/// A crossing stores the edge index found at each of its four slots.
struct Crossing {
  std::array<int, 4> edge{-1, -1, -1, -1};
};

/// A face of the combinatorial map: one orbit of the face permutation,
/// listed as the cyclic sequence of darts whose left side is this face.
struct Face {
  int id = -1;
  std::vector<int> boundary;
};

/// An oriented link diagram as a combinatorial map. Immutable after parse;
/// all accessors are const and safe for concurrent reads.
///
/// PD convention: `X[a,b,c,d]` lists the four incident edges counterclockwise
/// starting from the incoming under-strand. Input labels may be arbitrary
/// positive integers, each occurring exactly twice; they are normalized to
/// dense edge indices in order of first appearance.
class Diagram {
public:
  static Diagram parse(std::string_view pd_text, bool allow_disconnected = false);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int dart_count() const { return 4 * crossing_count(); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int edge_at(int crossing, int slot) const { return crossings_[crossing].edge[slot]; }

  static int dart_id(int crossing, int slot) { return 4 * crossing + slot; }
  static int dart_crossing(int dart) { return dart / 4; }
  static int dart_slot(int dart) { return dart % 4; }
  Dart dart(int id) const { return Dart{id, dart_crossing(id), dart_slot(id)}; }

  /// Edge pairing (alpha): the other dart carrying the same edge.
  int mate(int dart) const { return mate_[dart]; }
  int edge_of_dart(int dart) const { return crossings_[dart / 4].edge[dart % 4]; }
  /// The two darts of an edge, lower id first.
  std::array<int, 2> edge_darts(int edge) const { return edge_darts_[edge]; }

  /// Rotation (sigma): next / previous dart counterclockwise at the crossing.
  static int next_ccw(int dart) { return 4 * (dart / 4) + (dart + 1) % 4; }
  static int prev_ccw(int dart) { return 4 * (dart / 4) + (dart + 3) % 4; }

  /// Faces of the map, traced by d -> prev_ccw(mate(d)); face_of(d) is the
  /// face on the left of dart d (pointing away from its crossing), which is
  /// the corner between d and next_ccw(d).
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(int dart) const { return face_of_dart_[dart]; }

  /// The dart designating the unbounded face: the higher dart of the
  /// highest-numbered edge.
  int outer_dart() const { return outer_dart_; }

  /// Orientation data. incoming(d) is true when the edge at d is directed
  /// into the crossing (d is the head end). Slot 0 is always incoming,
  /// slot 2 always outgoing.
  bool incoming(int dart) const { return incoming_[dart] != 0; }
  int component_count() const { return component_count_; }
  int component_of_edge(int edge) const { return edge_component_[edge]; }
  bool connected() const { return map_components_ == 1; }

  /// True when under- and over-passes alternate along every component.
  bool alternating_diagram() const;
  /// True when no crossing is nugatory (no face meets a crossing at two
  /// opposite corners).
  bool reduced_diagram() const;

  /// Canonical PD serialization with normalized 1-based labels;
  /// parse(to_pd()) reproduces the same diagram.
  std::string to_pd() const;
  /// JSON export: {"crossings":[[a,b,c,d],...]} with the same labels as to_pd().
  std::string to_json_string() const;

  /// The mirror image: every crossing's under/over is exchanged. The tuple of
  /// each crossing is rotated to start at the old incoming over-strand, so
  /// the result is again a valid PD of the same shadow.
  Diagram mirrored() const;

private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<int, 2>> edge_darts_;
  std::vector<int> mate_;
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  std::vector<signed char> incoming_;
  std::vector<int> edge_component_;
  int component_count_ = 0;
  int map_components_ = 0;
  int outer_dart_ = -1;

  void build(std::vector<std::array<long long, 4>> raw, bool allow_disconnected);
  void trace_faces();
  void orient();
};

/// Operation wrappers matching the module surface.
Diagram parse_pd(std::string_view pd_text, bool allow_disconnected = false);

struct OrientationInfo {
  std::vector<signed char> incoming; ///< per dart, head end of its edge
  std::vector<int> edge_component;   ///< per edge, component index
  int component_count = 0;
};

OrientationInfo orientation(const Diagram& diagram);

} // namespace kstate
