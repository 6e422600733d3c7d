#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kstate/diagram.hpp"

namespace kstate {

/// The two resolutions of a crossing. With slots counterclockwise from the
/// incoming under-strand, the A-resolution joins slots (0,1) and (2,3); the
/// B-resolution joins (1,2) and (3,0).
enum class Resolution : std::uint8_t { A, B };

inline char to_char(Resolution r) { return r == Resolution::A ? 'A' : 'B'; }
inline Resolution opposite(Resolution r) {
  return r == Resolution::A ? Resolution::B : Resolution::A;
}

/// One resolution label per crossing of a fixed diagram.
class KauffmanState {
public:
  KauffmanState() = default;
  explicit KauffmanState(std::vector<Resolution> labels) : labels_(std::move(labels)) {}

  static KauffmanState all_a(int crossings) {
    return KauffmanState(std::vector<Resolution>(crossings, Resolution::A));
  }
  static KauffmanState all_b(int crossings) {
    return KauffmanState(std::vector<Resolution>(crossings, Resolution::B));
  }
  static KauffmanState from_string(std::string_view text, int crossings);

  int size() const { return static_cast<int>(labels_.size()); }
  Resolution at(int crossing) const { return labels_[crossing]; }
  const std::vector<Resolution>& labels() const { return labels_; }

  KauffmanState complemented() const {
    std::vector<Resolution> flipped(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i) flipped[i] = opposite(labels_[i]);
    return KauffmanState(std::move(flipped));
  }

  std::string str() const {
    std::string s(labels_.size(), 'A');
    for (size_t i = 0; i < labels_.size(); ++i) s[i] = to_char(labels_[i]);
    return s;
  }

  bool operator==(const KauffmanState& other) const = default;

private:
  std::vector<Resolution> labels_;
};

/// Builds a state from "ALL_A", "ALL_B" or an explicit A/B string whose
/// length matches the crossing count.
KauffmanState make_state(const Diagram& diagram, std::string_view selector);

/// The state whose smoothing respects the strand orientations at every
/// crossing; its surface is the Seifert surface of the diagram.
KauffmanState seifert_state(const Diagram& diagram);

/// One band end: the attachment of the band of `band` (a crossing id) to a
/// circle, met while walking that circle.
struct AttachmentEvent {
  int band = -1;
  Resolution label = Resolution::A;
  int other_circle = -1;
  int region = -1;
  int arc = -1; ///< which of the band's two arcs this end is (0 or 1)
};

struct CircleOrbit {
  int id = -1;
  std::vector<int> darts; ///< traversal order, starting at the lowest dart
};

struct Band {
  int id = -1; ///< equal to the crossing id
  Resolution label = Resolution::A;
  std::array<int, 2> circles{-1, -1}; ///< circle at arc 0, circle at arc 1
  int region = -1;
};

struct RegionInfo {
  int id = -1;
  std::vector<int> faces; ///< diagram face ids merged into this region
};

/// The result of applying a state to a diagram: state circles, plane
/// regions, one band per crossing and per-circle attachment sequences.
/// Retains the dart-level structure of the smoothing so that embedded
/// graphs built from it can trace their plane faces. Immutable.
class SmoothedMap {
public:
  int crossing_count() const { return n_; }
  int circle_count() const { return static_cast<int>(circles_.size()); }
  int region_count() const { return static_cast<int>(regions_.size()); }
  int outer_region() const { return outer_region_; }
  int outer_dart() const { return outer_dart_; }
  int diagram_components() const { return diagram_components_; }

  const std::vector<CircleOrbit>& circles() const { return circles_; }
  const std::vector<Band>& bands() const { return bands_; }
  const std::vector<RegionInfo>& regions() const { return regions_; }
  const std::vector<std::vector<AttachmentEvent>>& attachment_sequences() const {
    return attachments_;
  }

  Resolution label(int crossing) const { return labels_[crossing]; }
  int mate(int dart) const { return mate_[dart]; }
  int circle_of_dart(int dart) const { return circle_of_dart_[dart]; }
  int region_of_face(int face) const { return region_of_face_[face]; }
  int region_of_dart(int dart) const { return region_of_face_[face_of_dart_[dart]]; }

  /// Smoothing pairing: the dart joined to `dart` by its resolution arc.
  int arc_mate(int dart) const;
  /// True when the arc at `dart` spans the corner counterclockwise from it,
  /// i.e. the arc is (dart, next_ccw(dart)).
  bool arc_corner_start(int dart) const;
  /// Index (0 or 1) of the arc of its crossing that `dart` lies on. Arc 0 is
  /// the one containing the lower corner-start slot.
  int arc_index(int dart) const;

  std::string to_json_string() const;

private:
  friend SmoothedMap smooth(const Diagram&, const KauffmanState&);

  int n_ = 0;
  std::vector<int> mate_;
  std::vector<Resolution> labels_;
  std::vector<CircleOrbit> circles_;
  std::vector<int> circle_of_dart_;
  std::vector<Band> bands_;
  std::vector<RegionInfo> regions_;
  std::vector<std::vector<AttachmentEvent>> attachments_;
  std::vector<int> face_of_dart_;
  std::vector<int> region_of_face_;
  int outer_region_ = -1;
  int outer_dart_ = -1;
  int diagram_components_ = 0;
};

SmoothedMap smooth(const Diagram& diagram, const KauffmanState& state);

struct SurfaceInvariants {
  int euler_characteristic = 0; ///< circles - crossings
  int first_betti = 0;          ///< bands - circles + graph components
  int boundary_components = 0;  ///< components of the surface boundary
  bool orientable = false;      ///< state graph bipartite
};

SurfaceInvariants surface_invariants(const SmoothedMap& smoothed);

} // namespace kstate
