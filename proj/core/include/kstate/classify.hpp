#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kstate/state.hpp"
#include "kstate/stategraph.hpp"

namespace kstate {

enum class WitnessKind { AlternatingViolation, HomogeneityViolation };

/// Evidence of a classification failure, checkable against the SmoothedMap.
struct ClassificationWitness {
  WitnessKind kind = WitnessKind::AlternatingViolation;
  int circle = -1;              ///< circle carrying the offending pair (alternating)
  int region = -1;              ///< region of the violation
  std::array<int, 2> bands{-1, -1}; ///< the one or two offending bands
};

/// How "consecutive attachments in the same region" is read.
/// PerRegion: consecutive within the circle's subsequence of events lying in
/// that region (the reading used by the proofs). GloballyConsecutive:
/// consecutive along the whole circle and incidentally in the same region.
enum class AlternatingRule { PerRegion, GloballyConsecutive };

/// A state is alternating when, per circle, any two consecutive same-region
/// attachments with equal labels join the same pair of circles.
std::pair<bool, std::optional<ClassificationWitness>> is_alternating_state(
    const SmoothedMap& smoothed, AlternatingRule rule = AlternatingRule::PerRegion);

/// A state is homogeneous when all bands in each region carry one label.
std::pair<bool, std::optional<ClassificationWitness>> is_homogeneous_state(
    const SmoothedMap& smoothed);

/// Block-based cross check: every two-connected block of the state graph is
/// uniformly labeled. Implied by region homogeneity; the converse can fail
/// (e.g. two opposite-label kinks facing one region).
bool homogeneous_by_blocks(const StateGraph& graph);

/// Replays a witness against the map; true when it indeed demonstrates the
/// claimed violation.
bool check_witness(const SmoothedMap& smoothed, const ClassificationWitness& witness);

/// JSON report {"alternating":..,"homogeneous":..,"witnesses":[..]}.
std::string classification_json(const SmoothedMap& smoothed,
                                AlternatingRule rule = AlternatingRule::PerRegion);

} // namespace kstate
