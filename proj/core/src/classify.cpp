#include "kstate/classify.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace kstate {

namespace {

std::array<int, 2> circle_pair(const SmoothedMap& m, int band) {
  auto circles = m.bands()[band].circles;
  if (circles[0] > circles[1]) std::swap(circles[0], circles[1]);
  return circles;
}

bool pair_violates(const SmoothedMap& m, const AttachmentEvent& first,
                   const AttachmentEvent& second) {
  if (first.label != second.label) return false;
  return circle_pair(m, first.band) != circle_pair(m, second.band);
}

} // namespace

std::pair<bool, std::optional<ClassificationWitness>> is_alternating_state(
    const SmoothedMap& smoothed, AlternatingRule rule) {
  const auto& sequences = smoothed.attachment_sequences();
  for (int circle = 0; circle < smoothed.circle_count(); ++circle) {
    const auto& events = sequences[circle];
    auto violation = [&](const AttachmentEvent& a, const AttachmentEvent& b) {
      ClassificationWitness witness;
      witness.kind = WitnessKind::AlternatingViolation;
      witness.circle = circle;
      witness.region = a.region;
      witness.bands = {a.band, b.band};
      return std::make_pair(false, std::optional<ClassificationWitness>(witness));
    };
    if (rule == AlternatingRule::GloballyConsecutive) {
      const size_t len = events.size();
      if (len < 2) continue;
      const size_t pairs = len == 2 ? 1 : len;
      for (size_t i = 0; i < pairs; ++i) {
        const AttachmentEvent& a = events[i];
        const AttachmentEvent& b = events[(i + 1) % len];
        if (a.region == b.region && pair_violates(smoothed, a, b)) return violation(a, b);
      }
      continue;
    }
    // Per-region subsequences, regions visited in ascending id order.
    std::map<int, std::vector<const AttachmentEvent*>> by_region;
    for (const AttachmentEvent& event : events) by_region[event.region].push_back(&event);
    for (auto& [region, sub] : by_region) {
      const size_t len = sub.size();
      if (len < 2) continue;
      const size_t pairs = len == 2 ? 1 : len; // a 2-event region gives one pair
      for (size_t i = 0; i < pairs; ++i) {
        const AttachmentEvent& a = *sub[i];
        const AttachmentEvent& b = *sub[(i + 1) % len];
        if (pair_violates(smoothed, a, b)) return violation(a, b);
      }
    }
  }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<ClassificationWitness>> is_homogeneous_state(
    const SmoothedMap& smoothed) {
  std::map<int, int> first_band_in_region;
  for (const Band& band : smoothed.bands()) {
    auto [it, inserted] = first_band_in_region.try_emplace(band.region, band.id);
    if (!inserted && smoothed.bands()[it->second].label != band.label) {
      ClassificationWitness witness;
      witness.kind = WitnessKind::HomogeneityViolation;
      witness.region = band.region;
      witness.bands = {it->second, band.id};
      return {false, witness};
    }
  }
  return {true, std::nullopt};
}

bool homogeneous_by_blocks(const StateGraph& graph) {
  if (!graph.connected())
    fail(ErrorKind::Disconnected, "block homogeneity needs a connected graph");
  for (const auto& block : block_decomposition(graph).blocks) {
    const Resolution label = graph.edge_by_id(block.front()).label;
    for (int edge : block)
      if (graph.edge_by_id(edge).label != label) return false;
  }
  return true;
}

bool check_witness(const SmoothedMap& smoothed, const ClassificationWitness& witness) {
  if (witness.kind == WitnessKind::HomogeneityViolation) {
    const Band& a = smoothed.bands()[witness.bands[0]];
    const Band& b = smoothed.bands()[witness.bands[1]];
    return a.region == witness.region && b.region == witness.region && a.label != b.label;
  }
  // Alternating: the two bands must appear as consecutive same-region events
  // on the witness circle, share a label and join different circle pairs.
  const auto& events = smoothed.attachment_sequences()[witness.circle];
  std::vector<const AttachmentEvent*> sub;
  for (const AttachmentEvent& event : events)
    if (event.region == witness.region) sub.push_back(&event);
  const size_t len = sub.size();
  for (size_t i = 0; i < len; ++i) {
    const AttachmentEvent& a = *sub[i];
    const AttachmentEvent& b = *sub[(i + 1) % len];
    if (((a.band == witness.bands[0] && b.band == witness.bands[1]) ||
         (a.band == witness.bands[1] && b.band == witness.bands[0])) &&
        pair_violates(smoothed, a, b))
      return true;
  }
  return false;
}

std::string classification_json(const SmoothedMap& smoothed, AlternatingRule rule) {
  auto [alternating, alt_witness] = is_alternating_state(smoothed, rule);
  auto [homogeneous, hom_witness] = is_homogeneous_state(smoothed);
  nlohmann::json j;
  j["alternating"] = alternating;
  j["homogeneous"] = homogeneous;
  j["witnesses"] = nlohmann::json::array();
  auto push = [&](const ClassificationWitness& w) {
    nlohmann::json jw;
    jw["kind"] =
        w.kind == WitnessKind::AlternatingViolation ? "ALTERNATING_VIOLATION" : "HOMOGENEITY_VIOLATION";
    if (w.circle >= 0) jw["circle"] = w.circle;
    jw["region"] = w.region;
    jw["bands"] = {w.bands[0], w.bands[1]};
    j["witnesses"].push_back(std::move(jw));
  };
  if (alt_witness) push(*alt_witness);
  if (hom_witness) push(*hom_witness);
  return j.dump();
}

} // namespace kstate
