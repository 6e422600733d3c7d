#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstate/classify.hpp"

using namespace kstate;

namespace {
const char* kKink = "X[1,1,2,2]";
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
const char* kPoke = "X[1,4,2,3] X[2,4,1,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kTwoKinks = "X[1,1,2,4] X[2,3,3,4]";

SmoothedMap smoothed_of(const char* pd, const std::string& state) {
  const Diagram d = parse_pd(pd);
  return smooth(d, make_state(d, state));
}

SmoothedMap seifert_smoothed(const char* pd) {
  const Diagram d = parse_pd(pd);
  return smooth(d, seifert_state(d));
}

KauffmanState state_of_index(int n, unsigned index) {
  std::vector<Resolution> labels(n);
  for (int c = 0; c < n; ++c)
    labels[c] = (index >> (n - 1 - c)) & 1 ? Resolution::B : Resolution::A;
  return KauffmanState(std::move(labels));
}
} // namespace

TEST_CASE("figure-eight seifert state is alternating and homogeneous") {
  const SmoothedMap m = seifert_smoothed(kFigureEight);
  CHECK(is_alternating_state(m).first);
  CHECK(is_homogeneous_state(m).first);
}

TEST_CASE("uniform states are homogeneous") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight, kTwoKinks}) {
    const Diagram d = parse_pd(pd);
    CHECK(is_homogeneous_state(smooth(d, KauffmanState::all_a(d.crossing_count()))).first);
    CHECK(is_homogeneous_state(smooth(d, KauffmanState::all_b(d.crossing_count()))).first);
  }
}

TEST_CASE("poke seifert state: alternating but not homogeneous") {
  const SmoothedMap m = seifert_smoothed(kPoke);
  CHECK(is_alternating_state(m).first);
  const auto [homogeneous, witness] = is_homogeneous_state(m);
  CHECK_FALSE(homogeneous);
  REQUIRE(witness.has_value());
  CHECK(witness->kind == WitnessKind::HomogeneityViolation);
  CHECK(check_witness(m, *witness));
}

TEST_CASE("opposite kinks in one region: blocks uniform, regions mixed") {
  const SmoothedMap m = smoothed_of(kTwoKinks, "AB");
  const auto [homogeneous, witness] = is_homogeneous_state(m);
  CHECK_FALSE(homogeneous);
  REQUIRE(witness.has_value());
  CHECK(check_witness(m, *witness));
  CHECK(homogeneous_by_blocks(build_graph(m))); // single-edge blocks
  CHECK(is_alternating_state(m).first);
}

TEST_CASE("region homogeneity implies block homogeneity") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight, kTwoKinks}) {
    const Diagram d = parse_pd(pd);
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const SmoothedMap m = smooth(d, state_of_index(n, index));
      if (is_homogeneous_state(m).first) CHECK(homogeneous_by_blocks(build_graph(m)));
    }
  }
}

TEST_CASE("per-region violations imply globally-consecutive leniency") {
  // The strict rule constrains a subset of the pairs, so alternating under
  // the default rule implies alternating under the strict one.
  for (const char* pd : {kTrefoil, kHopf, kPoke, kFigureEight, kTwoKinks}) {
    const Diagram d = parse_pd(pd);
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const SmoothedMap m = smooth(d, state_of_index(n, index));
      if (is_alternating_state(m, AlternatingRule::PerRegion).first)
        CHECK(is_alternating_state(m, AlternatingRule::GloballyConsecutive).first);
    }
  }
}

TEST_CASE("alternating witnesses replay") {
  for (const char* pd : {kTrefoil, kHopf, kPoke, kFigureEight, kTwoKinks}) {
    const Diagram d = parse_pd(pd);
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const SmoothedMap m = smooth(d, state_of_index(n, index));
      const auto [alternating, witness] = is_alternating_state(m);
      if (!alternating) {
        REQUIRE(witness.has_value());
        CHECK(check_witness(m, *witness));
      }
      const auto [homogeneous, hom_witness] = is_homogeneous_state(m);
      if (!homogeneous) {
        REQUIRE(hom_witness.has_value());
        CHECK(check_witness(m, *hom_witness));
      }
    }
  }
}

TEST_CASE("classification json") {
  const std::string json = classification_json(seifert_smoothed(kPoke));
  CHECK(json.find("\"alternating\":true") != std::string::npos);
  CHECK(json.find("\"homogeneous\":false") != std::string::npos);
  CHECK(json.find("HOMOGENEITY_VIOLATION") != std::string::npos);
}
