#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>

#include "kstate/state.hpp"

using namespace kstate;

namespace {
const char* kKink = "X[1,1,2,2]";
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
const char* kPoke = "X[1,4,2,3] X[2,4,1,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Independent circle-count oracle: orbits of darts under edge and arc pairing.
int circle_count_oracle(const Diagram& d, const KauffmanState& s) {
  const SmoothedMap m = smooth(d, s);
  std::vector<int> parent(d.dart_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    unite(dart, d.mate(dart));
    unite(dart, m.arc_mate(dart));
  }
  int orbits = 0;
  for (int dart = 0; dart < d.dart_count(); ++dart)
    if (find(dart) == dart) ++orbits;
  return orbits;
}

KauffmanState state_of_index(int n, unsigned index) {
  std::vector<Resolution> labels(n);
  for (int c = 0; c < n; ++c)
    labels[c] = (index >> (n - 1 - c)) & 1 ? Resolution::B : Resolution::A;
  return KauffmanState(std::move(labels));
}
} // namespace

TEST_CASE("make_state") {
  const Diagram trefoil = parse_pd(kTrefoil);
  CHECK(make_state(trefoil, "AAA").str() == "AAA");
  CHECK(make_state(trefoil, "ALL_B").str() == "BBB");
  CHECK(kind_of([&] { make_state(trefoil, "AB"); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] { make_state(trefoil, "AXB"); }) == ErrorKind::BadCharacter);
}

TEST_CASE("seifert state respects orientation at every crossing") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight}) {
    const Diagram d = parse_pd(pd);
    const KauffmanState s = seifert_state(d);
    const SmoothedMap m = smooth(d, s);
    for (int dart = 0; dart < d.dart_count(); ++dart) {
      // Every resolution arc joins a head to a tail.
      CHECK(d.incoming(dart) != d.incoming(m.arc_mate(dart)));
    }
  }
}

TEST_CASE("seifert circle counts") {
  // kink: only one smoothing respects orientation and it splits the loop
  CHECK(smooth(parse_pd(kKink), seifert_state(parse_pd(kKink))).circle_count() == 2);
  // standard trefoil is a closed positive braid: uniform state
  const Diagram trefoil = parse_pd(kTrefoil);
  const KauffmanState s = seifert_state(trefoil);
  CHECK((s.str() == "AAA" || s.str() == "BBB"));
  CHECK(smooth(trefoil, s).circle_count() == 2);
  // figure-eight standard diagram has 3 Seifert circles
  const Diagram fig8 = parse_pd(kFigureEight);
  CHECK(smooth(fig8, seifert_state(fig8)).circle_count() == 3);
}

TEST_CASE("kink smoothings") {
  const Diagram kink = parse_pd(kKink);
  const SmoothedMap a = smooth(kink, KauffmanState::all_a(1));
  const SmoothedMap b = smooth(kink, KauffmanState::all_b(1));
  CHECK(a.circle_count() == 2);
  CHECK(b.circle_count() == 1);
  CHECK(a.region_count() == 3); // two side-by-side circles
  CHECK(b.region_count() == 2); // one circle
}

TEST_CASE("hopf ALL_A gives two parallel equal-label bands") {
  const Diagram hopf = parse_pd(kHopf);
  const SmoothedMap m = smooth(hopf, KauffmanState::all_a(2));
  CHECK(m.circle_count() == 2);
  REQUIRE(m.bands().size() == 2);
  const Band& b0 = m.bands()[0];
  const Band& b1 = m.bands()[1];
  CHECK(b0.label == b1.label);
  CHECK(std::minmax(b0.circles[0], b0.circles[1]) == std::minmax(b1.circles[0], b1.circles[1]));
  CHECK(b0.region == b1.region);
}

TEST_CASE("poke Seifert state is the mixed bigon") {
  const Diagram poke = parse_pd(kPoke);
  const KauffmanState s = seifert_state(poke);
  const SmoothedMap m = smooth(poke, s);
  CHECK(m.circle_count() == 2);
  CHECK(m.bands()[0].label != m.bands()[1].label);
  CHECK(m.bands()[0].region == m.bands()[1].region);
}

TEST_CASE("euler characteristic over all states") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight}) {
    const Diagram d = parse_pd(pd);
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const KauffmanState s = state_of_index(n, index);
      const SmoothedMap m = smooth(d, s);
      CHECK(m.circle_count() == circle_count_oracle(d, s));
      const SurfaceInvariants inv = surface_invariants(m);
      CHECK(inv.euler_characteristic == m.circle_count() - n);
      CHECK(inv.boundary_components == d.component_count());
      CHECK(inv.first_betti >= 0);
    }
  }
}

TEST_CASE("label swap duality with the mirror diagram") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight}) {
    const Diagram d = parse_pd(pd);
    const Diagram mirror = d.mirrored();
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const KauffmanState s = state_of_index(n, index);
      const SmoothedMap direct = smooth(d, s);
      const SmoothedMap swapped = smooth(mirror, s.complemented());
      CHECK(direct.circle_count() == swapped.circle_count());
      CHECK(direct.region_count() == swapped.region_count());
    }
  }
}

TEST_CASE("every band attaches exactly twice") {
  for (const char* pd : {kTrefoil, kHopf, kPoke, kFigureEight}) {
    const Diagram d = parse_pd(pd);
    const int n = d.crossing_count();
    for (unsigned index = 0; index < (1u << n); ++index) {
      const SmoothedMap m = smooth(d, state_of_index(n, index));
      std::map<int, int> count;
      for (const auto& events : m.attachment_sequences())
        for (const AttachmentEvent& e : events) ++count[e.band];
      for (int c = 0; c < n; ++c) CHECK(count[c] == 2);
      // bands' regions touch both of their circles
      for (const Band& band : m.bands()) {
        for (int side = 0; side < 2; ++side) {
          bool adjacent = false;
          for (int dart : m.circles()[band.circles[side]].darts)
            if (m.region_of_dart(dart) == band.region) adjacent = true;
          CHECK(adjacent);
        }
      }
    }
  }
}

TEST_CASE("surface invariants of named states") {
  const Diagram kink = parse_pd(kKink);
  const SurfaceInvariants disk = surface_invariants(smooth(kink, KauffmanState::all_a(1)));
  CHECK(disk.euler_characteristic == 1);
  CHECK(disk.first_betti == 0);
  CHECK(disk.orientable);

  const Diagram hopf = parse_pd(kHopf);
  const SurfaceInvariants band = surface_invariants(smooth(hopf, KauffmanState::all_a(2)));
  CHECK(band.euler_characteristic == 0);
  CHECK(band.first_betti == 1);
  CHECK(band.orientable);
  CHECK(band.boundary_components == 2);

  // mixed state of the Hopf diagram: one circle with two self-loops
  const SurfaceInvariants loops =
      surface_invariants(smooth(hopf, KauffmanState::from_string("AB", 2)));
  CHECK(loops.euler_characteristic == -1);
  CHECK_FALSE(loops.orientable);
}

TEST_CASE("seifert states are orientable") {
  for (const char* pd : {kKink, kTrefoil, kHopf, kPoke, kFigureEight}) {
    const Diagram d = parse_pd(pd);
    CHECK(surface_invariants(smooth(d, seifert_state(d))).orientable);
  }
}

TEST_CASE("smoothed map json mentions every piece") {
  const SmoothedMap m = smooth(parse_pd(kHopf), KauffmanState::all_a(2));
  const std::string json = m.to_json_string();
  CHECK(json.find("\"circles\"") != std::string::npos);
  CHECK(json.find("\"regions\"") != std::string::npos);
  CHECK(json.find("\"bands\"") != std::string::npos);
  CHECK(json.find("\"attachments\"") != std::string::npos);
}
