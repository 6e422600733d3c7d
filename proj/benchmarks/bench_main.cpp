#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "kstate/alexander.hpp"
#include "kstate/decide.hpp"
#include "kstate/homology.hpp"

using namespace kstate;

namespace {

// The standard 2-strand twist pattern with n crossings ((2,n) torus link).
std::string twist_pd(int n) {
  std::ostringstream out;
  out << "X[1,2,3,4]";
  for (int i = 1; i + 1 < n; ++i)
    out << " X[" << 2 * i + 2 << ',' << 2 * i + 1 << ',' << 2 * i + 3 << ',' << 2 * i + 4 << ']';
  out << " X[" << 2 * n << ',' << 2 * n - 1 << ",2,1]";
  return out.str();
}

const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

void ParseTwist(benchmark::State& state) {
  const std::string pd = twist_pd(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_pd(pd));
  }
}
BENCHMARK(ParseTwist)->Arg(8)->Arg(32)->Arg(128);

void SmoothAndGraph(benchmark::State& state) {
  const Diagram d = parse_pd(twist_pd(static_cast<int>(state.range(0))));
  const KauffmanState s = KauffmanState::all_b(d.crossing_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(smooth(d, s)));
  }
}
BENCHMARK(SmoothAndGraph)->Arg(8)->Arg(32)->Arg(128);

void DecideFiber(benchmark::State& state) {
  const Diagram d = parse_pd(twist_pd(static_cast<int>(state.range(0))));
  const KauffmanState s = seifert_state(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_fiber(d, s));
  }
}
BENCHMARK(DecideFiber)->Arg(8)->Arg(32)->Arg(128);

void CensusTwist(benchmark::State& state) {
  const Diagram d = parse_pd(twist_pd(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(d, 20, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CensusTwist)->Arg(8)->Arg(10)->Arg(12);

void AlexanderFigureEight(benchmark::State& state) {
  const Diagram d = parse_pd(kFigureEight);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_polynomial(d));
  }
}
BENCHMARK(AlexanderFigureEight);

void AlexanderTwist(benchmark::State& state) {
  const Diagram d = parse_pd(twist_pd(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_polynomial(d));
  }
}
BENCHMARK(AlexanderTwist)->Arg(9)->Arg(15)->Arg(21);

void HomologyNecklace(benchmark::State& state) {
  const Diagram d = parse_pd(twist_pd(static_cast<int>(state.range(0))));
  const ReducedGraph reduced = reduce(build_graph(smooth(d, KauffmanState::all_a(d.crossing_count()))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homology_matrix(reduced));
  }
}
BENCHMARK(HomologyNecklace)->Arg(8)->Arg(16);

void SharpFamilyDeterminant(benchmark::State& state) {
  const IntMatrix m = sharp_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(m));
  }
}
BENCHMARK(SharpFamilyDeterminant)->Arg(12)->Arg(48)->Arg(96);

} // namespace

BENCHMARK_MAIN();
