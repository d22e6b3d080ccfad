#include <cmath>
#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "lcx/lcx.hpp"

namespace {

using namespace lcx;

void BM_CoverImage(benchmark::State& state) {
  const auto V = Space::coordinates("V", 4);
  std::mt19937_64 rng(5);
  std::vector<Atom> atoms;
  std::vector<Vector> values;
  const auto count = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < count; ++i) {
    atoms.push_back({"x" + std::to_string(i), 1.0, static_cast<double>(i)});
    values.push_back(randomVector(rng, V, 3.0));
  }
  const auto X = MeasureSpace::discrete(atoms);
  const IntegrandFn f("table", {}, V, [values](const Point& pt) { return values[pt.index]; });
  const auto p = Seminorm::weightedSup(V, {0, 1, 2, 3}, {1.0, 1.0, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(coverImage(f, X, p, 16));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CoverImage)->Arg(64)->Arg(512)->Arg(4096);

void BM_IntegrateCircle(benchmark::State& state) {
  const Problem p = parseProblem(*findScenario("circle"));
  IntegrationOptions o = p.integrationOptions();
  o.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bochnerIntegrate(p.integrand, p.measure, p.family, o));
  }
}
BENCHMARK(BM_IntegrateCircle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IntegrateScalar(benchmark::State& state) {
  const auto X = MeasureSpace::interval(0.0, std::numbers::pi, 8);
  QuadratureOptions o;
  o.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  const ScalarFn g = [](const Point& pt) { return Scalar(std::sin(pt.x), std::cos(pt.x)); };
  for (auto _ : state) benchmark::DoNotOptimize(integrateScalar(g, X, o));
}
BENCHMARK(BM_IntegrateScalar)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
