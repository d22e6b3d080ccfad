#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace lcx;
using namespace lcx::test;
using nlohmann::json;

namespace {

Vector expectedIntegral(const Problem& p) {
  std::vector<Scalar> data;
  for (const auto& e : p.expected["integral"]) {
    data.push_back(e.is_array() ? Scalar(e[0].get<double>(), e[1].get<double>()) : Scalar(e.get<double>()));
  }
  return Vector(p.space, data);
}

double maxDiff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("scenarios-oracle") {

TEST_CASE("the catalog has the built-in problems and each parses") {
  const auto all = listScenarios();
  CHECK(all.size() >= 5);
  std::set<std::string> names;
  for (const auto& spec : all) {
    const Problem p = parseProblem(spec);
    names.insert(p.name);
    CHECK(parseProblem(p.spec).spec == p.spec);
    CHECK(parseProblem(json::parse(p.spec.dump())).spec == p.spec);
    REQUIRE(p.expected.contains("source"));
    CHECK(p.expected["source"].is_string());
    CHECK(findScenario(p.name).has_value());
  }
  CHECK(names.size() == all.size());
  for (const char* n : {"constant-prob", "cancellation", "circle", "frechet-gauss", "sequence-space", "simple-replay"}) {
    CHECK(names.count(n) == 1);
  }
  CHECK_FALSE(findScenario("nope").has_value());
}

TEST_CASE("scenario files match the built-in catalog") {
  for (const auto& spec : listScenarios()) {
    const std::string name = spec["name"];
    std::ifstream in(std::string(LCX_SCENARIO_DIR) + "/" + name + ".json");
    REQUIRE(in.good());
    const Problem from_file = loadProblem(std::string(LCX_SCENARIO_DIR) + "/" + name + ".json");
    CHECK(from_file.spec == parseProblem(spec).spec);
  }
}

TEST_CASE("expected values agree with independent closed forms") {
  const Problem circle = parseProblem(*findScenario("circle"));
  CHECK(maxDiff(expectedIntegral(circle), vec(circle.space, {0.0, 2.0})) == 0.0);

  const Problem seq = parseProblem(*findScenario("sequence-space"));
  const Vector e = expectedIntegral(seq);
  REQUIRE(e.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const double m = midpoint([i](double t) { return std::pow(t, static_cast<double>(i + 1)); }, 0.0, 1.0, 1u << 16);
    CHECK(std::abs(e[i].real() - m) <= 1e-8);
  }

  const Problem fr = parseProblem(*findScenario("frechet-gauss"));
  const Vector g = expectedIntegral(fr);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double s = fr.space->gridPoint(i);
    const double m = midpoint([s](double t) { return std::exp(-(s - t) * (s - t)); }, 0.0, 1.0, 1u << 16);
    CHECK(std::abs(g[i].real() - m) <= 1e-8);
  }
}

TEST_CASE("oracle on the circle") {
  const Problem p = parseProblem(*findScenario("circle"));
  const Vector o = oracleIntegrate(p.integrand, p.measure, 20);
  CHECK(std::abs(o[0]) <= 1e-9);
  CHECK(std::abs(o[1] - 2.0) <= 1e-9);
}

TEST_CASE("oracle is self-consistent across resolutions") {
  for (const auto& spec : listScenarios()) {
    const Problem p = parseProblem(spec);
    const Vector a = oracleIntegrate(p.integrand, p.measure, 18);
    const Vector b = oracleIntegrate(p.integrand, p.measure, 19);
    CHECK(maxDiff(a, b) <= 1e-8);
    if (p.measure.isDiscrete()) CHECK(a == b);
  }
}

TEST_CASE("oracle sums atoms exactly") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.25, 0.0, 0.75});
  const auto f = tableFn(V, {vec(V, {1.0, Scalar(0, 2)}), vec(V, {1e300, 1.0}), vec(V, {-3.0, 0.5})});
  const Vector o = oracleIntegrate(f, X);
  CHECK(o == vec(V, {0.25 - 2.25, Scalar(0.375, 0.5)}));
}

TEST_CASE("engine matches the oracle on every built-in") {
  for (const auto& spec : listScenarios()) {
    const Problem p = parseProblem(spec);
    CAPTURE(p.name);
    const IntegralResult r = bochnerIntegrate(p.integrand, p.measure, p.family, p.integrationOptions());
    REQUIRE((r.status == Status::kConverged));
    const Vector o = oracleIntegrate(p.integrand, p.measure, 20);
    if (p.measure.isDiscrete()) {
      CHECK(r.integral == o);
      CHECK(r.integral == expectedIntegral(p));
    } else {
      CHECK(maxDiff(r.integral, o) <= 1e-6);
      CHECK(maxDiff(r.integral, expectedIntegral(p)) <= 1e-6);
    }
  }
}

TEST_CASE("simple-replay reproduces the exact simple integral") {
  const Problem p = parseProblem(*findScenario("simple-replay"));
  const auto& V = p.space;
  const Vector u = vec(V, {2.0, -1.0});
  const Vector w = vec(V, {Scalar(0.5, 0.5), 4.0});
  const SimpleFn s(p.measure, V, {{MeasurableSet::atoms({0, 2}), u}, {MeasurableSet::atoms({1}), w}});
  const Vector exact = integrateSimple(s, p.measure);
  CHECK(exact == expectedIntegral(p));
  const IntegralResult r = bochnerIntegrate(p.integrand, p.measure, p.family, p.integrationOptions());
  CHECK(r.integral == exact);
}

TEST_CASE("random discrete problems respect their size bounds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const json spec = randomDiscreteProblem(seed);
    CHECK(spec == randomDiscreteProblem(seed));
    const Problem p = parseProblem(spec);
    CHECK(p.measure.atoms().size() <= 20);
    CHECK(p.family.size() <= 4);
    CHECK(p.space->dim() <= 8);
    CHECK(p.measure.totalMass() == 1.0);
  }
  CHECK(randomDiscreteProblem(1) != randomDiscreteProblem(2));
}

TEST_CASE("random discrete problems integrate exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Problem p = parseProblem(randomDiscreteProblem(seed));
    const IntegralResult r = bochnerIntegrate(p.integrand, p.measure, p.family, p.integrationOptions());
    REQUIRE((r.status == Status::kConverged));
    CHECK(r.integral == oracleIntegrate(p.integrand, p.measure));
    CHECK(r.certified());
  }
}

TEST_CASE("spec errors name the offending field") {
  json spec = *findScenario("constant-prob");
  spec["measure"]["atoms"][1]["weight"] = -1.0;
  try {
    (void)parseProblem(spec);
    FAIL("expected a spec error");
  } catch (const SpecError& e) {
    CHECK(e.field() == "measure.atoms[1].weight");
    CHECK(std::string(e.what()).find("weights ≥ 0") != std::string::npos);
  }

  json missing = *findScenario("circle");
  missing.erase("integrand");
  CHECK_THROWS_AS(parseProblem(missing), SpecError);

  json bad_index = *findScenario("cancellation");
  bad_index["seminorms"][0]["indices"] = {0, 7};
  try {
    (void)parseProblem(bad_index);
    FAIL("expected a spec error");
  } catch (const SpecError& e) {
    CHECK(e.field().rfind("seminorms[0]", 0) == 0);
  }

  json no_source = *findScenario("cancellation");
  no_source["expected"].erase("source");
  try {
    (void)parseProblem(no_source);
    FAIL("expected a spec error");
  } catch (const SpecError& e) {
    CHECK(e.field() == "expected.source");
  }

  json not_separating = *findScenario("cancellation");
  not_separating["seminorms"] = json::array({{{"name", "p"}, {"kind", "sup"}, {"indices", {0}}}});
  CHECK_THROWS_AS(parseProblem(not_separating), SpecError);
}

}  // TEST_SUITE
