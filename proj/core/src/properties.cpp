#include "lcx/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "lcx/approximant.hpp"
#include "lcx/checks.hpp"
#include "lcx/error.hpp"
#include "lcx/problem.hpp"
#include "lcx/quadrature.hpp"
#include "lcx/report.hpp"
#include "lcx/scenarios.hpp"

namespace lcx {
namespace {

using nlohmann::json;
using Check = std::function<std::optional<std::string>(std::uint64_t)>;

double relSlack(double scale) { return 1e-12 * std::max(1.0, scale); }

std::optional<std::string> seminormAxioms(std::uint64_t seed) {
  const Problem pr = parseProblem(randomDiscreteProblem(seed));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(-4.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector u = randomVector(rng, pr.space);
    const Vector v = randomVector(rng, pr.space);
    const Scalar l(lam(rng), lam(rng));
    for (const auto& p : pr.family.members()) {
      const double pv = p(v);
      if (pv < 0.0) return p.name() + ": negative value";
      if (std::abs(p(l * v) - std::abs(l) * pv) > relSlack(std::abs(l) * pv)) {
        return p.name() + ": homogeneity";
      }
      const double pu = p(u);
      if (p(u + v) > pu + pv + relSlack(pu + pv)) return p.name() + ": subadditivity";
    }
    for (std::size_t n = 1; n < pr.family.size(); ++n) {
      if (pr.family.chain(n)(v) > pr.family.chain(n + 1)(v)) return "chain not monotone";
    }
    if (!v.isZero() && !(pr.family.top()(v) > 0.0)) return "top seminorm vanishes on v != 0";
  }
  return std::nullopt;
}

std::optional<std::string> mapLaws(std::uint64_t seed) {
  const Problem pr = parseProblem(randomDiscreteProblem(seed));
  std::mt19937_64 rng(seed);
  for (const auto& m : pr.maps) {
    for (const auto& q : m.target_family.members()) {
      if (!checkWitness(m.map, q, seed).holds) return m.map.name() + ": witness fails for " + q.name();
    }
    for (int trial = 0; trial < 20; ++trial) {
      const Vector u = randomVector(rng, pr.space);
      const Vector v = randomVector(rng, pr.space);
      const Vector lhs = m.map(u + v);
      const Vector rhs = m.map(u) + m.map(v);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (std::abs(lhs[i] - rhs[i]) > relSlack(std::abs(rhs[i]))) return m.map.name() + ": additivity";
      }
    }
  }
  return std::nullopt;
}

struct SimpleCase {
  Problem problem;
  SimpleFn s;
  SimpleFn t;
};

SimpleCase simpleCase(std::uint64_t seed) {
  Problem pr = parseProblem(randomDiscreteProblem(seed));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  SimpleFn s = randomSimpleFn(rng, pr.measure, pr.space);
  SimpleFn t = randomSimpleFn(rng, pr.measure, pr.space);
  return SimpleCase{std::move(pr), std::move(s), std::move(t)};
}

std::optional<std::string> cauchyEstimate(std::uint64_t seed) {
  const auto c = simpleCase(seed);
  const MeasureSpace& X = c.problem.measure;
  const Vector diff = integrateSimple(c.s, X) - integrateSimple(c.t, X);
  const SimpleFn d = subtractSimple(c.s, c.t, X);
  for (std::size_t n = 1; n <= c.problem.family.size(); ++n) {
    const Seminorm& q = c.problem.family.chain(n);
    if (q(diff) > integrateSeminorm(q, d, X) + 1e-10) return "violated for " + q.name();
  }
  return std::nullopt;
}

std::optional<std::string> simpleAlgebra(std::uint64_t seed) {
  const auto c = simpleCase(seed);
  const MeasureSpace& X = c.problem.measure;
  const SimpleFn d = subtractSimple(c.s, c.t, X);
  for (std::size_t i = 0; i < X.atoms().size(); ++i) {
    const Point pt{i, X.atoms()[i].position};
    if (!(evalSimple(d, pt) == evalSimple(c.s, pt) - evalSimple(c.t, pt))) {
      return "subtractSimple differs at atom " + std::to_string(i);
    }
  }
  const Scalar a(0.75, -0.5);
  const Scalar b(-2.0, 0.25);
  const Vector lhs = integrateSimple(combineSimple(a, c.s, b, c.t, X), X);
  const Vector rhs = a * integrateSimple(c.s, X) + b * integrateSimple(c.t, X);
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (std::abs(lhs[k] - rhs[k]) > relSlack(std::abs(rhs[k]))) return "integral not linear";
  }
  const double p_int = c.problem.family.top()(integrateSimple(c.s, X));
  if (p_int > integrateSeminorm(c.problem.family.top(), c.s, X) + 1e-10) {
    return "seminorm estimate fails on a simple function";
  }
  return std::nullopt;
}

std::optional<std::string> measureLaws(std::uint64_t seed) {
  const Problem pr = parseProblem(randomDiscreteProblem(seed));
  const MeasureSpace& X = pr.measure;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < X.atoms().size(); ++i) {
    switch (rng() % 3) {
      case 0: a.push_back(i); break;
      case 1: b.push_back(i); break;
      default: break;
    }
  }
  const auto A = MeasurableSet::atoms(a);
  const auto B = MeasurableSet::atoms(b);
  if (measureOf(X, unite(A, B)) != measureOf(X, A) + measureOf(X, B)) return "not additive";

  std::vector<Scalar> g(X.atoms().size());
  std::vector<Scalar> h(X.atoms().size());
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = u(rng);
    h[i] = g[i] + u(rng);
  }
  auto fn = [](const std::vector<Scalar>& table) {
    return [&table](const Point& pt) { return table[pt.index]; };
  };
  const Scalar ig = integrateScalar(fn(g), X).value;
  const Scalar ih = integrateScalar(fn(h), X).value;
  const Scalar lin = integrateScalar(
      [&](const Point& pt) { return 3.0 * g[pt.index] - 0.5 * h[pt.index]; }, X).value;
  if (std::abs(lin - (3.0 * ig - 0.5 * ih)) > 1e-10 * std::max(1.0, std::abs(lin))) return "not linear";
  if (ig.real() > ih.real() + 1e-12) return "not monotone";

  std::vector<Scalar> g2 = g;
  for (std::size_t i = 0; i < g2.size(); ++i) {
    if (X.isNullAtom(i)) g2[i] = 1e12;
  }
  if (integrateScalar(fn(g2), X).value != ig) return "null atoms change the integral";
  return std::nullopt;
}

std::optional<std::string> residualDecrease(std::uint64_t seed) {
  const Problem pr = parseProblem(randomDiscreteProblem(seed));
  for (const double eps : {1.0, 0.1, 0.01}) {
    for (const auto& p : pr.family.members()) {
      const Approximation a = approximate(pr.integrand, pr.measure, p, eps);
      if (!(a.residual < eps)) return p.name() + ": residual not below eps";
      if (a.step.max_bound_ratio > 2.0 * (1.0 + 1e-12)) return p.name() + ": 2 p(f) bound";
      if (!a.step.partition.pairwise_disjoint || !a.step.partition.union_equal) {
        return p.name() + ": D-sets do not partition";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> engineRun(std::uint64_t seed) {
  const Problem pr = parseProblem(randomDiscreteProblem(seed));
  RunOptions ro;
  ro.verify = true;
  ro.seed = seed;
  const RunOutcome out = runProblem(pr, ro);
  if (out.exit_code != kExitOk) return "exit code " + std::to_string(out.exit_code);
  if (!out.report["verification"]["exact"].get<bool>()) return "integral differs from the oracle";
  return std::nullopt;
}

std::optional<std::string> nullSets(std::uint64_t seed) {
  const json spec = randomDiscreteProblem(seed);
  const RunOutcome a = runProblem(parseProblem(spec));
  const RunOutcome b = runProblem(parseProblem(perturbNullAtoms(spec, seed)));
  const double d = maxReportDifference(a.report, b.report);
  if (!(d <= 1e-9)) return "report changed by " + std::to_string(d);
  return std::nullopt;
}

}  // namespace

Vector randomVector(std::mt19937_64& rng, const SpacePtr& V, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Scalar> data(V->dim());
  for (auto& x : data) {
    const double re = u(rng);
    x = Scalar(re, u(rng));
  }
  return Vector(V, std::move(data));
}

SimpleFn randomSimpleFn(std::mt19937_64& rng, const MeasureSpace& X, const SpacePtr& V,
                        std::size_t max_pieces) {
  if (!X.isDiscrete()) throw Error(ErrorCode::kInvalidArgument, "randomSimpleFn needs atoms");
  const std::size_t k = 1 + rng() % max_pieces;
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < X.atoms().size(); ++i) {
    const std::size_t j = rng() % (k + 1);
    if (j < k) members[j].push_back(i);
  }
  std::vector<Piece> pieces;
  for (auto& m : members) {
    pieces.push_back(Piece{MeasurableSet::atoms(std::move(m)), randomVector(rng, V, 4.0)});
  }
  return SimpleFn(X, V, std::move(pieces));
}

double maxReportDifference(const json& a, const json& b) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>();
    const double y = b.get<double>();
    if (x == y) return 0.0;
    return std::abs(x - y);
  }
  if (a.type() != b.type()) return kInf;
  if (a.is_array()) {
    if (a.size() != b.size()) return kInf;
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, maxReportDifference(a[i], b[i]));
    return d;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) return kInf;
    double d = 0.0;
    for (const auto& [key, value] : a.items()) {
      if (!b.contains(key)) return kInf;
      d = std::max(d, maxReportDifference(value, b[key]));
    }
    return d;
  }
  return a == b ? 0.0 : kInf;
}

json perturbNullAtoms(const json& spec, std::uint64_t seed) {
  json out = spec;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  const auto& atoms = spec.at("measure").at("atoms");
  auto& values = out.at("integrand").at("params").at("values");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].at("weight").get<double>() != 0.0) continue;
    for (auto& z : values[i]) z = json::array({u(rng), u(rng)});
  }
  return out;
}

std::vector<PropertyResult> runPropertySuite(std::size_t cases, std::uint64_t seed) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"seminorm-axioms", seminormAxioms},   {"map-laws", mapLaws},
      {"cauchy-estimate", cauchyEstimate},   {"simple-algebra", simpleAlgebra},
      {"measure-laws", measureLaws},         {"residual-decrease", residualDecrease},
      {"engine-vs-oracle", engineRun},       {"null-set-insensitivity", nullSets},
  };
  std::vector<PropertyResult> results;
  for (const auto& [name, check] : checks) {
    PropertyResult r;
    r.name = name;
    for (std::size_t i = 0; i < cases; ++i) {
      const std::uint64_t s = seed + i;
      std::optional<std::string> failure;
      try {
        failure = check(s);
      } catch (const std::exception& e) {
        failure = std::string("threw: ") + e.what();
      }
      ++r.cases;
      if (failure) {
        if (r.failures == 0) r.first_failure = "seed " + std::to_string(s) + ": " + *failure;
        ++r.failures;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace lcx
