#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace lcx;
using namespace lcx::test;

namespace {

constexpr double kPi = std::numbers::pi;

struct Circle {
  SpacePtr V = coords(2, "R2");
  MeasureSpace X = MeasureSpace::interval(0.0, kPi, 64);
  IntegrandFn f = IntegrandFn::fromCatalog("circle", {}, V, X);
  SeminormFamily family{V, {Seminorm::weightedSup(V, {0}, {1.0}, "p1"),
                            Seminorm::weightedSup(V, {1}, {1.0}, "p2")}};
  IntegrationOptions options() const {
    IntegrationOptions o;
    o.approx_tol = 1e-3;
    return o;
  }
};

IntegrandFn scalarLine(const SpacePtr& V) {
  return IntegrandFn("line", {}, V, [V](const Point& pt) { return Vector(V, {Scalar(pt.x)}); });
}

}  // namespace

TEST_SUITE("bochner") {

TEST_CASE("integral boundedness of a constant on a probability space") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.25, 0.75});
  const Vector v = vec(V, {1.0, Scalar(0, -3)});
  const SeminormFamily fam(V, {supAll(V), Seminorm::weightedL1(V, {0, 1}, {1.0, 1.0}, "l1")});
  const IntegralBound b = isIntegrallyBounded(tableFn(V, {v, v}), X, fam, 1e-9);
  CHECK((b.holds == Tri::kTrue));
  CHECK(b.values == std::vector<double>{3.0, 4.0});
  const IntegralBound z = isIntegrallyBounded(tableFn(V, {Vector::zero(V), Vector::zero(V)}), X, fam, 1e-9);
  CHECK((z.holds == Tri::kTrue));
  CHECK(z.values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("integral boundedness of the circle against a fine-grid oracle") {
  const Circle c;
  const SeminormFamily fam(c.V, {supAll(c.V)});
  const IntegralBound b = isIntegrallyBounded(c.f, c.X, fam, 1e-9);
  CHECK((b.holds == Tri::kTrue));
  const double oracle = midpoint([](double x) { return std::max(std::abs(std::cos(x)), std::abs(std::sin(x))); },
                                 0.0, kPi, 1u << 20);
  CHECK(std::abs(b.values[0] - oracle) <= 1e-6);
  CHECK(std::abs(oracle - 2.0 * std::numbers::sqrt2) <= 1e-9);
}

TEST_CASE("integral boundedness not established under a tiny refinement cap") {
  const auto V = coords(1);
  const auto X = MeasureSpace::interval(0.0, 1.0, 1);
  const IntegrandFn f("spike", {}, V, [V](const Point& pt) { return Vector(V, {1.0 / std::sqrt(pt.x)}); });
  const IntegralBound b = isIntegrallyBounded(f, X, SeminormFamily(V, {supAll(V)}), 1e-12, 3);
  CHECK((b.holds == Tri::kNotEstablished));
}

TEST_CASE("essential boundedness ignores weight-0 atoms") {
  const auto V = coords(1);
  const auto X = atomsWithWeights({0.5, 0.0, 0.5});
  const SeminormFamily fam(V, {supAll(V)});
  const EssentialBound b = isEssentiallyBounded(tableFn(V, {vec(V, {1.0}), vec(V, {1e300}), vec(V, {-2.0})}), X, fam);
  CHECK(b.holds);
  CHECK(b.sup == std::vector<double>{2.0});
}

TEST_CASE("cover of a constant has one center") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.25, 0.25, 0.5});
  const Vector v = vec(V, {1.0, 2.0});
  const CoverNet net = coverImage(tableFn(V, {v, v, v}), X, supAll(V), 7);
  REQUIRE(net.centers.size() == 1);
  CHECK(net.centers[0] == v);
  CHECK(net.radius == doctest::Approx(1.0 / 7.0));
}

TEST_CASE("greedy cover of x on {0, 0.5, 1} at radius 1") {
  const auto V = coords(1);
  std::vector<Atom> atoms = {{"a", 1.0, 0.0}, {"b", 1.0, 0.5}, {"c", 1.0, 1.0}};
  const auto X = MeasureSpace::discrete(atoms);
  const auto p = supAll(V);
  const CoverNet net = coverImage(scalarLine(V), X, p, 1);
  REQUIRE(net.centers.size() == 2);
  CHECK(net.centers[0] == vec(V, {0.0}));
  CHECK(net.centers[1] == vec(V, {1.0}));
  CHECK(net.witnesses[0].index == 0);
  CHECK(net.witnesses[1].index == 2);
  // Exhaustive: every sample lies strictly within radius of some center.
  for (double x : {0.0, 0.5, 1.0}) {
    bool covered = false;
    for (const auto& c : net.centers) covered = covered || p.distance(vec(V, {x}), c) < 1.0;
    CHECK(covered);
  }
}

TEST_CASE("doubling n never decreases the number of centers") {
  std::mt19937_64 rng(31);
  const auto V = coords(3);
  std::vector<double> w(40, 1.0 / 40);
  const auto X = atomsWithWeights(w);
  std::vector<Vector> values;
  for (int i = 0; i < 40; ++i) values.push_back(randomVector(rng, V, 2.0));
  const auto f = tableFn(V, values);
  const auto p = Seminorm::weightedL1(V, {0, 1, 2}, {1.0, 0.5, 0.25});
  std::size_t last = 0;
  for (std::size_t n = 1; n <= 256; n *= 2) {
    const CoverNet net = coverImage(f, X, p, n);
    CHECK(net.centers.size() >= last);
    last = net.centers.size();
    for (const auto& v : values) {
      bool covered = false;
      for (const auto& c : net.centers) covered = covered || p.distance(v, c) < net.radius;
      CHECK(covered);
    }
    for (std::size_t j = 0; j < net.centers.size(); ++j) CHECK(f(net.witnesses[j]) == net.centers[j]);
  }
}

TEST_CASE("cover on an interval samples cell midpoints") {
  const Circle c;
  const CoverNet net = coverImage(c.f, c.X, c.family.top(), 4, 0);
  CHECK(net.centers.size() >= 2);
  const ImageSample sample = sampleImage(c.f, c.X, sampleLevel(c.X, 4, 0));
  CHECK(sample.level == 2);
  CHECK(sample.points.size() == 256);
  for (const auto& v : sample.values) {
    bool covered = false;
    for (const auto& ctr : net.centers) covered = covered || c.family.top().distance(v, ctr) < 0.25;
    CHECK(covered);
  }
}

TEST_CASE("level sets by direct enumeration") {
  const auto V = coords(1);
  const auto X = atomsWithWeights({1.0, 1.0});
  const auto f = tableFn(V, {vec(V, {0.05}), vec(V, {1.0})});
  const std::vector<Vector> centers = {vec(V, {1.0})};
  const auto A = buildLevelSets(f, X, centers, supAll(V), 0.1);
  REQUIRE(A.size() == 1);
  CHECK(A[0] == MeasurableSet::atoms({1}));
  const auto none = buildLevelSets(f, X, centers, supAll(V), 2.0);
  CHECK(none[0].empty());
}

TEST_CASE("a constant above delta fills X minus its null set") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.5, 0.0, 0.5});
  const Vector c = vec(V, {1.0, 1.0});
  const auto A = buildLevelSets(tableFn(V, {c, c, c}), X, std::vector<Vector>{c}, supAll(V), 0.5);
  CHECK(A[0] == MeasurableSet::atoms({0, 2}));
  CHECK_THROWS_AS(buildLevelSets(tableFn(V, {c, c, c}), X, std::vector<Vector>{c}, supAll(V), 0.0), Error);
}

TEST_CASE("disjointification keeps the lowest index") {
  const std::vector<MeasurableSet> A = {MeasurableSet::atoms({0, 1}), MeasurableSet::atoms({1, 2})};
  const auto D = disjointify(A);
  CHECK(D[0] == MeasurableSet::atoms({0, 1}));
  CHECK(D[1] == MeasurableSet::atoms({2}));
  const std::vector<MeasurableSet> B = {MeasurableSet::atoms({0}), MeasurableSet::atoms({3}),
                                        MeasurableSet::atoms({1, 2})};
  CHECK(disjointify(B) == B);
}

TEST_CASE("disjointification preserves the union exactly") {
  const auto X = MeasureSpace::interval(0.0, 1.0, 2);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MeasurableSet> A;
    for (int k = 0; k < 5; ++k) {
      const int level = static_cast<int>(rng() % 4);
      std::vector<std::size_t> m;
      for (std::size_t c = 0; c < X.cellCount(level); ++c) if (rng() % 3 == 0) m.push_back(c);
      A.push_back(MeasurableSet::cells(level, m));
    }
    const auto D = disjointify(A);
    const PartitionCheck check = checkDisjointification(A, D);
    CHECK(check.pairwise_disjoint);
    CHECK(check.union_equal);
    MeasurableSet ua = MeasurableSet::cells(0, {});
    MeasurableSet ud = MeasurableSet::cells(0, {});
    for (std::size_t k = 0; k < A.size(); ++k) {
      ua = unite(ua, A[k]);
      ud = unite(ud, D[k]);
      for (std::size_t l = 0; l < k; ++l) CHECK(intersect(D[k], D[l]).empty());
    }
    CHECK(measureOf(X, ua) == measureOf(X, ud));
  }
  const std::vector<MeasurableSet> A = {MeasurableSet::atoms({0, 1})};
  const std::vector<MeasurableSet> bad = {MeasurableSet::atoms({0})};
  CHECK_FALSE(checkDisjointification(A, bad).union_equal);
}

TEST_CASE("approximant of a simple function on three atoms") {
  const auto V = coords(1);
  const auto X = atomsWithWeights({0.25, 0.25, 0.5});
  const auto f = tableFn(V, {vec(V, {2.0}), vec(V, {-1.0}), vec(V, {2.0})});
  const auto p = supAll(V);
  for (std::size_t n : {4u, 8u, 64u}) {
    const ApproxStep step = buildApproximant(f, X, p, n);
    CHECK(step.centers == 2);
    // Every atom has p(f) > 1/n and its own value as a center.
    CHECK(step.residual < X.totalMass() / static_cast<double>(n));
    CHECK(step.residual == 0.0);
  }
}

TEST_CASE("approximant of zero") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.5, 0.5});
  const ApproxStep step = buildApproximant(tableFn(V, {Vector::zero(V), Vector::zero(V)}), X, supAll(V), 3);
  CHECK(step.approximant.pieces().empty());
  CHECK(step.residual == 0.0);
}

TEST_CASE("residuals on finite atoms eventually drop below any eps") {
  std::mt19937_64 rng(41);
  const auto V = coords(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> w(12);
    for (auto& x : w) x = static_cast<double>(rng() % 5) / 8.0;
    w[0] = 0.5;
    const auto X = atomsWithWeights(w);
    std::vector<Vector> values;
    for (int i = 0; i < 12; ++i) values.push_back(randomVector(rng, V, 3.0));
    const auto f = tableFn(V, values);
    const auto p = Seminorm::weightedL1(V, {0, 1}, {1.0, 1.0});
    // Exhaustive oracle: once 1/n is below the smallest positive p(f(x)) and the
    // smallest distance between distinct values, s_{p,n} = f on X minus the null set.
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
      gap = std::min(gap, p(values[i]));
      for (std::size_t j = 0; j < i; ++j) gap = std::min(gap, p.distance(values[i], values[j]));
    }
    const std::size_t n_star = static_cast<std::size_t>(std::ceil(1.0 / gap)) + 1;
    for (std::size_t n = n_star; n < n_star + 20; ++n) {
      CHECK(buildApproximant(f, X, p, n).residual == 0.0);
    }
    for (std::size_t n = 1; n < 40; ++n) {
      const ApproxStep step = buildApproximant(f, X, p, n);
      CHECK(step.max_bound_ratio <= 2.0 * (1.0 + 1e-12));
      CHECK(step.partition.pairwise_disjoint);
      CHECK(step.partition.union_equal);
    }
  }
}

TEST_CASE("approximate reaches eps on a discrete space") {
  const auto V = coords(1);
  const auto X = atomsWithWeights({0.25, 0.5, 0.25});
  const auto f = tableFn(V, {vec(V, {1.0}), vec(V, {-0.5}), vec(V, {1.0})});
  const Approximation a = approximate(f, X, supAll(V), 1e-6);
  CHECK(a.residual == 0.0);
  CHECK(a.step.approximant.pieces().size() == 2);
}

TEST_CASE("a large eps is met by the zero simple function") {
  const auto V = coords(1);
  const auto X = atomsWithWeights({0.5, 0.5});
  const auto f = tableFn(V, {vec(V, {1.0}), vec(V, {3.0})});
  const Approximation a = approximate(f, X, supAll(V), 10.0);
  CHECK(a.step.approximant.pieces().empty());
  CHECK(a.residual == doctest::Approx(2.0));
}

TEST_CASE("halving eps never increases the returned residual") {
  const Circle c;
  const auto p = c.family.top();
  double last = std::numeric_limits<double>::infinity();
  for (double eps = 0.5; eps > 1e-3; eps /= 2) {
    const Approximation a = approximate(c.f, c.X, p, eps);
    CHECK(a.residual < eps);
    CHECK(a.residual <= last);
    last = a.residual;
  }
}

TEST_CASE("approximate reports the cap with the best residual") {
  const Circle c;
  ApproxOptions o;
  o.max_iter = 4;
  try {
    (void)approximate(c.f, c.X, c.family.top(), 1e-6, o);
    FAIL("expected the iteration cap");
  } catch (const CapReachedError& e) {
    CHECK((e.code() == ErrorCode::kCapReached));
    CHECK(e.best() > 1e-6);
    CHECK(std::isfinite(e.best()));
  }
  CHECK_THROWS_AS(approximate(c.f, c.X, c.family.top(), 0.0), Error);
}

TEST_CASE("integral of a constant is exact with equal certificates") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.25, 0.25, 0.5});
  const Vector v = vec(V, {0.75, Scalar(-2.0, 0.5)});
  const SeminormFamily fam(V, {supAll(V), Seminorm::weightedL1(V, {0, 1}, {1.0, 0.5}, "l1")});
  const IntegralResult r = bochnerIntegrate(tableFn(V, {v, v, v}), X, fam);
  CHECK((r.status == Status::kConverged));
  CHECK(r.integral == v);
  for (const auto& cert : r.certificates) {
    CHECK(cert.lhs == cert.rhs);
    CHECK(cert.pass);
  }
  CHECK(r.certified());
}

TEST_CASE("cancellation gives zero with a strict certificate gap") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({1.0, 1.0});
  const Vector v = vec(V, {1.0, Scalar(0, 2)});
  const SeminormFamily fam(V, {supAll(V)});
  const IntegralResult r = bochnerIntegrate(tableFn(V, {v, -v}), X, fam);
  CHECK((r.status == Status::kConverged));
  CHECK(r.integral.isZero());
  CHECK(r.certificates[0].lhs == 0.0);
  CHECK(r.certificates[0].rhs == 2.0 * supAll(V)(v));
  CHECK(certify(r, tableFn(V, {v, -v}), X, fam, 1e-6).pass);
}

TEST_CASE("circle integrates to (0, 2)") {
  const Circle c;
  const IntegralResult r = bochnerIntegrate(c.f, c.X, c.family, c.options());
  REQUIRE((r.status == Status::kConverged));
  const double cos_oracle = midpoint([](double x) { return std::cos(x); }, 0.0, kPi, 1u << 20);
  const double sin_oracle = midpoint([](double x) { return std::sin(x); }, 0.0, kPi, 1u << 20);
  CHECK(std::abs(r.integral[0]) <= 1e-6);
  CHECK(std::abs(r.integral[1] - 2.0) <= 1e-6);
  CHECK(std::abs(r.integral[0] - cos_oracle) <= 1e-6);
  CHECK(std::abs(r.integral[1] - sin_oracle) <= 1e-6);
  CHECK(r.cauchyHolds());
  CHECK(r.certified());
  CHECK((r.hypothesis == Hypothesis::kComplete));
  for (const auto& s : r.steps) {
    CHECK(s.residual < s.eps);
    CHECK(s.pairwise_disjoint);
    CHECK(s.union_exact);
    CHECK(s.max_bound_ratio <= 2.0 * (1 + 1e-12));
    CHECK_FALSE(s.convex.has_value());  // mu(X) = pi
  }
}

TEST_CASE("the cauchy trace follows the chain") {
  const Circle c;
  const IntegralResult r = bochnerIntegrate(c.f, c.X, c.family, c.options());
  REQUIRE(r.cauchy_trace.size() >= 3);
  CHECK(r.cauchy_trace[0].chain_index == 1);
  CHECK(r.cauchy_trace[1].chain_index == 2);
  CHECK(r.cauchy_trace[2].chain_index == 2);
  for (std::size_t i = 1; i < r.cauchy_trace.size(); ++i) {
    const auto& row = r.cauchy_trace[i];
    CHECK(row.eps == doctest::Approx(r.cauchy_trace[i - 1].eps / 2));
    CHECK(row.increment <= row.bound + 1e-10);
  }
  CHECK(r.cauchy_trace.back().top_increment < 1e-6);
}

TEST_CASE("caps yield a partial result") {
  const Circle c;
  IntegrationOptions o = c.options();
  o.max_iter = 2;
  const IntegralResult r = bochnerIntegrate(c.f, c.X, c.family, o);
  CHECK((r.status == Status::kCapReached));
  CHECK_FALSE(r.message.empty());
  CHECK_FALSE(r.certified());
  IntegrationOptions s = c.options();
  s.max_steps = 2;
  const IntegralResult r2 = bochnerIntegrate(c.f, c.X, c.family, s);
  CHECK((r2.status == Status::kCapReached));
  CHECK(r2.steps.size() == 2);
}

TEST_CASE("certificates with the oracle sum substituted on random atoms") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    const auto V = coords(3);
    std::vector<double> w(10);
    for (auto& x : w) x = static_cast<double>(rng() % 9) / 8.0;
    const auto X = atomsWithWeights(w);
    std::vector<Vector> values;
    for (int i = 0; i < 10; ++i) values.push_back(randomVector(rng, V, 5.0));
    const auto f = tableFn(V, values);
    const SeminormFamily fam(V, {supAll(V), Seminorm::weightedL1(V, {0, 2}, {1.0, 2.0}, "l1"),
                                 Seminorm::absFunctional(V, {0, 1, 2}, {1.0, Scalar(0, 1), -1.0}, "f")});
    Vector oracle = Vector::zero(V);
    for (int i = 0; i < 10; ++i) oracle += w[i] * values[i];
    IntegralResult r{.integral = oracle};
    r.status = Status::kConverged;
    const CertificateReport report = certify(r, f, X, fam, 1e-6);
    CHECK(report.pass);
    CHECK(report.entries.size() == 3);
  }
}

TEST_CASE("identity pushforward passes") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.5, 0.5});
  const auto f = tableFn(V, {vec(V, {1.0, 2.0}), vec(V, {3.0, -1.0})});
  const SeminormFamily fam(V, {supAll(V)});
  const LinearMap id("id", V, V, CoordinateProjection{{0, 1}});
  const PushforwardReport r = pushforwardCheck(id, f, X, fam, fam, IntegrationOptions{});
  CHECK(r.pass);
  CHECK(r.image_of_integral == r.integral_of_image);
}

TEST_CASE("coordinate projections of the circle") {
  const Circle c;
  const IntegralResult r = bochnerIntegrate(c.f, c.X, c.family, c.options());
  const auto W = coords(1, "R");
  const SeminormFamily tf(W, {supAll(W, "abs")});
  const double expected[2] = {0.0, 2.0};
  for (std::size_t k = 0; k < 2; ++k) {
    const LinearMap pi("pi", c.V, W, CoordinateProjection{{k}});
    const PushforwardReport pr = pushforwardCheck(pi, c.f, c.X, r.integral, tf, c.options());
    CHECK(pr.pass);
    CHECK(std::abs(pr.integral_of_image[0] - expected[k]) <= 1e-6);
    CHECK(std::abs(pr.image_of_integral[0] - expected[k]) <= 1e-6);
  }
}

TEST_CASE("point evaluation on the sampled gaussian family") {
  const auto V = Space::sampledFunction("C[-3,3]", 3.0, 0.25);
  const auto X = MeasureSpace::interval(0.0, 1.0, 16);
  const auto f = IntegrandFn::fromCatalog("gaussian-shift", {}, V, X);
  std::vector<Seminorm> ps;
  for (int k = 1; k <= 3; ++k) {
    ps.push_back(Seminorm::weightedSup(V, V->gridIndicesIn(-k, k),
                                       std::vector<double>(V->gridIndicesIn(-k, k).size(), 1.0),
                                       "p" + std::to_string(k)));
  }
  const SeminormFamily fam(V, ps);
  IntegrationOptions o;
  o.approx_tol = 1e-3;
  const IntegralResult r = bochnerIntegrate(f, X, fam, o);
  REQUIRE((r.status == Status::kConverged));
  for (double s : {0.0, 0.5, -2.1, 2.75}) {
    const LinearMap alpha("ev", V, scalarSpace(), PointEvaluation{s});
    const FunctionalReport fr = functionalCheck(alpha, f, X, r.integral, 1e-6);
    CHECK(fr.pass);
    // Independent scalar oracle of the same interpolated samples.
    const auto w = V->interpolationWeights(s);
    double oracle = 0.0;
    for (const auto& [i, wi] : w) {
      const double si = V->gridPoint(i);
      oracle += wi * midpoint([si](double t) { return std::exp(-(si - t) * (si - t)); }, 0.0, 1.0, 1u << 16);
    }
    CHECK(std::abs(alpha.functional(r.integral).real() - oracle) <= 1e-6);
  }
}

TEST_CASE("approximant steps on a probability space are convex combinations") {
  std::mt19937_64 rng(77);
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.125, 0.375, 0.0, 0.25, 0.25});
  std::vector<Vector> values;
  for (int i = 0; i < 5; ++i) values.push_back(randomVector(rng, V));
  const auto f = tableFn(V, values);
  const auto p = supAll(V);
  for (std::size_t n = 1; n <= 64; ++n) {
    const ApproxStep step = buildApproximant(f, X, p, n);
    const ConvexReport r = convexCombinationCheck(step, f, X);
    CHECK(r.precondition);
    CHECK(r.pass);
  }
  const SeminormFamily fam(V, {p});
  const IntegralResult r = bochnerIntegrate(f, X, fam);
  for (const auto& s : r.steps) {
    REQUIRE(s.convex.has_value());
    CHECK(*s.convex);
  }
  const auto Y = MeasureSpace::interval(0.0, 1.0, 16);
  const auto g = IntegrandFn::fromCatalog("circle", {}, V, Y);
  for (std::size_t n : {1u, 3u, 16u}) {
    const ConvexReport cr = convexCombinationCheck(buildApproximant(g, Y, p, n), g, Y);
    CHECK(cr.pass);
  }
}

TEST_CASE("changing f on weight-0 atoms changes neither integral nor certificates") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.5, 0.0, 0.5, 0.0});
  const SeminormFamily fam(V, {supAll(V), Seminorm::weightedL1(V, {0, 1}, {1.0, 1.0}, "l1")});
  const Vector a = vec(V, {1.0, -1.0});
  const Vector b = vec(V, {0.5, 2.0});
  const IntegralResult r1 = bochnerIntegrate(tableFn(V, {a, Vector::zero(V), b, a}), X, fam);
  const IntegralResult r2 = bochnerIntegrate(tableFn(V, {a, vec(V, {1e9, 7.0}), b, vec(V, {-3.0, 0.0})}), X, fam);
  CHECK(r1.integral == r2.integral);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(r1.certificates[k].rhs == r2.certificates[k].rhs);
    CHECK(r1.certificates[k].lhs == r2.certificates[k].lhs);
  }
}

}  // TEST_SUITE
