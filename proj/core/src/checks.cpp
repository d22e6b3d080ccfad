#include "lcx/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lcx/cover.hpp"
#include "lcx/error.hpp"
#include "lcx/quadrature.hpp"

namespace lcx {
namespace {

constexpr double kExact = 1e-12;

bool isProbability(const MeasureSpace& X) { return std::abs(X.totalMass() - 1.0) <= kExact; }

ConvexReport checkCoefficients(ConvexReport report) {
  double sum = 0.0;
  for (double c : report.coefficients) sum += c;
  sum += report.remainder;
  report.sum = sum;
  const bool nonnegative =
      report.remainder >= 0.0 &&
      std::all_of(report.coefficients.begin(), report.coefficients.end(),
                  [](double c) { return c >= 0.0; });
  if (!nonnegative) report.message = "negative coefficient";
  else if (std::abs(sum - 1.0) > kExact) report.message = "coefficients do not sum to 1";
  report.pass = nonnegative && std::abs(sum - 1.0) <= kExact;
  return report;
}

}  // namespace

std::string_view toString(Tri value) noexcept {
  switch (value) {
    case Tri::kTrue: return "true";
    case Tri::kFalse: return "false";
    case Tri::kNotEstablished: return "not-established";
  }
  return "unknown";
}

IntegralBound isIntegrallyBounded(const IntegrandFn& f, const MeasureSpace& X,
                                  const SeminormFamily& family, double tol, int quad_levels) {
  IntegralBound out;
  for (const auto& p : family.members()) {
    QuadratureOptions q;
    q.tol = tol;
    q.max_level = quad_levels;
    const auto r = integrateReal([&](const Point& pt) { return p(f(pt)); }, X, q);
    out.seminorms.push_back(p.name());
    out.values.push_back(r.value);
    out.converged.push_back(r.converged);
    if (!r.converged || !std::isfinite(r.value)) out.holds = Tri::kNotEstablished;
  }
  return out;
}

EssentialBound isEssentiallyBounded(const IntegrandFn& f, const MeasureSpace& X,
                                    const SeminormFamily& family, int level) {
  EssentialBound out;
  out.sup.assign(family.size(), 0.0);
  for (const auto& pt : X.samplePoints(level)) {
    const Vector v = f(pt);
    for (std::size_t k = 0; k < family.size(); ++k) {
      out.sup[k] = std::max(out.sup[k], family.member(k)(v));
    }
  }
  out.holds = std::all_of(out.sup.begin(), out.sup.end(), [](double s) { return std::isfinite(s); });
  return out;
}

CertificateReport certify(const IntegralResult& result, const IntegrandFn& f,
                          const MeasureSpace& X, const SeminormFamily& family, double tol,
                          int quad_levels) {
  CertificateReport report;
  report.entries = certificates(result.integral, f, X, family, tol, tol * 1e-2, quad_levels);
  report.pass = result.status == Status::kConverged &&
                std::all_of(report.entries.begin(), report.entries.end(),
                            [](const Certificate& c) { return c.pass; });
  return report;
}

WitnessCheck checkWitness(const LinearMap& T, const Seminorm& q, std::uint64_t seed,
                          std::size_t samples) {
  const Seminorm p = T.witness(q);
  WitnessCheck check;
  check.target = q.name();
  check.source = p.name();
  check.declared = T.hasDeclaredWitness(q.name());
  check.worst_gap = -std::numeric_limits<double>::infinity();
  const SpacePtr& V = T.source();
  auto probe = [&](const Vector& v) {
    const double lhs = q(T(v));
    const double rhs = p(v);
    check.worst_gap = std::max(check.worst_gap, lhs - rhs);
    if (lhs > rhs * (1.0 + kExact) + kExact) check.holds = false;
  };
  for (std::size_t i = 0; i < V->dim(); ++i) {
    std::vector<Scalar> e(V->dim());
    e[i] = 1.0;
    probe(Vector(V, std::move(e)));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Scalar> data(V->dim());
    for (auto& x : data) x = Scalar(u(rng), u(rng));
    probe(Vector(V, std::move(data)));
  }
  return check;
}

PushforwardReport pushforwardCheck(const LinearMap& T, const IntegrandFn& f, const MeasureSpace& X,
                                   const Vector& integral_f, const SeminormFamily& target_family,
                                   const IntegrationOptions& options, std::uint64_t seed) {
  requireSameSpace(*T.target(), *target_family.space(), "pushforwardCheck");
  const IntegralResult image = bochnerIntegrate(f.composedWith(T), X, target_family, options);
  PushforwardReport report{.map = T.name(),
                           .image_of_integral = T(integral_f),
                           .integral_of_image = image.integral};
  report.status = image.status;
  bool pass = image.status == Status::kConverged;
  for (const auto& q : target_family.members()) {
    PushforwardEntry e;
    e.seminorm = q.name();
    e.delta = q.distance(report.image_of_integral, report.integral_of_image);
    e.pass = e.delta < options.tol;
    pass = pass && e.pass;
    report.entries.push_back(e);
    report.witnesses.push_back(checkWitness(T, q, seed));
    pass = pass && report.witnesses.back().holds;
  }
  report.pass = pass;
  return report;
}

PushforwardReport pushforwardCheck(const LinearMap& T, const IntegrandFn& f, const MeasureSpace& X,
                                   const SeminormFamily& source_family,
                                   const SeminormFamily& target_family,
                                   const IntegrationOptions& options, std::uint64_t seed) {
  const IntegralResult r = bochnerIntegrate(f, X, source_family, options);
  PushforwardReport report =
      pushforwardCheck(T, f, X, r.integral, target_family, options, seed);
  if (r.status != Status::kConverged) {
    report.status = r.status;
    report.pass = false;
  }
  return report;
}

FunctionalReport functionalCheck(const LinearMap& alpha, const IntegrandFn& f,
                                 const MeasureSpace& X, const Vector& integral_f, double tol,
                                 int quad_levels) {
  if (!alpha.isFunctional()) {
    throw Error(ErrorCode::kInvalidArgument, alpha.name() + " is not a functional");
  }
  QuadratureOptions q;
  q.tol = tol * 1e-3;
  q.max_level = quad_levels;
  const auto r = integrateScalar([&](const Point& pt) { return alpha.functional(f(pt)); }, X, q);
  FunctionalReport report;
  report.functional = alpha.name();
  report.of_integral = alpha.functional(integral_f);
  report.integral_of = r.value;
  report.delta = std::abs(report.of_integral - report.integral_of);
  report.converged = r.converged;
  report.pass = report.delta < tol;
  return report;
}

ConvexReport convexCombinationCheck(const SimpleFn& s, const MeasureSpace& X) {
  ConvexReport report;
  if (!isProbability(X)) {
    report.precondition = false;
    report.message = "mu(X) != 1";
    return report;
  }
  double covered = 0.0;
  for (const auto& piece : s.pieces()) {
    report.coefficients.push_back(measureOf(X, piece.set));
    covered += report.coefficients.back();
  }
  if (std::abs(covered - 1.0) > kExact) {
    report.precondition = false;
    report.message = "pieces do not partition X";
    report.sum = covered;
    return report;
  }
  return checkCoefficients(std::move(report));
}

ConvexReport convexCombinationCheck(const ApproxStep& step, const IntegrandFn& f,
                                    const MeasureSpace& X) {
  ConvexReport report;
  if (!isProbability(X)) {
    report.precondition = false;
    report.message = "mu(X) != 1";
    return report;
  }
  const auto pieces = step.approximant.pieces();
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (!(f(step.piece_witness[j]) == pieces[j].value)) {
      report.precondition = false;
      report.message = "piece " + std::to_string(j) + " is not an image value";
      return report;
    }
    report.coefficients.push_back(step.piece_measure[j]);
  }
  if (step.uncovered_sup > step.delta) {
    report.precondition = false;
    report.message = "uncovered point with p(f) > delta";
    return report;
  }
  report.remainder = step.uncovered_mass;
  return checkCoefficients(std::move(report));
}

}  // namespace lcx
