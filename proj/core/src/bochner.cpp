#include "lcx/bochner.hpp"

#include <algorithm>
#include <cmath>

#include "lcx/checks.hpp"
#include "lcx/error.hpp"
#include "lcx/quadrature.hpp"

namespace lcx {

std::string_view toString(Status status) noexcept {
  switch (status) {
    case Status::kConverged: return "converged";
    case Status::kCapReached: return "cap-reached";
  }
  return "unknown";
}

std::string_view toString(Hypothesis hypothesis) noexcept {
  switch (hypothesis) {
    case Hypothesis::kComplete: return "complete";
    case Hypothesis::kQuasiCompleteEssBounded: return "quasi-complete+ess-bounded";
    case Hypothesis::kFiniteMeasureConvexHull: return "finite-measure+convex-hull";
  }
  return "unknown";
}

bool IntegralResult::cauchyHolds() const {
  return std::all_of(cauchy_trace.begin(), cauchy_trace.end(),
                     [](const CauchyRow& r) { return r.estimate_holds; });
}

bool IntegralResult::certified() const {
  return status == Status::kConverged && cauchyHolds() &&
         std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.pass; });
}

std::vector<Certificate> certificates(const Vector& integral, const IntegrandFn& f,
                                      const MeasureSpace& X, const SeminormFamily& family,
                                      double tol, double quad_tol, int quad_levels) {
  std::vector<Certificate> out;
  for (const auto& p : family.members()) {
    QuadratureOptions q;
    q.tol = quad_tol;
    q.max_level = quad_levels;
    const auto rhs = integrateReal([&](const Point& pt) { return p(f(pt)); }, X, q);
    Certificate c;
    c.seminorm = p.name();
    c.lhs = p(integral);
    c.rhs = rhs.value;
    c.rhs_converged = rhs.converged;
    c.pass = c.lhs <= c.rhs + tol;
    out.push_back(std::move(c));
  }
  return out;
}

IntegralResult bochnerIntegrate(const IntegrandFn& f, const MeasureSpace& X,
                                const SeminormFamily& family, const IntegrationOptions& options) {
  requireSameSpace(*f.space(), *family.space(), "bochnerIntegrate");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be > 0");
  const double approx_tol = options.approx_tol > 0.0 ? options.approx_tol : options.tol;
  const std::size_t m = family.size();
  const std::size_t max_steps = options.max_steps > 0 ? options.max_steps : m + 8;
  const bool probability = std::abs(X.totalMass() - 1.0) <= 1e-12;

  ApproxOptions approx;
  approx.max_iter = options.max_iter;
  approx.base_level = options.base_level;
  approx.quad_levels = options.quad_levels;

  IntegralResult result{.integral = Vector::zero(f.space())};
  std::optional<SimpleFn> previous;
  std::size_t previous_chain = 0;
  bool converged = false;

  for (std::size_t n = 1; n <= max_steps; ++n) {
    const std::size_t k = std::min(n, m);
    const Seminorm& q = family.chain(k);
    const double eps = approx_tol / std::ldexp(1.0, static_cast<int>(n));
    std::optional<Approximation> attempt;
    try {
      attempt.emplace(approximate(f, X, q, eps, approx));
    } catch (const CapReachedError& e) {
      result.message = e.what();
      break;
    }
    const Approximation& a = *attempt;
    const ApproxStep& step = a.step;
    const SimpleFn& s = step.approximant;
    Vector I = integrateSimple(s, X);

    StepSummary summary;
    summary.chain_index = k;
    summary.seminorm = q.name();
    summary.n = step.n;
    summary.delta = step.delta;
    summary.level = step.level;
    summary.centers = step.centers;
    summary.pieces = s.pieces().size();
    summary.eps = eps;
    summary.residual = a.residual;
    summary.pairwise_disjoint = step.partition.pairwise_disjoint;
    summary.union_exact = step.partition.union_equal;
    summary.max_bound_ratio = step.max_bound_ratio;
    if (probability) summary.convex = convexCombinationCheck(step, f, X).pass;
    summary.piece_measures = step.piece_measure;
    summary.trials = a.trials;
    result.steps.push_back(std::move(summary));

    CauchyRow row;
    row.n = n;
    row.chain_index = k;
    row.eps = eps;
    row.residual = a.residual;
    if (previous) {
      const Seminorm& qmin = family.chain(std::min(previous_chain, k));
      row.increment = qmin.distance(I, result.integral);
      row.bound = integrateSeminorm(qmin, subtractSimple(s, *previous, X), X);
      row.top_increment = family.top().distance(I, result.integral);
      row.estimate_holds = row.increment <= row.bound + 1e-10 + 1e-12 * row.bound;
    }
    result.cauchy_trace.push_back(row);
    result.integral = std::move(I);
    if (options.keep_approximants) result.approximants.push_back(s);
    previous.emplace(s);
    previous_chain = k;

    if (n > m && row.top_increment < options.tol) {
      converged = true;
      break;
    }
  }

  if (converged) {
    result.status = Status::kConverged;
  } else {
    result.status = Status::kCapReached;
    if (result.message.empty()) {
      result.message = "no convergence within " + std::to_string(max_steps) + " chain steps";
    }
  }
  result.hypothesis = Hypothesis::kComplete;
  result.certificates =
      certificates(result.integral, f, X, family, options.tol,
                   options.certificate_quad_tol > 0.0 ? options.certificate_quad_tol
                                                      : options.tol * 1e-2,
                   options.quad_levels);
  return result;
}

}  // namespace lcx
