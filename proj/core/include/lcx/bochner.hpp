#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcx/approximant.hpp"
#include "lcx/integrand.hpp"
#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/simple_function.hpp"

namespace lcx {

struct IntegrationOptions {
  /// Convergence threshold on q_m(I_n - I_{n-1}) and certificate slack.
  double tol = 1e-6;
  /// Step n approximates to eps_n = approx_tol / 2^n; 0 means tol.
  double approx_tol = 0.0;
  std::size_t max_iter = 4096;
  int quad_levels = 24;
  int base_level = 0;
  /// Cap on the number of chain steps; 0 means family size + 8.
  std::size_t max_steps = 0;
  /// Quadrature tolerance for certificate right-hand sides; 0 means tol / 100.
  double certificate_quad_tol = 0.0;
  /// Keep every step's approximant in the result.
  bool keep_approximants = false;
};

struct Certificate {
  std::string seminorm;
  /// p(I) and the quadrature value of integral p(f) d mu.
  double lhs = 0.0;
  double rhs = 0.0;
  bool rhs_converged = true;
  bool pass = false;
};

struct CauchyRow {
  /// Step index n >= 1 and the chain index k = min(n, m) it approximated in.
  std::size_t n = 0;
  std::size_t chain_index = 0;
  double eps = 0.0;
  double residual = 0.0;
  /// q_k(I_n - I_{n-1}) with k the smaller chain index of the two steps,
  /// its bound integral q_k(s_n - s_{n-1}) d mu, and q_m(I_n - I_{n-1}).
  /// All zero on the first row.
  double increment = 0.0;
  double bound = 0.0;
  double top_increment = 0.0;
  bool estimate_holds = true;
};

struct StepSummary {
  std::size_t chain_index = 0;
  std::string seminorm;
  std::size_t n = 0;
  double delta = 0.0;
  int level = 0;
  std::size_t centers = 0;
  std::size_t pieces = 0;
  double eps = 0.0;
  /// Residual in the chain seminorm's own units.
  double residual = 0.0;
  bool pairwise_disjoint = true;
  bool union_exact = true;
  double max_bound_ratio = 0.0;
  /// Convex-combination check; empty when mu(X) != 1.
  std::optional<bool> convex;
  std::vector<double> piece_measures;
  std::vector<std::pair<std::size_t, double>> trials;
};

enum class Status { kConverged, kCapReached };
std::string_view toString(Status status) noexcept;

/// Which case of the completeness case split justified convergence.
enum class Hypothesis { kComplete, kQuasiCompleteEssBounded, kFiniteMeasureConvexHull };
std::string_view toString(Hypothesis hypothesis) noexcept;

struct IntegralResult {
  Vector integral;
  std::vector<Certificate> certificates{};
  std::vector<CauchyRow> cauchy_trace{};
  std::vector<StepSummary> steps{};
  Status status = Status::kCapReached;
  Hypothesis hypothesis = Hypothesis::kComplete;
  /// Cap diagnostic; empty on convergence.
  std::string message{};
  /// Filled when IntegrationOptions::keep_approximants is set.
  std::vector<SimpleFn> approximants{};

  bool cauchyHolds() const;
  bool certified() const;
};

/// Integrates f along the cofinal chain of `family`: step n builds
/// s_n = approximate(f, X, q_min(n,m), approx_tol / 2^n), I_n = integral s_n,
/// checks the Cauchy estimate against the previous step, and stops once
/// n > m and q_m(I_n - I_{n-1}) < tol. Certificates cover every member.
/// Cap exhaustion yields status kCapReached with the last I_n.
IntegralResult bochnerIntegrate(const IntegrandFn& f, const MeasureSpace& X,
                                const SeminormFamily& family,
                                const IntegrationOptions& options = {});

/// Certificates p(I) <= integral p(f) d mu + tol for every member of `family`.
std::vector<Certificate> certificates(const Vector& integral, const IntegrandFn& f,
                                      const MeasureSpace& X, const SeminormFamily& family,
                                      double tol, double quad_tol, int quad_levels);

}  // namespace lcx
