#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcx/cover.hpp"
#include "lcx/integrand.hpp"
#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/simple_function.hpp"

namespace lcx {

struct ApproxOptions {
  /// Largest step index n tried by approximate(); n runs over 1, 2, 4, ...
  std::size_t max_iter = 4096;
  /// Interval sample level offset: step n samples at base_level + ceil(log2 n).
  int base_level = 0;
  /// Absolute cap on quadrature refinement levels.
  int quad_levels = 24;
  /// The residual quadrature may refine at most this many levels past the
  /// sample level.
  int residual_extra_levels = 6;
  /// Quadrature tolerance for residuals, in units of the seminorm the step
  /// is built for (1 == the acceptance threshold after eps-scaling).
  double residual_tol = 1e-3;
};

/// A_j = {x in X_p : p(f(x)) > delta and p(f(x) - c_j) < delta}, one set per
/// center, decided at the sample points (atoms or cell midpoints).
std::vector<MeasurableSet> buildLevelSets(const ImageSample& sample, const MeasureSpace& X,
                                          std::span<const Vector> centers, const Seminorm& p,
                                          double delta);
std::vector<MeasurableSet> buildLevelSets(const IntegrandFn& f, const MeasureSpace& X,
                                          std::span<const Vector> centers, const Seminorm& p,
                                          double delta, int level = 0);

/// D_n = A_n minus the union of A_k for k < n.
std::vector<MeasurableSet> disjointify(std::span<const MeasurableSet> sets);

struct PartitionCheck {
  bool pairwise_disjoint = true;
  bool union_equal = true;
};
/// Exact set-level comparison of A and D = disjointify(A).
PartitionCheck checkDisjointification(std::span<const MeasurableSet> A,
                                      std::span<const MeasurableSet> D);

/// One s_{p,n} = sum_j 1_{D_j} c_j with delta = 1/n and centers from the
/// 1/n-net of the sampled image.
struct ApproxStep {
  std::string seminorm;
  std::size_t n = 0;
  double delta = 0.0;
  int level = 0;
  std::size_t centers = 0;
  SimpleFn approximant;
  /// Per piece: the center index j, a point with f(point) == value, mu(D_j).
  std::vector<std::size_t> piece_center;
  std::vector<Point> piece_witness;
  std::vector<double> piece_measure;
  /// integral of p(f - s) d mu, in units of the step's seminorm.
  double residual = 0.0;
  bool residual_converged = true;
  PartitionCheck partition;
  /// max over covered sample points of p(s(x)) / p(f(x)); never above 2.
  double max_bound_ratio = 0.0;
  /// mu of X_p outside every D_j, and the largest p(f(x)) seen there.
  double uncovered_mass = 0.0;
  double uncovered_sup = 0.0;
};

/// Throws Error(kInternalConstruction) if p(s(x)) <= 2 p(f(x)) fails at a
/// sample point, or if the D-sets do not partition the union of the A-sets.
ApproxStep buildApproximant(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                            std::size_t n, const ApproxOptions& options = {});

struct Approximation {
  /// Step built for the scaled seminorm (1/eps) p.
  ApproxStep step;
  double eps = 0.0;
  /// integral of p(f - s) d mu in the original units (< eps).
  double residual = 0.0;
  /// (n, scaled residual) for every step tried.
  std::vector<std::pair<std::size_t, double>> trials;
};

/// Runs buildApproximant with (1/eps) p for n = 1, 2, 4, ... until the scaled
/// residual drops below 1. Throws CapReachedError carrying the best residual
/// (original units) when n would exceed options.max_iter.
Approximation approximate(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                          double eps, const ApproxOptions& options = {});

}  // namespace lcx
