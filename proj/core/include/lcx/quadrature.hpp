#pragma once

#include <functional>
#include <vector>

#include "lcx/measure.hpp"
#include "lcx/space.hpp"

namespace lcx {

using ScalarFn = std::function<Scalar(const Point&)>;
using RealFn = std::function<double(const Point&)>;

struct QuadratureOptions {
  double tol = 1e-8;
  /// Refinement cap, counted above the base partition.
  int max_level = 24;
  /// First level evaluated. Integrands that are piecewise constant at level L
  /// should start at L + 1 or finer.
  int min_level = 0;
};

template <class T>
struct RefinementRow {
  int level = 0;
  T value{};
  double delta = 0.0;
};

template <class T>
struct QuadratureResult {
  T value{};
  /// Previous refinement (equal to value for discrete spaces).
  T previous{};
  bool converged = false;
  int level = 0;
  std::vector<RefinementRow<T>> trace;
};

/// Discrete spaces: exact weighted sum over positive-weight atoms in
/// ascending order. Intervals: composite midpoint rule, halving cells until
/// two successive refinements differ by less than `tol`; the finer value is
/// returned. Non-finite evaluations throw Error(kNonFinite); hitting the
/// refinement cap is reported through `converged == false`.
QuadratureResult<Scalar> integrateScalar(const ScalarFn& g, const MeasureSpace& X,
                                         const QuadratureOptions& options = {});
QuadratureResult<double> integrateReal(const RealFn& g, const MeasureSpace& X,
                                       const QuadratureOptions& options = {});

}  // namespace lcx
