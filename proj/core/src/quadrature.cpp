#include "lcx/quadrature.hpp"

#include <cmath>
#include <string>

#include "lcx/error.hpp"

namespace lcx {
namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(const Scalar& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T, class Fn>
T checkedEval(const Fn& g, const Point& pt) {
  T v = g(pt);
  if (!finite(v)) {
    throw Error(ErrorCode::kNonFinite,
                "integrand is not finite at x = " + std::to_string(pt.x) + " (index " +
                    std::to_string(pt.index) + ")");
  }
  return v;
}

template <class T, class Fn>
T midpointSum(const Fn& g, const MeasureSpace& X, int level) {
  const std::size_t n = X.cellCount(level);
  const double w = X.cellWidth(level);
  T acc{};
  for (std::size_t c = 0; c < n; ++c) {
    acc += checkedEval<T>(g, Point{c, X.cellMidpoint(level, c)});
  }
  return acc * w;
}

template <class T, class Fn>
QuadratureResult<T> integrate(const Fn& g, const MeasureSpace& X, const QuadratureOptions& opt) {
  if (!(opt.tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "quadrature tol must be > 0");
  QuadratureResult<T> r;
  if (X.isDiscrete()) {
    T acc{};
    const auto atoms = X.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].weight == 0.0) continue;
      acc += checkedEval<T>(g, Point{i, atoms[i].position}) * atoms[i].weight;
    }
    r.value = acc;
    r.previous = acc;
    r.converged = true;
    r.trace.push_back({0, acc, 0.0});
    return r;
  }
  if (opt.min_level < 0 || opt.max_level <= opt.min_level) {
    throw Error(ErrorCode::kInvalidArgument, "quadrature needs 0 <= min_level < max_level");
  }
  T prev = midpointSum<T>(g, X, opt.min_level);
  r.trace.push_back({opt.min_level, prev, 0.0});
  for (int level = opt.min_level + 1; level <= opt.max_level; ++level) {
    const T cur = midpointSum<T>(g, X, level);
    const double delta = std::abs(cur - prev);
    r.trace.push_back({level, cur, delta});
    r.value = cur;
    r.previous = prev;
    r.level = level;
    if (delta < opt.tol) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

}  // namespace

QuadratureResult<Scalar> integrateScalar(const ScalarFn& g, const MeasureSpace& X,
                                         const QuadratureOptions& options) {
  return integrate<Scalar>(g, X, options);
}

QuadratureResult<double> integrateReal(const RealFn& g, const MeasureSpace& X,
                                       const QuadratureOptions& options) {
  return integrate<double>(g, X, options);
}

}  // namespace lcx
