#pragma once

#include "lcx/integrand.hpp"
#include "lcx/measure.hpp"
#include "lcx/space.hpp"

namespace lcx {

/// Brute-force reference integral, independent of the approximation engine:
/// the plain weighted sum over atoms, or the composite midpoint rule with
/// 2^resolution nodes on an interval, accumulated per payload entry.
Vector oracleIntegrate(const IntegrandFn& f, const MeasureSpace& X, int resolution = 20);

}  // namespace lcx
