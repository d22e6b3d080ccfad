#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lcx/lcx.hpp"

namespace lcx::test {

inline SpacePtr coords(std::size_t d, const char* id = "V") { return Space::coordinates(id, d); }

inline Vector vec(const SpacePtr& V, std::vector<Scalar> data) { return Vector(V, std::move(data)); }

inline Seminorm supAll(const SpacePtr& V, const char* name = "sup") {
  std::vector<std::size_t> idx(V->dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return Seminorm::weightedSup(V, idx, std::vector<double>(idx.size(), 1.0), name);
}

inline MeasureSpace atomsWithWeights(const std::vector<double>& w) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < w.size(); ++i) {
    atoms.push_back(Atom{"x" + std::to_string(i), w[i], static_cast<double>(i)});
  }
  return MeasureSpace::discrete(std::move(atoms));
}

/// f given by one vector per atom.
inline IntegrandFn tableFn(const SpacePtr& V, std::vector<Vector> values) {
  return IntegrandFn("table", {}, V, [values](const Point& pt) { return values.at(pt.index); });
}

/// Plain composite midpoint rule with n nodes, written independently of the
/// library's quadrature.
template <class G>
double midpoint(G&& g, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += g(a + (static_cast<double>(i) + 0.5) * h);
  return acc * h;
}

}  // namespace lcx::test
