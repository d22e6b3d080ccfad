#include "lcx/oracle.hpp"

#include <cmath>
#include <vector>

#include "lcx/error.hpp"

namespace lcx {

Vector oracleIntegrate(const IntegrandFn& f, const MeasureSpace& X, int resolution) {
  const std::size_t dim = f.space()->dim();
  std::vector<Scalar> acc(dim);
  if (X.isDiscrete()) {
    const auto atoms = X.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const double w = atoms[i].weight;
      const Vector v = f(Point{i, atoms[i].position});
      for (std::size_t k = 0; k < dim; ++k) acc[k] += w * v[k];
    }
    return Vector(f.space(), std::move(acc));
  }
  if (resolution < 0 || resolution > 30) {
    throw Error(ErrorCode::kInvalidArgument, "oracle resolution must be in [0, 30]");
  }
  const std::size_t nodes = std::size_t{1} << resolution;
  const double h = (X.b() - X.a()) / static_cast<double>(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double x = X.a() + (static_cast<double>(i) + 0.5) * h;
    const Vector v = f(Point{i, x});
    for (std::size_t k = 0; k < dim; ++k) acc[k] += v[k];
  }
  for (auto& a : acc) a *= h;
  return Vector(f.space(), std::move(acc));
}

}  // namespace lcx
