#include "lcx/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "lcx/error.hpp"

namespace lcx {

ImageSample sampleImage(const IntegrandFn& f, const MeasureSpace& X, int level) {
  ImageSample s;
  s.level = X.isDiscrete() ? 0 : level;
  s.points = X.samplePoints(s.level);
  s.values.reserve(s.points.size());
  for (const auto& pt : s.points) s.values.push_back(f(pt));
  return s;
}

int sampleLevel(const MeasureSpace& X, std::size_t n, int base_level) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "step index must be >= 1");
  if (X.isDiscrete()) return 0;
  const int ceil_log2 = static_cast<int>(std::bit_width(n - 1));
  return base_level + ceil_log2;
}

LowerBoundKey LowerBoundKey::choose(const Seminorm& p, std::span<const Vector> values) {
  std::vector<LowerBoundKey> candidates;
  auto add = [&](std::vector<std::pair<std::size_t, Scalar>> coeffs) {
    for (bool imag : {false, true}) {
      LowerBoundKey k;
      k.coefficients_ = coeffs;
      k.imaginary_ = imag;
      candidates.push_back(std::move(k));
    }
  };
  for (const auto& term : p.terms()) {
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, FunctionalTerm>) {
            std::vector<std::pair<std::size_t, Scalar>> coeffs;
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              coeffs.emplace_back(t.indices[k], term.factor * t.coefficients[k]);
            }
            add(std::move(coeffs));
          } else {
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              if (t.weights[k] > 0.0) add({{t.indices[k], Scalar{term.factor * t.weights[k]}}});
            }
          }
        },
        term.kind);
  }
  std::size_t best = 0;
  double best_spread = -1.0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& v : values) {
      const double k = candidates[c](v);
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    const double spread = values.empty() ? 0.0 : hi - lo;
    if (spread > best_spread) {
      best_spread = spread;
      best = c;
    }
  }
  return candidates[best];
}

double LowerBoundKey::operator()(const Vector& v) const {
  const auto data = v.data();
  Scalar acc{};
  for (const auto& [i, c] : coefficients_) acc += c * data[i];
  return imaginary_ ? acc.imag() : acc.real();
}

CenterIndex::CenterIndex(const Seminorm& p, std::span<const Vector> pool, LowerBoundKey key)
    : p_(&p), pool_(pool), key_(std::move(key)) {}

void CenterIndex::insert(std::size_t pool_index) {
  by_key_.emplace(key_(pool_[pool_index]), pool_index);
}

std::pair<std::multimap<double, std::size_t>::const_iterator,
          std::multimap<double, std::size_t>::const_iterator>
CenterIndex::candidates(const Vector& v, double radius) const {
  const double k = key_(v);
  // Slack covers rounding between the key and the seminorm evaluation.
  const double slack = radius + 1e-9 * (std::abs(k) + radius) + 1e-300;
  return {by_key_.lower_bound(k - slack), by_key_.upper_bound(k + slack)};
}

bool CenterIndex::anyWithin(const Vector& v, double radius) const {
  auto [it, end] = candidates(v, radius);
  for (; it != end; ++it) {
    if (p_->distance(v, pool_[it->second]) < radius) return true;
  }
  return false;
}

CoverNet coverImage(const ImageSample& sample, const Seminorm& p, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "cover radius must be > 0");
  CoverNet net;
  net.seminorm = p.name();
  net.radius = radius;
  CenterIndex index(p, sample.values, LowerBoundKey::choose(p, sample.values));
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    if (index.anyWithin(sample.values[i], radius)) continue;
    index.insert(i);
    net.centers.push_back(sample.values[i]);
    net.witnesses.push_back(sample.points[i]);
    net.sample_index.push_back(i);
  }
  return net;
}

CoverNet coverImage(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                    std::size_t n, int base_level) {
  const ImageSample sample = sampleImage(f, X, sampleLevel(X, n, base_level));
  return coverImage(sample, p, 1.0 / static_cast<double>(n));
}

}  // namespace lcx
