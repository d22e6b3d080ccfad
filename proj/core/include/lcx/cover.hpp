#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcx/integrand.hpp"
#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"

namespace lcx {

/// Values of f on the sample set of X minus its null set (see
/// MeasureSpace::samplePoints), in sweep order.
struct ImageSample {
  int level = 0;
  std::vector<Point> points;
  std::vector<Vector> values;
};

ImageSample sampleImage(const IntegrandFn& f, const MeasureSpace& X, int level);

/// Sampling level used by step n: base_level + ceil(log2 n); 0 on atoms.
int sampleLevel(const MeasureSpace& X, std::size_t n, int base_level);

/// Finite 1/n-net of the sampled image in seminorm p. Every center is an
/// actual value f(witness).
struct CoverNet {
  std::string seminorm;
  double radius = 0.0;
  std::vector<Vector> centers;
  std::vector<Point> witnesses;
  std::vector<std::size_t> sample_index;
};

/// Real linear functional k with |k(u) - k(v)| <= p(u - v): the real or
/// imaginary part of one coordinate (or functional) appearing in p. The
/// component with the largest spread over the sample is chosen.
class LowerBoundKey {
 public:
  static LowerBoundKey choose(const Seminorm& p, std::span<const Vector> values);
  double operator()(const Vector& v) const;

 private:
  std::vector<std::pair<std::size_t, Scalar>> coefficients_;
  bool imaginary_ = false;
};

/// Vectors from a caller-owned pool, ordered by a LowerBoundKey. Range
/// queries on the key prune candidates exactly; survivors are then tested
/// with p itself.
class CenterIndex {
 public:
  CenterIndex(const Seminorm& p, std::span<const Vector> pool, LowerBoundKey key);

  void insert(std::size_t pool_index);
  /// Calls fn(pool_index) for every inserted c with p(v - c) < radius.
  template <class Fn>
  void forEachWithin(const Vector& v, double radius, Fn&& fn) const;
  bool anyWithin(const Vector& v, double radius) const;

 private:
  std::pair<std::multimap<double, std::size_t>::const_iterator,
            std::multimap<double, std::size_t>::const_iterator>
  candidates(const Vector& v, double radius) const;

  const Seminorm* p_;
  std::span<const Vector> pool_;
  LowerBoundKey key_;
  std::multimap<double, std::size_t> by_key_;
};

template <class Fn>
void CenterIndex::forEachWithin(const Vector& v, double radius, Fn&& fn) const {
  auto [it, end] = candidates(v, radius);
  for (; it != end; ++it) {
    if (p_->distance(v, pool_[it->second]) < radius) fn(it->second);
  }
}

/// Greedy sweep in sample order: a value becomes a new center iff its
/// p-distance to every existing center is >= radius.
CoverNet coverImage(const ImageSample& sample, const Seminorm& p, double radius);
/// Radius 1/n on the sample set of step n.
CoverNet coverImage(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                    std::size_t n, int base_level = 0);

}  // namespace lcx
