#include "lcx/space.hpp"

#include <cmath>
#include <utility>

#include "lcx/error.hpp"

namespace lcx {

Space::Space(std::string id, SpaceKind kind, std::size_t dim, double half_width, double step)
    : id_(std::move(id)), kind_(kind), dim_(dim), half_width_(half_width), step_(step) {}

std::shared_ptr<const Space> Space::coordinates(std::string id, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "coordinate space needs dim >= 1");
  return std::shared_ptr<const Space>(
      new Space(std::move(id), SpaceKind::kCoordinates, dim, 0.0, 0.0));
}

std::shared_ptr<const Space> Space::sampledFunction(std::string id, double half_width,
                                                    double step) {
  if (!(half_width > 0.0) || !(step > 0.0) || !std::isfinite(half_width) ||
      !std::isfinite(step)) {
    throw Error(ErrorCode::kInvalidArgument, "sampled space needs K > 0 and step > 0");
  }
  const double cells = 2.0 * half_width / step;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    throw Error(ErrorCode::kInvalidArgument, "2K / step must be an integer");
  }
  const auto dim = static_cast<std::size_t>(rounded) + 1;
  return std::shared_ptr<const Space>(
      new Space(std::move(id), SpaceKind::kSampledFunction, dim, half_width, step));
}

double Space::gridPoint(std::size_t i) const {
  return -half_width_ + static_cast<double>(i) * step_;
}

std::vector<std::size_t> Space::gridIndicesIn(double lo, double hi) const {
  std::vector<std::size_t> out;
  const double slack = 1e-9 * step_;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double s = gridPoint(i);
    if (s >= lo - slack && s <= hi + slack) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> Space::interpolationWeights(double s) const {
  if (kind_ != SpaceKind::kSampledFunction) {
    throw Error(ErrorCode::kInvalidArgument, "interpolation needs a sampled-function space");
  }
  const double slack = 1e-9 * step_;
  if (!(s >= -half_width_ - slack && s <= half_width_ + slack)) {
    throw Error(ErrorCode::kInvalidArgument,
                "evaluation point outside the sampled domain of space " + id_);
  }
  const double u = (s + half_width_) / step_;
  auto i = static_cast<std::size_t>(std::max(0.0, std::floor(u)));
  if (i >= dim_ - 1) i = dim_ - 2;
  double t = u - static_cast<double>(i);
  // Snap to a grid point so point evaluations at samples stay exact.
  if (std::abs(t) < 1e-12) t = 0.0;
  if (std::abs(t - 1.0) < 1e-12) t = 1.0;
  std::vector<std::pair<std::size_t, double>> w;
  if (t < 1.0) w.emplace_back(i, 1.0 - t);
  if (t > 0.0) w.emplace_back(i + 1, t);
  return w;
}

bool sameSpace(const Space& a, const Space& b) noexcept {
  return &a == &b || a.id() == b.id();
}

void requireSameSpace(const Space& a, const Space& b, const char* context) {
  if (!sameSpace(a, b)) {
    throw Error(ErrorCode::kSpaceMismatch,
                std::string(context) + ": space '" + a.id() + "' vs '" + b.id() + "'");
  }
}

Vector::Vector(SpacePtr space, std::vector<Scalar> data)
    : space_(std::move(space)), data_(std::move(data)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "vector without a space");
  if (data_.size() != space_->dim()) {
    throw Error(ErrorCode::kSpaceMismatch,
                "payload of size " + std::to_string(data_.size()) + " for space '" +
                    space_->id() + "' of dimension " + std::to_string(space_->dim()));
  }
  if (!isFinite()) {
    throw Error(ErrorCode::kNonFinite, "non-finite entry in vector of space " + space_->id());
  }
}

Vector::Vector(SpacePtr space, std::vector<Scalar> data, Unchecked) noexcept
    : space_(std::move(space)), data_(std::move(data)) {}

Vector Vector::zero(SpacePtr space) {
  const std::size_t dim = space->dim();
  return Vector(std::move(space), std::vector<Scalar>(dim), Unchecked{});
}

bool Vector::isZero() const noexcept {
  for (const auto& z : data_) {
    if (z != Scalar{}) return false;
  }
  return true;
}

bool Vector::isFinite() const noexcept {
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Scalar Vector::interpolate(double s) const {
  Scalar acc{};
  for (const auto& [i, w] : space_->interpolationWeights(s)) acc += w * data_[i];
  return acc;
}

Vector& Vector::operator+=(const Vector& other) {
  requireSameSpace(*space_, *other.space_, "vector addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  requireSameSpace(*space_, *other.space_, "vector subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Vector& Vector::operator*=(Scalar factor) noexcept {
  for (auto& z : data_) z *= factor;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  return sameSpace(*a.space_, *b.space_) && a.data_ == b.data_;
}

}  // namespace lcx
