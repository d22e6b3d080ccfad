#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcx/approximant.hpp"
#include "lcx/bochner.hpp"
#include "lcx/integrand.hpp"
#include "lcx/linear_map.hpp"
#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/simple_function.hpp"

namespace lcx {

enum class Tri { kTrue, kFalse, kNotEstablished };
std::string_view toString(Tri value) noexcept;

struct IntegralBound {
  /// kNotEstablished when some quadrature hit its refinement cap.
  Tri holds = Tri::kTrue;
  std::vector<std::string> seminorms;
  std::vector<double> values;
  std::vector<bool> converged;
};
/// integral p(f) d mu for every family member.
IntegralBound isIntegrallyBounded(const IntegrandFn& f, const MeasureSpace& X,
                                  const SeminormFamily& family, double tol,
                                  int quad_levels = 24);

struct EssentialBound {
  bool holds = true;
  /// sup of p(f(x)) over the sample points of X minus its null set.
  std::vector<double> sup;
};
EssentialBound isEssentiallyBounded(const IntegrandFn& f, const MeasureSpace& X,
                                    const SeminormFamily& family, int level = 0);

struct CertificateReport {
  std::vector<Certificate> entries;
  bool pass = false;
};
/// Recomputes every certificate from scratch. A result that did not
/// converge never passes.
CertificateReport certify(const IntegralResult& result, const IntegrandFn& f,
                          const MeasureSpace& X, const SeminormFamily& family, double tol,
                          int quad_levels = 24);

struct WitnessCheck {
  std::string target;
  std::string source;
  bool declared = false;
  /// max over probe vectors of q(T v) - p(v); <= 0 when the witness holds.
  double worst_gap = 0.0;
  bool holds = true;
};
/// Probes q(T v) <= p(v) on every basis vector and `samples` seeded random
/// vectors of T's source space.
WitnessCheck checkWitness(const LinearMap& T, const Seminorm& q, std::uint64_t seed,
                          std::size_t samples = 64);

struct PushforwardEntry {
  std::string seminorm;
  double delta = 0.0;
  bool pass = false;
};
struct PushforwardReport {
  std::string map{};
  Vector image_of_integral;  // T(integral f)
  Vector integral_of_image;  // integral T(f)
  std::vector<PushforwardEntry> entries{};
  std::vector<WitnessCheck> witnesses{};
  Status status = Status::kConverged;
  bool pass = false;
};
/// Compares T(integral f) with integral T o f in every q of target_family.
/// `integral_f` is the already computed integral of f.
PushforwardReport pushforwardCheck(const LinearMap& T, const IntegrandFn& f, const MeasureSpace& X,
                                   const Vector& integral_f, const SeminormFamily& target_family,
                                   const IntegrationOptions& options, std::uint64_t seed = 0);
PushforwardReport pushforwardCheck(const LinearMap& T, const IntegrandFn& f, const MeasureSpace& X,
                                   const SeminormFamily& source_family,
                                   const SeminormFamily& target_family,
                                   const IntegrationOptions& options, std::uint64_t seed = 0);

struct FunctionalReport {
  std::string functional;
  Scalar of_integral;  // alpha(integral f)
  Scalar integral_of;  // integral alpha(f) d mu by scalar quadrature
  double delta = 0.0;
  bool converged = true;
  bool pass = false;
};
FunctionalReport functionalCheck(const LinearMap& alpha, const IntegrandFn& f,
                                 const MeasureSpace& X, const Vector& integral_f, double tol,
                                 int quad_levels = 24);

struct ConvexReport {
  bool precondition = true;
  bool pass = false;
  std::vector<double> coefficients;
  /// Mass outside every piece, counted as a coefficient of the zero vector.
  double remainder = 0.0;
  double sum = 0.0;
  std::string message;
};
/// Pieces must partition X and mu(X) must be 1; PASS iff the coefficients
/// mu(A_k) are >= 0 and sum to 1 within 1e-12.
ConvexReport convexCombinationCheck(const SimpleFn& s, const MeasureSpace& X);
/// For an approximant step: additionally every piece value equals f at its
/// recorded witness, and the uncovered remainder, where s = 0, only holds
/// points with p(f(x)) <= delta.
ConvexReport convexCombinationCheck(const ApproxStep& step, const IntegrandFn& f,
                                    const MeasureSpace& X);

}  // namespace lcx
