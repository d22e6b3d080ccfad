#include "lcx/integrand.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "lcx/error.hpp"

namespace lcx {

std::vector<Scalar> parseScalars(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw SpecError(field, "expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw SpecError(field + "[" + std::to_string(i) + "]", "expected a number or [re, im]");
    }
    if (!std::isfinite(out.back().real()) || !std::isfinite(out.back().imag())) {
      throw SpecError(field + "[" + std::to_string(i) + "]", "scalar must be finite");
    }
  }
  return out;
}

IntegrandFn::IntegrandFn(std::string catalog, nlohmann::json params, SpacePtr space,
                         Evaluator eval)
    : catalog_(std::move(catalog)),
      params_(std::move(params)),
      space_(std::move(space)),
      eval_(std::move(eval)) {
  if (!space_ || !eval_) throw Error(ErrorCode::kInvalidArgument, "incomplete integrand");
}

Vector IntegrandFn::operator()(const Point& pt) const {
  Vector v = eval_(pt);
  requireSameSpace(*space_, *v.space(), "integrand value");
  if (!v.isFinite()) {
    throw Error(ErrorCode::kNonFinite, "integrand '" + catalog_ + "' is not finite at x = " +
                                           std::to_string(pt.x));
  }
  return v;
}

IntegrandFn IntegrandFn::composedWith(const LinearMap& T) const {
  requireSameSpace(*space_, *T.source(), "integrand composition");
  IntegrandFn out(catalog_, params_, T.target(),
                  [inner = eval_, T](const Point& pt) { return T(inner(pt)); });
  out.composition_ = composition_;
  out.composition_.push_back(T.name());
  return out;
}

IntegrandFn IntegrandFn::fromCatalog(const std::string& catalog, const nlohmann::json& params,
                                     const SpacePtr& V, const MeasureSpace& X) {
  const nlohmann::json p = params.is_null() ? nlohmann::json::object() : params;
  if (!p.is_object()) throw SpecError("integrand.params", "expected an object");

  auto number = [&](const char* key, double fallback) {
    if (!p.contains(key)) return fallback;
    if (!p[key].is_number()) throw SpecError(std::string("integrand.params.") + key, "expected a number");
    const double v = p[key].get<double>();
    if (!std::isfinite(v)) throw SpecError(std::string("integrand.params.") + key, "must be finite");
    return v;
  };

  Evaluator eval;
  if (catalog == "constant") {
    if (!p.contains("value")) throw SpecError("integrand.params.value", "missing");
    const Vector v(V, parseScalars(p["value"], "integrand.params.value"));
    eval = [v](const Point&) { return v; };
  } else if (catalog == "table") {
    if (!X.isDiscrete()) throw SpecError("integrand.catalog", "table integrands need a discrete measure");
    if (!p.contains("values") || !p["values"].is_array()) {
      throw SpecError("integrand.params.values", "expected one vector per atom");
    }
    if (p["values"].size() != X.atoms().size()) {
      throw SpecError("integrand.params.values", "needs exactly one vector per atom");
    }
    auto table = std::make_shared<std::vector<Vector>>();
    for (std::size_t i = 0; i < p["values"].size(); ++i) {
      const std::string field = "integrand.params.values[" + std::to_string(i) + "]";
      table->emplace_back(V, parseScalars(p["values"][i], field));
    }
    eval = [table](const Point& pt) { return table->at(pt.index); };
  } else if (catalog == "circle") {
    if (V->kind() != SpaceKind::kCoordinates || V->dim() != 2) {
      throw SpecError("space", "circle integrand needs a 2-dimensional coordinate space");
    }
    const double w = number("frequency", 1.0);
    eval = [V, w](const Point& pt) {
      return Vector(V, {Scalar{std::cos(w * pt.x)}, Scalar{std::sin(w * pt.x)}});
    };
  } else if (catalog == "monomials") {
    if (V->kind() != SpaceKind::kCoordinates) {
      throw SpecError("space", "monomials integrand needs a coordinate space");
    }
    eval = [V](const Point& pt) {
      std::vector<Scalar> out(V->dim());
      double power = pt.x;
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = power;
        power *= pt.x;
      }
      return Vector(V, std::move(out));
    };
  } else if (catalog == "gaussian-shift") {
    if (V->kind() != SpaceKind::kSampledFunction) {
      throw SpecError("space", "gaussian-shift integrand needs a sampled-function space");
    }
    const double width = number("width", 1.0);
    if (!(width > 0.0)) throw SpecError("integrand.params.width", "must be positive");
    eval = [V, width](const Point& pt) {
      std::vector<Scalar> out(V->dim());
      for (std::size_t i = 0; i < out.size(); ++i) {
        const double u = (V->gridPoint(i) - pt.x) / width;
        out[i] = std::exp(-u * u);
      }
      return Vector(V, std::move(out));
    };
  } else {
    throw SpecError("integrand.catalog", "unknown catalog id '" + catalog + "'");
  }

  if (p.contains("support")) {
    const auto& s = p["support"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number() ||
        !(s[0].get<double>() <= s[1].get<double>())) {
      throw SpecError("integrand.params.support", "expected [lo, hi] with lo <= hi");
    }
    const double lo = s[0].get<double>();
    const double hi = s[1].get<double>();
    eval = [inner = std::move(eval), V, lo, hi](const Point& pt) {
      return (pt.x < lo || pt.x > hi) ? Vector::zero(V) : inner(pt);
    };
  }
  return IntegrandFn(catalog, p, V, std::move(eval));
}

}  // namespace lcx
