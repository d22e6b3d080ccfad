#include "lcx/problem.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "lcx/checks.hpp"
#include "lcx/error.hpp"

namespace lcx {
namespace {

using nlohmann::json;

std::string at(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}
std::string at(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

/// Runs fn, re-raising library errors as SpecErrors on `field`.
template <class Fn>
auto guarded(const std::string& field, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(field, e.what());
  }
}

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw SpecError(field, "expected an object");
  if (!j.contains(key)) throw SpecError(at(field, key), "missing");
  return j[key];
}

std::string requireString(const json& j, const char* key, const std::string& field) {
  const json& v = require(j, key, field);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw SpecError(at(field, key), "expected a non-empty string");
  }
  return v.get<std::string>();
}

double toNumber(const json& v, const std::string& field) {
  if (!v.is_number()) throw SpecError(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SpecError(field, "must be finite");
  return d;
}

double requireNumber(const json& j, const char* key, const std::string& field) {
  return toNumber(require(j, key, field), at(field, key));
}

double optionalNumber(const json& j, const char* key, const std::string& field, double fallback) {
  return j.contains(key) ? toNumber(j[key], at(field, key)) : fallback;
}

std::size_t toCount(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SpecError(field, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> toIndices(const json& v, const std::string& field) {
  if (!v.is_array()) throw SpecError(field, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(toCount(v[i], at(field, i)));
  return out;
}

std::vector<double> toNumbers(const json& v, const std::string& field) {
  if (!v.is_array()) throw SpecError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(toNumber(v[i], at(field, i)));
  return out;
}

SpacePtr parseSpace(const json& j) {
  const std::string field = "space";
  const std::string id = requireString(j, "id", field);
  const std::string kind = requireString(j, "kind", field);
  if (id == scalarSpace()->id()) throw SpecError(at(field, "id"), "'C' is reserved for scalars");
  return guarded(field, [&] {
    if (kind == "coordinates") {
      return Space::coordinates(id, toCount(require(j, "dim", field), at(field, "dim")));
    }
    if (kind == "sampled") {
      return Space::sampledFunction(id, requireNumber(j, "half_width", field),
                                    requireNumber(j, "step", field));
    }
    throw SpecError(at(field, "kind"), "expected 'coordinates' or 'sampled'");
  });
}

/// indices, or range [lo, hi] on a sampled space.
std::vector<std::size_t> parseSupport(const json& j, const SpacePtr& V, const std::string& field) {
  if (j.contains("indices")) return toIndices(j["indices"], at(field, "indices"));
  if (j.contains("range")) {
    const auto r = toNumbers(j["range"], at(field, "range"));
    if (r.size() != 2 || !(r[0] <= r[1])) throw SpecError(at(field, "range"), "expected [lo, hi]");
    if (V->kind() != SpaceKind::kSampledFunction) {
      throw SpecError(at(field, "range"), "ranges need a sampled space");
    }
    auto idx = V->gridIndicesIn(r[0], r[1]);
    if (idx.empty()) throw SpecError(at(field, "range"), "contains no grid point");
    return idx;
  }
  std::vector<std::size_t> all(V->dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

MeasureSpace parseMeasure(const json& j) {
  const std::string field = "measure";
  const std::string kind = requireString(j, "kind", field);
  if (kind == "interval") {
    const double a = requireNumber(j, "a", field);
    const double b = requireNumber(j, "b", field);
    if (!(a < b)) throw SpecError(at(field, "b"), "interval needs a < b");
    const std::size_t cells = toCount(require(j, "base_cells", field), at(field, "base_cells"));
    if (cells == 0) throw SpecError(at(field, "base_cells"), "must be >= 1");
    return guarded(field, [&] { return MeasureSpace::interval(a, b, cells); });
  }
  if (kind != "discrete") throw SpecError(at(field, "kind"), "expected 'interval' or 'discrete'");
  const json& atoms = require(j, "atoms", field);
  const std::string afield = at(field, "atoms");
  if (!atoms.is_array() || atoms.empty()) throw SpecError(afield, "expected a non-empty array");
  std::vector<Atom> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string f = at(afield, i);
    Atom a;
    a.id = requireString(atoms[i], "id", f);
    if (!ids.insert(a.id).second) throw SpecError(at(f, "id"), "duplicate atom id");
    const json& w = require(atoms[i], "weight", f);
    if (!w.is_number() || !std::isfinite(w.get<double>()) || w.get<double>() < 0.0) {
      throw SpecError(at(f, "weight"), "weights ≥ 0 and finite required");
    }
    a.weight = w.get<double>();
    a.position = optionalNumber(atoms[i], "position", f, static_cast<double>(i));
    out.push_back(std::move(a));
  }
  return guarded(afield, [&] { return MeasureSpace::discrete(std::move(out)); });
}

LinearMap parseFunctional(const json& j, const SpacePtr& V, const std::string& field) {
  const std::string name = requireString(j, "name", field);
  const std::string kind = requireString(j, "kind", field);
  return guarded(field, [&]() -> LinearMap {
    if (kind == "coordinate") {
      const std::size_t i = toCount(require(j, "index", field), at(field, "index"));
      return LinearMap(name, V, scalarSpace(), CoordinateProjection{{i}});
    }
    if (kind == "point-eval") {
      return LinearMap(name, V, scalarSpace(), PointEvaluation{requireNumber(j, "at", field)});
    }
    if (kind == "weights") {
      return LinearMap(name, V, scalarSpace(),
                       WeightedIntegration{parseScalars(require(j, "weights", field),
                                                        at(field, "weights"))});
    }
    throw SpecError(at(field, "kind"), "expected 'coordinate', 'point-eval' or 'weights'");
  });
}

MapEntry parseMap(const json& j, const SpacePtr& V, const SeminormFamily& family,
                  const std::string& field, std::uint64_t seed) {
  const std::string name = requireString(j, "name", field);
  const std::string kind = requireString(j, "kind", field);
  const bool functional = kind == "point-eval" || kind == "weights";
  SpacePtr target;
  if (functional) {
    target = scalarSpace();
  } else {
    const std::string tid = requireString(j, "target_id", field);
    if (tid == V->id() || tid == scalarSpace()->id()) {
      throw SpecError(at(field, "target_id"), "must name a new space");
    }
    std::size_t dim = 0;
    if (kind == "projection" || kind == "subgrid") {
      dim = parseSupport(j, V, field).size();
    } else if (kind == "matrix") {
      dim = toCount(require(j, "rows", field), at(field, "rows"));
    } else {
      throw SpecError(at(field, "kind"),
                      "expected 'projection', 'subgrid', 'matrix', 'point-eval' or 'weights'");
    }
    target = guarded(at(field, "target_id"), [&] { return Space::coordinates(tid, dim); });
  }

  LinearMap T = guarded(field, [&]() -> LinearMap {
    if (kind == "projection") return LinearMap(name, V, target, CoordinateProjection{parseSupport(j, V, field)});
    if (kind == "subgrid") return LinearMap(name, V, target, SubgridTruncation{parseSupport(j, V, field)});
    if (kind == "matrix") {
      MatrixAction m;
      m.rows = target->dim();
      m.cols = toCount(require(j, "cols", field), at(field, "cols"));
      m.entries = parseScalars(require(j, "entries", field), at(field, "entries"));
      return LinearMap(name, V, target, std::move(m));
    }
    if (kind == "point-eval") return LinearMap(name, V, target, PointEvaluation{requireNumber(j, "at", field)});
    return LinearMap(name, V, target,
                     WeightedIntegration{parseScalars(require(j, "weights", field), at(field, "weights"))});
  });

  std::vector<Seminorm> qs;
  if (j.contains("target_seminorms")) {
    const json& ts = j["target_seminorms"];
    const std::string tf = at(field, "target_seminorms");
    if (!ts.is_array() || ts.empty()) throw SpecError(tf, "expected a non-empty array");
    for (std::size_t i = 0; i < ts.size(); ++i) qs.push_back(parseSeminorm(ts[i], target, at(tf, i)));
  } else {
    std::vector<std::size_t> all(target->dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    qs.push_back(Seminorm::weightedSup(target, all, std::vector<double>(all.size(), 1.0), "sup"));
  }
  SeminormFamily tfam = guarded(at(field, "target_seminorms"), [&] { return SeminormFamily(target, qs); });

  if (j.contains("witness")) {
    const json& w = j["witness"];
    const std::string wf = at(field, "witness");
    if (!w.is_object()) throw SpecError(wf, "expected an object keyed by target seminorm");
    for (const auto& [qname, decl] : w.items()) {
      const std::string df = at(wf, qname);
      if (tfam.find(qname) == tfam.size()) throw SpecError(df, "unknown target seminorm");
      const std::string source = requireString(decl, "source", df);
      const std::size_t k = family.find(source);
      if (k == family.size()) throw SpecError(at(df, "source"), "unknown source seminorm");
      const double factor = optionalNumber(decl, "factor", df, 1.0);
      if (!(factor > 0.0)) throw SpecError(at(df, "factor"), "must be positive");
      Seminorm p = scaleSeminorm(family.member(k), factor).renamed(
          factor == 1.0 ? source : json(factor).dump() + "*" + source);
      T = T.withWitness(qname, std::move(p));
      if (!checkWitness(T, tfam.member(tfam.find(qname)), seed).holds) {
        throw SpecError(df, "declared witness does not dominate q o T");
      }
    }
  }
  return MapEntry{std::move(T), std::move(tfam)};
}

Caps parseCaps(const json& j, json& canonical) {
  Caps caps;
  if (!j.is_null() && !j.is_object()) throw SpecError("caps", "expected an object");
  const json c = j.is_null() ? json::object() : j;
  if (c.contains("max_iter")) caps.max_iter = toCount(c["max_iter"], "caps.max_iter");
  if (c.contains("quad_levels")) caps.quad_levels = static_cast<int>(toCount(c["quad_levels"], "caps.quad_levels"));
  if (c.contains("base_level")) caps.base_level = static_cast<int>(toCount(c["base_level"], "caps.base_level"));
  if (c.contains("approx_tol")) caps.approx_tol = toNumber(c["approx_tol"], "caps.approx_tol");
  if (c.contains("max_steps")) caps.max_steps = toCount(c["max_steps"], "caps.max_steps");
  if (caps.max_iter == 0) throw SpecError("caps.max_iter", "must be >= 1");
  if (caps.quad_levels < 1 || caps.quad_levels > 30) throw SpecError("caps.quad_levels", "must be in [1, 30]");
  if (caps.base_level > caps.quad_levels) throw SpecError("caps.base_level", "exceeds quad_levels");
  if (caps.approx_tol < 0.0) throw SpecError("caps.approx_tol", "must be >= 0");
  canonical = json{{"max_iter", caps.max_iter},     {"quad_levels", caps.quad_levels},
                   {"base_level", caps.base_level}, {"approx_tol", caps.approx_tol},
                   {"max_steps", caps.max_steps}};
  return caps;
}

}  // namespace

Seminorm parseSeminorm(const json& j, const SpacePtr& V, const std::string& field) {
  const std::string name = requireString(j, "name", field);
  const std::string kind = requireString(j, "kind", field);
  const auto idx = parseSupport(j, V, field);
  return guarded(field, [&] {
    if (kind == "functional") {
      const auto c = parseScalars(require(j, "coefficients", field), at(field, "coefficients"));
      return Seminorm::absFunctional(V, idx, c, name);
    }
    std::vector<double> w(idx.size(), 1.0);
    if (j.contains("weights")) {
      w = toNumbers(j["weights"], at(field, "weights"));
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0.0) throw SpecError(at(at(field, "weights"), i), "weights ≥ 0 required");
      }
    }
    if (kind == "sup") return Seminorm::weightedSup(V, idx, w, name);
    if (kind == "l1") return Seminorm::weightedL1(V, idx, w, name);
    throw SpecError(at(field, "kind"), "expected 'sup', 'l1' or 'functional'");
  });
}

IntegrationOptions Problem::integrationOptions() const {
  IntegrationOptions o;
  o.tol = tol;
  o.approx_tol = caps.approx_tol;
  o.max_iter = caps.max_iter;
  o.quad_levels = caps.quad_levels;
  o.base_level = caps.base_level;
  o.max_steps = caps.max_steps;
  return o;
}

Problem parseProblem(const json& spec) {
  if (!spec.is_object()) throw SpecError("", "problem spec must be a JSON object");
  const std::string name = spec.contains("name") ? requireString(spec, "name", "") : "unnamed";
  SpacePtr V = parseSpace(require(spec, "space", ""));

  const json& sj = require(spec, "seminorms", "");
  if (!sj.is_array() || sj.empty()) throw SpecError("seminorms", "expected a non-empty array");
  std::vector<Seminorm> members;
  std::set<std::string> names;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    members.push_back(parseSeminorm(sj[i], V, at("seminorms", i)));
    if (!names.insert(members.back().name()).second) {
      throw SpecError(at(at("seminorms", i), "name"), "duplicate seminorm name");
    }
  }
  SeminormFamily family(V, std::move(members));
  if (!family.separatesPoints()) throw SpecError("seminorms", "family does not separate points");

  MeasureSpace X = parseMeasure(require(spec, "measure", ""));
  const json& ij = require(spec, "integrand", "");
  const std::string catalog = requireString(ij, "catalog", "integrand");
  IntegrandFn f = guarded("integrand", [&] {
    return IntegrandFn::fromCatalog(catalog, ij.contains("params") ? ij["params"] : json::object(), V, X);
  });

  std::vector<LinearMap> dual;
  if (spec.contains("dual")) {
    const json& d = spec["dual"];
    if (!d.is_array()) throw SpecError("dual", "expected an array");
    for (std::size_t i = 0; i < d.size(); ++i) dual.push_back(parseFunctional(d[i], V, at("dual", i)));
  }

  std::vector<MapEntry> maps;
  if (spec.contains("maps")) {
    const json& m = spec["maps"];
    if (!m.is_array()) throw SpecError("maps", "expected an array");
    for (std::size_t i = 0; i < m.size(); ++i) {
      maps.push_back(parseMap(m[i], V, family, at("maps", i), 0x5eed + i));
    }
  }

  const double tol = spec.contains("tol") ? toNumber(spec["tol"], "tol") : 1e-6;
  if (!(tol > 0.0)) throw SpecError("tol", "must be > 0");
  json caps_json;
  Caps caps = parseCaps(spec.contains("caps") ? spec["caps"] : json(), caps_json);

  json expected = spec.contains("expected") ? spec["expected"] : json::object();
  if (!expected.is_object()) throw SpecError("expected", "expected an object");
  if (expected.contains("integral")) {
    parseScalars(expected["integral"], "expected.integral");
    if (!expected.contains("source") || !expected["source"].is_string()) {
      throw SpecError("expected.source", "expected values must name their source");
    }
  }

  json canonical = spec;
  canonical["name"] = name;
  canonical["tol"] = tol;
  canonical["caps"] = caps_json;
  canonical["expected"] = expected;
  if (!canonical.contains("dual")) canonical["dual"] = json::array();
  if (!canonical.contains("maps")) canonical["maps"] = json::array();

  return Problem{.name = name,
                 .space = V,
                 .family = std::move(family),
                 .measure = std::move(X),
                 .integrand = std::move(f),
                 .dual = std::move(dual),
                 .maps = std::move(maps),
                 .tol = tol,
                 .caps = caps,
                 .expected = std::move(expected),
                 .spec = std::move(canonical)};
}

Problem loadProblem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", "cannot open " + path.string());
  json spec;
  try {
    in >> spec;
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  return parseProblem(spec);
}

}  // namespace lcx
