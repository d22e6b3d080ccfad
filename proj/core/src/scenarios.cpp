#include "lcx/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace lcx {
namespace {

using nlohmann::json;

json cplx(double re, double im) { return json::array({re, im}); }

json sup(const std::string& name, json indices) {
  return {{"name", name}, {"kind", "sup"}, {"indices", std::move(indices)}};
}

json constantProb() {
  return {
      {"name", "constant-prob"},
      {"space", {{"id", "V3"}, {"kind", "coordinates"}, {"dim", 3}}},
      {"seminorms",
       {sup("sup", {0, 1, 2}),
        {{"name", "l1"}, {"kind", "l1"}, {"indices", {0, 1, 2}}, {"weights", {1, 0.5, 0.25}}},
        {{"name", "diff01"}, {"kind", "functional"}, {"indices", {0, 1}}, {"coefficients", {1, -1}}}}},
      {"measure",
       {{"kind", "discrete"},
        {"atoms",
         {{{"id", "a"}, {"weight", 0.25}, {"position", 0.0}},
          {{"id", "b"}, {"weight", 0.25}, {"position", 1.0}},
          {{"id", "c"}, {"weight", 0.5}, {"position", 2.0}}}}}},
      {"integrand", {{"catalog", "constant"}, {"params", {{"value", {0.5, cplx(-1.25, 0.75), 2.0}}}}}},
      {"dual",
       {{{"name", "e0"}, {"kind", "coordinate"}, {"index", 0}},
        {{"name", "mix"}, {"kind", "weights"}, {"weights", {1.0, 0.5, cplx(0.0, 0.25)}}}}},
      {"maps",
       {{{"name", "drop-middle"},
         {"kind", "projection"},
         {"indices", {0, 2}},
         {"target_id", "W2"},
         {"target_seminorms", {sup("sup", {0, 1})}},
         {"witness", {{"sup", {{"source", "sup"}}}}}}}},
      {"tol", 1e-6},
      {"expected", {{"integral", {0.5, cplx(-1.25, 0.75), 2.0}}, {"source", "exact"}}},
  };
}

json cancellation() {
  return {
      {"name", "cancellation"},
      {"space", {{"id", "V2"}, {"kind", "coordinates"}, {"dim", 2}}},
      {"seminorms",
       {sup("sup", {0, 1}), {{"name", "l1"}, {"kind", "l1"}, {"indices", {0, 1}}}}},
      {"measure",
       {{"kind", "discrete"},
        {"atoms",
         {{{"id", "a"}, {"weight", 1.0}, {"position", 0.0}},
          {{"id", "b"}, {"weight", 1.0}, {"position", 1.0}}}}}},
      {"integrand",
       {{"catalog", "table"},
        {"params", {{"values", {{1.5, cplx(0.5, -0.25)}, {-1.5, cplx(-0.5, 0.25)}}}}}}},
      {"dual",
       {{{"name", "e0"}, {"kind", "coordinate"}, {"index", 0}},
        {{"name", "e1"}, {"kind", "coordinate"}, {"index", 1}}}},
      {"maps",
       {{{"name", "shear"},
         {"kind", "matrix"},
         {"rows", 2},
         {"cols", 2},
         {"entries", {1.0, 1.0, 0.0, 2.0}},
         {"target_id", "W2"},
         {"target_seminorms", {sup("sup", {0, 1})}}}}},
      {"tol", 1e-6},
      {"expected", {{"integral", {0.0, 0.0}}, {"source", "exact"}}},
  };
}

json circle() {
  return {
      {"name", "circle"},
      {"space", {{"id", "R2"}, {"kind", "coordinates"}, {"dim", 2}}},
      {"seminorms", {sup("p1", {0}), sup("p2", {1})}},
      {"measure", {{"kind", "interval"}, {"a", 0.0}, {"b", 3.141592653589793}, {"base_cells", 64}}},
      {"integrand", {{"catalog", "circle"}, {"params", json::object()}}},
      {"dual",
       {{{"name", "cos"}, {"kind", "coordinate"}, {"index", 0}},
        {{"name", "sin"}, {"kind", "coordinate"}, {"index", 1}},
        {{"name", "sum"}, {"kind", "weights"}, {"weights", {1.0, 1.0}}}}},
      {"maps",
       {{{"name", "first"},
         {"kind", "projection"},
         {"indices", {0}},
         {"target_id", "R1a"},
         {"target_seminorms", {sup("abs", {0})}},
         {"witness", {{"abs", {{"source", "p1"}}}}}},
        {{"name", "second"},
         {"kind", "projection"},
         {"indices", {1}},
         {"target_id", "R1b"},
         {"target_seminorms", {sup("abs", {0})}},
         {"witness", {{"abs", {{"source", "p2"}}}}}}}},
      {"tol", 1e-6},
      {"caps", {{"approx_tol", 1e-3}}},
      {"expected", {{"integral", {0.0, 2.0}}, {"source", "closed-form"}}},
  };
}

json frechetGauss() {
  const double K = 3.0;
  const double step = 0.25;
  json expected = json::array();
  for (int i = 0; i <= 24; ++i) {
    const double s = -K + step * i;
    expected.push_back(0.5 * std::sqrt(std::numbers::pi) * (std::erf(s) - std::erf(s - 1.0)));
  }
  return {
      {"name", "frechet-gauss"},
      {"space", {{"id", "C[-3,3]"}, {"kind", "sampled"}, {"half_width", K}, {"step", step}}},
      {"seminorms",
       {{{"name", "p1"}, {"kind", "sup"}, {"range", {-1.0, 1.0}}},
        {{"name", "p2"}, {"kind", "sup"}, {"range", {-2.0, 2.0}}},
        {{"name", "p3"}, {"kind", "sup"}, {"range", {-3.0, 3.0}}}}},
      {"measure", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}, {"base_cells", 16}}},
      {"integrand", {{"catalog", "gaussian-shift"}, {"params", {{"width", 1.0}}}}},
      {"dual",
       {{{"name", "at0"}, {"kind", "point-eval"}, {"at", 0.0}},
        {{"name", "at0.5"}, {"kind", "point-eval"}, {"at", 0.5}},
        {{"name", "at-2.1"}, {"kind", "point-eval"}, {"at", -2.1}}}},
      {"maps",
       {{{"name", "restrict-1"},
         {"kind", "subgrid"},
         {"range", {-1.0, 1.0}},
         {"target_id", "grid[-1,1]"},
         {"witness", {{"sup", {{"source", "p1"}}}}}},
        {{"name", "eval1.5"}, {"kind", "point-eval"}, {"at", 1.5}}}},
      {"tol", 1e-6},
      {"caps", {{"approx_tol", 1e-3}}},
      {"expected", {{"integral", expected}, {"source", "closed-form"}}},
  };
}

json sequenceSpace() {
  json seminorms = json::array();
  json expected = json::array();
  for (int i = 0; i < 6; ++i) {
    seminorms.push_back(sup("p" + std::to_string(i + 1), {i}));
    expected.push_back(1.0 / (i + 2));
  }
  return {
      {"name", "sequence-space"},
      {"space", {{"id", "C^6"}, {"kind", "coordinates"}, {"dim", 6}}},
      {"seminorms", seminorms},
      {"measure", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}, {"base_cells", 64}}},
      {"integrand", {{"catalog", "monomials"}, {"params", json::object()}}},
      {"dual", {{{"name", "e2"}, {"kind", "coordinate"}, {"index", 2}}}},
      {"maps",
       {{{"name", "head3"},
         {"kind", "projection"},
         {"indices", {0, 1, 2}},
         {"target_id", "C^3"},
         {"target_seminorms", {sup("sup", {0, 1, 2})}}}}},
      {"tol", 1e-6},
      {"caps", {{"approx_tol", 1e-3}}},
      {"expected", {{"integral", expected}, {"source", "closed-form"}}},
  };
}

json simpleReplay() {
  const json u = {2.0, -1.0};
  const json w = {cplx(0.5, 0.5), 4.0};
  const json zero = {0.0, 0.0};
  return {
      {"name", "simple-replay"},
      {"space", {{"id", "V2"}, {"kind", "coordinates"}, {"dim", 2}}},
      {"seminorms",
       {sup("sup", {0, 1}), {{"name", "l1"}, {"kind", "l1"}, {"indices", {0, 1}}}}},
      {"measure",
       {{"kind", "discrete"},
        {"atoms",
         {{{"id", "a"}, {"weight", 0.125}, {"position", 0.0}},
          {{"id", "b"}, {"weight", 0.375}, {"position", 1.0}},
          {{"id", "c"}, {"weight", 0.25}, {"position", 2.0}},
          {{"id", "d"}, {"weight", 0.25}, {"position", 3.0}},
          {{"id", "ghost"}, {"weight", 0.0}, {"position", 4.0}}}}}},
      {"integrand", {{"catalog", "table"}, {"params", {{"values", {u, w, u, zero, {1e6, -1e6}}}}}}},
      {"dual", {{{"name", "e1"}, {"kind", "coordinate"}, {"index", 1}}}},
      {"maps",
       {{{"name", "swap"},
         {"kind", "matrix"},
         {"rows", 2},
         {"cols", 2},
         {"entries", {0.0, 1.0, 1.0, 0.0}},
         {"target_id", "W2"},
         {"target_seminorms", {sup("sup", {0, 1})}}}}},
      {"tol", 1e-6},
      {"expected", {{"integral", {cplx(0.9375, 0.1875), 1.125}}, {"source", "exact"}}},
  };
}

}  // namespace

std::vector<json> listScenarios() {
  return {constantProb(), cancellation(), circle(), frechetGauss(), sequenceSpace(), simpleReplay()};
}

std::optional<json> findScenario(std::string_view name) {
  for (auto& s : listScenarios()) {
    if (s["name"].get<std::string>() == name) return s;
  }
  return std::nullopt;
}

json randomDiscreteProblem(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int atoms = pick(2, 20);
  const int dim = pick(1, 8);
  const int members = pick(1, 4);

  // 32 mass units dealt to random atoms; atoms that get none are null atoms.
  // From three atoms on, the last one is always null.
  std::vector<int> units(atoms, 0);
  const int massive = atoms >= 3 ? atoms - 1 : atoms;
  for (int u = 0; u < 32; ++u) ++units[pick(0, massive - 1)];

  auto dyadic = [&](int span, int denom) { return static_cast<double>(pick(-span, span)) / denom; };
  auto value = [&] {
    json v = json::array();
    const bool zero = pick(0, 7) == 0;
    for (int k = 0; k < dim; ++k) {
      v.push_back(zero ? cplx(0.0, 0.0) : cplx(dyadic(32, 16), dyadic(32, 16)));
    }
    return v;
  };

  json atom_list = json::array();
  json values = json::array();
  for (int i = 0; i < atoms; ++i) {
    atom_list.push_back({{"id", "x" + std::to_string(i)},
                         {"weight", units[i] / 32.0},
                         {"position", static_cast<double>(i)}});
    values.push_back(value());
  }

  auto subset = [&] {
    json idx = json::array();
    for (int k = 0; k < dim; ++k) {
      if (pick(0, 1) == 1) idx.push_back(k);
    }
    if (idx.empty()) idx.push_back(pick(0, dim - 1));
    return idx;
  };
  auto weights = [&](std::size_t n) {
    json w = json::array();
    for (std::size_t i = 0; i < n; ++i) w.push_back(pick(1, 8) / 4.0);
    return w;
  };

  json seminorms = json::array();
  const int full = pick(0, members - 1);
  for (int s = 0; s < members; ++s) {
    const std::string name = "p" + std::to_string(s + 1);
    if (s == full) {
      json all = json::array();
      for (int k = 0; k < dim; ++k) all.push_back(k);
      seminorms.push_back({{"name", name}, {"kind", "l1"}, {"indices", all}, {"weights", weights(dim)}});
      continue;
    }
    json idx = subset();
    switch (pick(0, 2)) {
      case 0:
        seminorms.push_back({{"name", name}, {"kind", "sup"}, {"indices", idx}, {"weights", weights(idx.size())}});
        break;
      case 1:
        seminorms.push_back({{"name", name}, {"kind", "l1"}, {"indices", idx}, {"weights", weights(idx.size())}});
        break;
      default: {
        json c = json::array();
        for (std::size_t i = 0; i < idx.size(); ++i) c.push_back(cplx(dyadic(4, 4), dyadic(4, 4)));
        c[0] = cplx(1.0, 0.0);
        seminorms.push_back({{"name", name}, {"kind", "functional"}, {"indices", idx}, {"coefficients", c}});
      }
    }
  }

  json coeffs = json::array();
  for (int k = 0; k < dim; ++k) coeffs.push_back(cplx(dyadic(8, 4), dyadic(8, 4)));
  json dual = {{{"name", "e" + std::to_string(pick(0, dim - 1))}, {"kind", "coordinate"}},
               {{"name", "mix"}, {"kind", "weights"}, {"weights", coeffs}}};
  dual[0]["index"] = std::stoi(dual[0]["name"].get<std::string>().substr(1));

  const int rows = pick(1, 3);
  json entries = json::array();
  for (int i = 0; i < rows * dim; ++i) entries.push_back(cplx(dyadic(4, 2), dyadic(4, 2)));
  json maps = {{{"name", "project"},
                {"kind", "projection"},
                {"indices", subset()},
                {"target_id", "P"}},
               {{"name", "matrix"},
                {"kind", "matrix"},
                {"rows", rows},
                {"cols", dim},
                {"entries", entries},
                {"target_id", "M"},
                {"target_seminorms",
                 {{{"name", "l1"}, {"kind", "l1"}}, {{"name", "sup"}, {"kind", "sup"}}}}}};

  return {
      {"name", "random-" + std::to_string(seed)},
      {"space", {{"id", "V"}, {"kind", "coordinates"}, {"dim", dim}}},
      {"seminorms", seminorms},
      {"measure", {{"kind", "discrete"}, {"atoms", atom_list}}},
      {"integrand", {{"catalog", "table"}, {"params", {{"values", values}}}}},
      {"dual", dual},
      {"maps", maps},
      {"tol", 1e-6},
  };
}

}  // namespace lcx
