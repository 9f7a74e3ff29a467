#include "fovisc_cli/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fovisc/error.hpp"
#include "fovisc/series_io.hpp"

namespace fovisc {

using nlohmann::json;

namespace {

double number_or_nan(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

BoundMethod parse_bound_method(std::string_view name) {
  for (auto m : {BoundMethod::closed_form_odd_n, BoundMethod::asymptotic,
                 BoundMethod::sufficient, BoundMethod::grid})
    if (to_string(m) == name) return m;
  throw DomainError("unknown bound method: " + std::string(name));
}

void to_json(json& j, const FoSlsParams& p) {
  j = {{"k0", json_number(p.k0)},
       {"k1", json_number(p.k1)},
       {"b1", json_number(p.b1)},
       {"alpha", json_number(p.alpha)}};
}

void from_json(const json& j, FoSlsParams& p) {
  p.k0 = j.at("k0").get<double>();
  p.k1 = j.at("k1").get<double>();
  p.b1 = j.at("b1").get<double>();
  p.alpha = j.at("alpha").get<double>();
}

void to_json(json& j, const PassivityResult& r) {
  j = {{"b_min", json_number(r.b_min)},
       {"omega_star", json_number(r.omega_star)},
       {"method", std::string(to_string(r.method))},
       {"margin_ok", r.margin_ok ? json(*r.margin_ok) : json(nullptr)}};
}

void from_json(const json& j, PassivityResult& r) {
  r.b_min = number_or_nan(j.at("b_min"));
  r.omega_star = number_or_nan(j.at("omega_star"));
  r.method = parse_bound_method(j.at("method").get<std::string>());
  r.margin_ok.reset();
  if (j.contains("margin_ok") && !j.at("margin_ok").is_null())
    r.margin_ok = j.at("margin_ok").get<bool>();
}

void to_json(json& j, const FitResult& r) {
  json each = json::array();
  for (double e : r.nrmse_each) each.push_back(json_number(e));
  j = {{"params", r.params},
       {"n_mem", r.n_mem},
       {"nrmse", json_number(r.nrmse)},
       {"nrmse_each", each},
       {"bound", json_number(r.bound)},
       {"passivity_ok", r.passivity_ok},
       {"objective_evals", r.objective_evals},
       {"converged", r.converged}};
}

void from_json(const json& j, FitResult& r) {
  r.params = j.at("params").get<FoSlsParams>();
  r.n_mem = j.at("n_mem").get<int>();
  r.nrmse = number_or_nan(j.at("nrmse"));
  r.nrmse_each.clear();
  for (const auto& e : j.at("nrmse_each")) r.nrmse_each.push_back(number_or_nan(e));
  r.bound = number_or_nan(j.at("bound"));
  r.passivity_ok = j.at("passivity_ok").get<bool>();
  r.objective_evals = j.at("objective_evals").get<long>();
  r.converged = j.at("converged").get<bool>();
}

}  // namespace fovisc
