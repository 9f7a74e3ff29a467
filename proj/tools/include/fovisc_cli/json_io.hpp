#pragma once

#include <json.hpp>

#include "fovisc/fitting.hpp"
#include "fovisc/passivity.hpp"

namespace fovisc {

/// Rounds to 12 significant digits so dumped JSON matches the CSV precision.
/// Non-finite values become null.
nlohmann::json json_number(double v);

void to_json(nlohmann::json& j, const FoSlsParams& p);
void from_json(const nlohmann::json& j, FoSlsParams& p);
void to_json(nlohmann::json& j, const PassivityResult& r);
void from_json(const nlohmann::json& j, PassivityResult& r);
void to_json(nlohmann::json& j, const FitResult& r);
void from_json(const nlohmann::json& j, FitResult& r);

BoundMethod parse_bound_method(std::string_view name);

}  // namespace fovisc
