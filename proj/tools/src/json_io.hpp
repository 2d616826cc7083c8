#pragma once

#include <nlohmann/json.hpp>

#include <orthokern/identities.hpp>

namespace orthokern::cli {

nlohmann::json params_json(const ParamMap& params);
nlohmann::json report_to_json(const IdentityReport& r);

}  // namespace orthokern::cli
