#pragma once

#include <json.hpp>

#include "macpoly/polyring.hpp"

namespace macpoly::detail {

nlohmann::ordered_json mpoly_json(const MPoly& p);
MPoly mpoly_from(const nlohmann::ordered_json& j);

}  // namespace macpoly::detail
