#pragma once

#include "json.hpp"
#include "nfl/repspace.hpp"

namespace nfl {

nlohmann::json slice_to_json(const Slice& s);
Slice slice_from_json(const nlohmann::json& j);

}  // namespace nfl
