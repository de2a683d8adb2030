#pragma once

#include <string>

#include "json.hpp"
#include "nfl/matroid.hpp"

namespace nfl {

// {"n": int, "r": int, "bases": [[int,...],...]} or {"nonbases": [...]},
// elements 1-indexed and sorted.
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json matroid_to_json(const Matroid& m);

Matroid matroid_from_file(const std::string& path);

}  // namespace nfl
