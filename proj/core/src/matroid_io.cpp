#include "nfl/matroid_io.hpp"

#include <fstream>

#include "nfl/errors.hpp"

namespace nfl {

using nlohmann::json;

Matroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r"))
    throw usage_error("matroid json: need fields n, r");
  uint32_t n = j.at("n").get<uint32_t>();
  uint32_t r = j.at("r").get<uint32_t>();
  bool has_b = j.contains("bases");
  bool has_nb = j.contains("nonbases");
  if (has_b == has_nb)
    throw usage_error("matroid json: need exactly one of bases/nonbases");
  auto sets = j.at(has_b ? "bases" : "nonbases")
                  .get<std::vector<std::vector<uint32_t>>>();
  return has_b ? Matroid::from_bases(n, r, sets)
               : Matroid::from_nonbases(n, r, sets);
}

json matroid_to_json(const Matroid& m) {
  json j;
  j["n"] = m.size();
  j["r"] = m.rank();
  j["bases"] = m.basis_sets();
  return j;
}

Matroid matroid_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open matroid file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw usage_error("matroid file " + path + ": " + e.what());
  }
  return matroid_from_json(j);
}

}  // namespace nfl
