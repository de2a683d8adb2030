#include "nfl/refdata.hpp"

#include <fstream>

namespace nfl {

using nlohmann::json;

RefSliceData refslice_from_json(const json& j) {
  RefSliceData d;
  d.name = j.at("name").get<std::string>();
  d.ctx = VarContext::params(j.at("vars").get<std::vector<std::string>>());
  std::vector<Polynomial> gens;
  for (const auto& s : j.at("ideal").get<std::vector<std::string>>())
    gens.push_back(parse_polynomial(s, d.ctx));
  d.ideal = Ideal(d.ctx, std::move(gens));
  for (const auto& s : j.at("excluded").get<std::vector<std::string>>())
    d.excluded.push_back(parse_polynomial(s, d.ctx));
  auto rows = j.at("matrix").get<std::vector<std::vector<std::string>>>();
  d.matrix.ctx = d.ctx;
  d.matrix.rows = rows.size();
  d.matrix.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != d.matrix.cols)
      throw usage_error("reference slice: ragged matrix");
    for (const auto& e : row)
      d.matrix.entries.push_back(parse_polynomial(e, d.ctx));
  }
  return d;
}

RefSliceData refslice_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open reference slice: " + path);
  json j;
  in >> j;
  return refslice_from_json(j);
}

Matroid derive_matroid(const RefSliceData& ref) {
  return matroid_of_parametrized_matrix(ref.matrix, ref.ideal, ref.excluded);
}

}  // namespace nfl
