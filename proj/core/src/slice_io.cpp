#include "nfl/slice_io.hpp"

#include "nfl/matroid_io.hpp"

namespace nfl {

using nlohmann::json;

json slice_to_json(const Slice& s) {
  json j;
  j["variables"] = s.ctx->names();
  std::vector<std::string> igens;
  for (const auto& g : s.I.generators()) igens.push_back(g.to_string());
  j["I"] = igens;
  std::vector<std::string> excl;
  for (const auto& g : s.exclusions) excl.push_back(g.to_string());
  j["J"] = excl;
  json rows = json::array();
  for (std::size_t i = 0; i < s.P.rows; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.P.cols; ++k)
      row.push_back(s.P.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["P"] = rows;
  j["matroid"] = matroid_to_json(s.matroid);
  std::vector<uint32_t> basis;
  for (uint32_t e = 0; e < s.matroid.size(); ++e)
    if (s.chosen_basis >> e & 1) basis.push_back(e + 1);
  j["chosen_basis"] = basis;
  j["representable"] = s.representable;
  return j;
}

Slice slice_from_json(const json& j) {
  Slice s;
  auto names = j.at("variables").get<std::vector<std::string>>();
  s.ctx = VarContext::params(names);
  std::vector<Polynomial> igens;
  for (const auto& g : j.at("I").get<std::vector<std::string>>())
    igens.push_back(parse_polynomial(g, s.ctx));
  s.I = Ideal(s.ctx, std::move(igens));
  for (const auto& g : j.at("J").get<std::vector<std::string>>())
    s.exclusions.push_back(parse_polynomial(g, s.ctx));
  s.matroid = matroid_from_json(j.at("matroid"));
  auto rows = j.at("P").get<std::vector<std::vector<std::string>>>();
  s.P.ctx = s.ctx;
  s.P.rows = rows.size();
  s.P.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != s.P.cols)
      throw usage_error("slice json: ragged matrix");
    for (const auto& e : row)
      s.P.entries.push_back(parse_polynomial(e, s.ctx));
  }
  uint64_t mask = 0;
  for (uint32_t e : j.at("chosen_basis").get<std::vector<uint32_t>>())
    mask |= uint64_t(1) << (e - 1);
  s.chosen_basis = mask;
  s.representable = j.at("representable").get<bool>();
  return s;
}

}  // namespace nfl
