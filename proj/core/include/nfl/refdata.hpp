#pragma once

#include "json.hpp"
#include "nfl/repspace.hpp"

namespace nfl {

// A reference representation matrix over an explicitly given base locus
// V(ideal) \ V(excluded...), as bundled under data/reference.  These are the
// source of truth for the committed matroid fixtures: the matroid is derived
// from the matrix, never typed in by hand.
struct RefSliceData {
  std::string name;
  ContextPtr ctx;
  Ideal ideal;
  std::vector<Polynomial> excluded;
  ParametrizedMatrix matrix;
};

RefSliceData refslice_from_json(const nlohmann::json& j);
RefSliceData refslice_from_file(const std::string& path);

Matroid derive_matroid(const RefSliceData& ref);

}  // namespace nfl
