#include <fstream>

#include "doctest.h"
#include "nfl/matroid.hpp"
#include "nfl/matroid_io.hpp"
#include "nfl/refdata.hpp"

using namespace nfl;

namespace {
const std::string kData = NFL_TEST_DATA_DIR;
}

TEST_CASE("matroid construction basics") {
  // Boolean matroid U_{3,3}
  Matroid u33 = Matroid::from_bases(3, 3, {{1, 2, 3}});
  CHECK(u33.is_simple());
  CHECK(u33.basis_masks().size() == 1);

  // U_{3,4}: all four 3-subsets
  Matroid u34 = Matroid::from_bases(4, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(u34.is_simple());
  CHECK(u34.nonbasis_masks().empty());

  // exchange holds but {3,4} lies in no basis: valid, not simple
  Matroid ns = Matroid::from_bases(4, 3, {{1, 2, 3}, {1, 2, 4}});
  CHECK(!ns.is_simple());

  // exchange violation
  CHECK_THROWS_AS(Matroid::from_bases(5, 3, {{1, 2, 3}, {3, 4, 5}}),
                  invalid_matroid_error);
  // wrong cardinality
  CHECK_THROWS_AS(Matroid::from_bases(4, 3, {{1, 2}}), usage_error);
}

TEST_CASE("from_nonbases complements within the 3-subsets") {
  Matroid u34 = Matroid::from_nonbases(4, 3, {});
  CHECK(u34.basis_masks().size() == 4);
  Matroid m = Matroid::from_nonbases(4, 3, {{1, 2, 3}});
  CHECK(m.basis_masks().size() == 3);
  // round-trip: nonbases of the complement are the given sets
  auto nb = m.nonbasis_masks();
  REQUIRE(nb.size() == 1);
  CHECK(nb[0] == 0b0111);
}

TEST_CASE("matroid json round-trips") {
  Matroid u34 = matroid_from_file(kData + "/matroids/u34.json");
  CHECK(u34.size() == 4);
  CHECK(u34.basis_masks().size() == 4);
  auto j = matroid_to_json(u34);
  CHECK(matroid_from_json(j) == u34);
}

TEST_CASE("fundamental circuits") {
  // uniform matroid: circuits are the 4-subsets
  Matroid u34 = Matroid::from_nonbases(4, 3, {});
  CHECK(u34.fundamental_circuit(4, 0b0111) == 0b1111);
  CHECK_THROWS_AS(u34.fundamental_circuit(1, 0b0111), usage_error);

  // M11 from the reference matrix: B = {1,2,5}, column 3 = col1 + col2,
  // column 6 = col1 + col5
  RefSliceData ref = refslice_from_file(kData + "/reference/M11.json");
  Matroid m11 = derive_matroid(ref);
  REQUIRE(m11.size() == 11);
  uint64_t b = (1u << 0) | (1u << 1) | (1u << 4);  // {1,2,5}
  REQUIRE(m11.is_basis(b));
  CHECK(m11.fundamental_circuit(3, b) == ((1u << 0) | (1u << 1) | (1u << 2)));
  CHECK(m11.fundamental_circuit(6, b) == ((1u << 0) | (1u << 4) | (1u << 5)));
}

TEST_CASE("flat lattice worked examples") {
  Matroid u34 = Matroid::from_nonbases(4, 3, {});
  FlatLattice lat = flat_lattice(u34);
  CHECK(lat.lines.size() == 6);
  for (uint32_t s : lat.line_sizes) CHECK(s == 2);

  Matroid u33 = Matroid::from_bases(3, 3, {{1, 2, 3}});
  CHECK(flat_lattice(u33).lines.size() == 3);

  // M9 = AG(2,3): twelve 3-point lines, four through each point
  RefSliceData ref = refslice_from_file(kData + "/reference/M9.json");
  Matroid m9 = derive_matroid(ref);
  FlatLattice lat9 = flat_lattice(m9);
  CHECK(lat9.lines.size() == 12);
  for (uint32_t s : lat9.line_sizes) CHECK(s == 3);
  for (uint32_t e = 1; e <= 9; ++e) CHECK(lat9.lines_through(e).size() == 4);
}

TEST_CASE("characteristic polynomial and integral splitting") {
  RefSliceData r11 = refslice_from_file(kData + "/reference/M11.json");
  CharPoly chi11 = characteristic_polynomial(derive_matroid(r11));
  REQUIRE(chi11.splitting.has_value());
  CHECK(chi11.splitting->first == 5);
  CHECK(chi11.splitting->second == 5);

  RefSliceData r9 = refslice_from_file(kData + "/reference/M9.json");
  CharPoly chi9 = characteristic_polynomial(derive_matroid(r9));
  REQUIRE(chi9.splitting.has_value());
  CHECK(chi9.splitting->first == 4);
  CHECK(chi9.splitting->second == 4);

  // U_{3,4}: quadratic cofactor t^2-3t+3 has no integer roots
  Matroid u34 = Matroid::from_nonbases(4, 3, {});
  CharPoly chi = characteristic_polynomial(u34);
  CHECK(!chi.splitting.has_value());
  CHECK(chi.to_string() == "t^3-4*t^2+6*t-3");

  // splitting sum rule: d2 + d3 = n - 1
  CHECK(chi11.splitting->first + chi11.splitting->second == 11 - 1);
  CHECK(chi9.splitting->first + chi9.splitting->second == 9 - 1);
}
