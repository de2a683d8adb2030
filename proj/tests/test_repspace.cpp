#include "doctest.h"
#include "nfl/embedding.hpp"
#include "nfl/matroid_io.hpp"
#include "nfl/refdata.hpp"
#include "nfl/slice_io.hpp"

using namespace nfl;

namespace {
const std::string kData = NFL_TEST_DATA_DIR;
}

TEST_CASE("representation ideals over the full parameter ring") {
  // U_{3,3}: no non-bases, so I~ = <0> and J~ is the principal <det P>
  Matroid u33 = Matroid::from_bases(3, 3, {{1, 2, 3}});
  auto [it, jt] = representation_ideals(u33);
  CHECK(it.generators().empty());
  REQUIRE(jt.generators().size() == 1);
  CHECK(jt.generators()[0].terms().size() == 6);  // 3x3 permanent structure

  // M9: twelve non-basis triples, one minor each
  RefSliceData r9 = refslice_from_file(kData + "/reference/M9.json");
  Matroid m9 = derive_matroid(r9);
  auto [i9, j9] = representation_ideals(m9);
  CHECK(i9.generators().size() == 12);
  CHECK(j9.generators().size() == 1);
}

TEST_CASE("build_slice on the Boolean matroid") {
  Matroid u33 = Matroid::from_bases(3, 3, {{1, 2, 3}});
  Slice s = build_slice(u33);
  CHECK(s.representable);
  CHECK(s.ctx->size() == 0);  // every entry pinned
  CHECK(s.I.generators().empty());
  CHECK(s.exclusions.empty());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(s.P.at(i, j).to_string() == (i == j ? "1" : "0"));
}

TEST_CASE("build_slice pins the chosen basis to the identity") {
  RefSliceData ref = refslice_from_file(kData + "/reference/M11.json");
  Matroid m11 = derive_matroid(ref);
  Slice s = build_slice(m11);
  CHECK(s.representable);
  uint64_t b = s.chosen_basis;
  int col = 0;
  for (uint32_t j = 0; j < 11; ++j)
    if (b >> j & 1) {
      for (int i = 0; i < 3; ++i)
        CHECK(s.P.at(i, j).to_string() == (i == col ? "1" : "0"));
      ++col;
    }
  // saturation is a fixpoint: re-saturating by every exclusion changes nothing
  for (const auto& e : s.exclusions) {
    Ideal again = saturate(s.I, e);
    CHECK(again.groebner().elements.size() == s.I.groebner().elements.size());
    for (std::size_t k = 0; k < again.groebner().elements.size(); ++k)
      CHECK(again.groebner().elements[k].equals(s.I.groebner().elements[k]));
  }
}

TEST_CASE("shrink_embedding: fixpoint and simple pivot") {
  // <x - y^2> in (x, y): keep y, substitute x -> y^2
  auto ctx = VarContext::params({"x", "y"});
  Slice s;
  s.ctx = ctx;
  s.I = Ideal(ctx, {parse_polynomial("x-y^2", ctx)});
  s.matroid = Matroid::from_bases(3, 3, {{1, 2, 3}});
  s.chosen_basis = 0b111;
  s.representable = true;
  s.P.ctx = ctx;
  s.P.rows = 1;
  s.P.cols = 1;
  s.P.entries.push_back(parse_polynomial("x+y", ctx));
  auto [t, emb] = shrink_embedding(s);
  CHECK(t.ctx->size() == 1);
  CHECK(t.ctx->name(0) == "y");
  CHECK(t.I.generators().empty());
  CHECK(emb.images[0].to_string() == "y^2");
  CHECK(emb.images[1].to_string() == "y");
  CHECK(t.P.at(0, 0).to_string() == "y^2+y");

  // already minimal: unchanged, identity map
  auto [t2, emb2] = shrink_embedding(t);
  CHECK(t2.ctx->size() == 1);
  CHECK(emb2.images[0].to_string() == "y");
}

TEST_CASE("M11 slice shrinks to one parameter with modulus a^2-a-1 shape") {
  RefSliceData ref = refslice_from_file(kData + "/reference/M11.json");
  Matroid m11 = derive_matroid(ref);
  Slice s0 = build_slice(m11);
  auto [s, emb] = shrink_embedding(s0);
  REQUIRE(s.ctx->size() == 1);
  const auto& gb = s.I.groebner().elements;
  REQUIRE(gb.size() == 1);
  // quotient ring isomorphic to Z[a]/(a^2-a-1): the modulus is a monic
  // quadratic with discriminant 5
  const auto& f = gb[0];
  CHECK(f.total_degree() == 2);
  Int a2 = 0, a1 = 0, a0 = 0;
  for (const auto& t : f.terms()) {
    if (t.m.degree() == 2) a2 = t.c;
    else if (t.m.degree() == 1) a1 = t.c;
    else a0 = t.c;
  }
  CHECK(abs(a2) == 1);
  CHECK(a1 * a1 - 4 * a2 * a0 == 5);

  // embedding validity: original generators map into the shrunken ideal
  for (const auto& g : s0.I.generators())
    CHECK(s.I.contains(emb.apply(g)));
  // and the shrunken generators pull back into the original ideal
  // (kept variables are a subset of the original names)
  std::vector<std::optional<Polynomial>> back(s.ctx->size());
  for (std::size_t i = 0; i < s.ctx->size(); ++i) {
    std::size_t idx = s0.ctx->index_of(s.ctx->name(i));
    REQUIRE(idx != VarContext::npos);
    back[i] = Polynomial::variable(s0.ctx, idx);
  }
  for (const auto& g : s.I.generators())
    CHECK(s0.I.contains(g.substituted(s0.ctx, back)));
}

TEST_CASE("M9 slice quotient is Z[a]/(a^2-a+1) up to isomorphism") {
  RefSliceData ref = refslice_from_file(kData + "/reference/M9.json");
  Matroid m9 = derive_matroid(ref);
  auto [s, emb] = shrink_embedding(build_slice(m9));
  REQUIRE(s.ctx->size() == 1);
  const auto& gb = s.I.groebner().elements;
  REQUIRE(gb.size() == 1);
  const auto& f = gb[0];
  CHECK(f.total_degree() == 2);
  Int a2 = 0, a1 = 0, a0 = 0;
  for (const auto& t : f.terms()) {
    if (t.m.degree() == 2) a2 = t.c;
    else if (t.m.degree() == 1) a1 = t.c;
    else a0 = t.c;
  }
  CHECK(abs(a2) == 1);
  CHECK(a1 * a1 - 4 * a2 * a0 == -3);  // discriminant of a^2-a+1
}

TEST_CASE("round-trip: matroid of the built slice matrix is the matroid") {
  for (const char* name : {"M9", "M11"}) {
    RefSliceData ref =
        refslice_from_file(kData + "/reference/" + std::string(name) + ".json");
    Matroid m = derive_matroid(ref);
    auto [s, emb] = shrink_embedding(build_slice(m));
    Matroid again = matroid_of_parametrized_matrix(s.P, s.I, s.exclusions);
    CHECK(again == m);
  }
  Matroid u33 = Matroid::from_bases(3, 3, {{1, 2, 3}});
  Slice s = build_slice(u33);
  CHECK(matroid_of_parametrized_matrix(s.P, s.I, s.exclusions) == u33);
}

TEST_CASE("non-representable matroid: slice ideal is the unit ideal") {
  Matroid np = matroid_from_file(kData + "/matroids/non_pappus.json");
  CHECK(np.is_simple());
  Slice s = build_slice(np);
  CHECK(!s.representable);
  CHECK(!is_representable(s));
  CHECK(s.I.is_trivial());
}

TEST_CASE("slice json round-trip") {
  RefSliceData ref = refslice_from_file(kData + "/reference/M11.json");
  Matroid m11 = derive_matroid(ref);
  auto [s, emb] = shrink_embedding(build_slice(m11));
  auto j = slice_to_json(s);
  Slice t = slice_from_json(j);
  CHECK(slice_to_json(t) == j);
  CHECK(t.matroid == s.matroid);
  CHECK(t.chosen_basis == s.chosen_basis);
}

TEST_CASE("fixture dichotomy: every basis minor is nowhere zero on its slice") {
  // on the reference slices, each 3-subset determinant either vanishes
  // identically or vanishes nowhere
  for (const char* name : {"M12_1", "M12_2"}) {
    RefSliceData ref =
        refslice_from_file(kData + "/reference/" + std::string(name) + ".json");
    Ideal sat = saturate_by_all(ref.ideal, ref.excluded);
    Matroid m = derive_matroid(ref);
    for (uint64_t b : m.basis_masks()) {
      Polynomial d = ref.matrix.minor3(b);
      Ideal onb = saturate_by_all(ideal_sum(sat, Ideal(ref.ctx, {d})),
                                  ref.excluded);
      CHECK(onb.is_trivial());
    }
  }
}
