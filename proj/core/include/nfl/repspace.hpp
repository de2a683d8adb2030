#pragma once

#include <memory>

#include "nfl/ideal.hpp"
#include "nfl/matroid.hpp"

namespace nfl {

// r x n matrix over a parameter context; entries are 0/1 exactly where the
// slice construction dictates, parameters elsewhere.
struct ParametrizedMatrix {
  ContextPtr ctx;
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
  Polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

  // det of the 3x3 submatrix on columns (1-indexed mask), cofactor expansion
  Polynomial minor3(uint64_t column_mask) const;
};

// A quasi-affine representation slice V(I) \ V(J) over Spec Z.  The excluded
// set is the union of the exclusion hypersurfaces: a point of the slice
// satisfies every generator of I and makes every exclusion nonzero.
struct Slice {
  ContextPtr ctx;  // parameter block only
  Ideal I;         // saturated by every basis determinant
  std::vector<Polynomial> exclusions;  // NF'd non-unit basis determinants
  ParametrizedMatrix P;
  Matroid matroid;
  uint64_t chosen_basis = 0;
  bool representable = false;

  std::string describe() const;  // "V(...) \ V(...) ..."
};

using SlicePtr = std::shared_ptr<const Slice>;

// The textbook representation ideals over the full polynomial ring
// Z[p_ij]: I~ spanned by the non-basis minors, J~ principal, the product of
// all basis minors.
std::pair<Ideal, Ideal> representation_ideals(const Matroid& m);

// Slice construction: fix the chosen basis to the identity, zero the
// entries off the fundamental circuits, pin the first nonzero entry of every
// column and row to 1, then saturate by every basis determinant and rebuild
// the exclusions via normal forms.
Slice build_slice(const Matroid& m, uint64_t basis_mask,
                  const GroebnerOptions& opts = {});
Slice build_slice(const Matroid& m, const GroebnerOptions& opts = {});

bool is_representable(const Slice& s);

// Derive the matroid of a parametrized matrix over a slice-like base:
// a column set is a basis iff its determinant does not vanish identically
// on V(I) \ V(exclusions).
Matroid matroid_of_parametrized_matrix(const ParametrizedMatrix& P,
                                       const Ideal& I,
                                       const std::vector<Polynomial>& exclusions);

}  // namespace nfl
