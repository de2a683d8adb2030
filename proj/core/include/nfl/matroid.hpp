#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfl/ints.hpp"

namespace nfl {

// Simple rank-r matroid on ground set {1..n}, n <= 64, bases as bitsets.
// The exchange axiom is verified pairwise on construction.
class Matroid {
 public:
  Matroid() = default;  // empty placeholder; factories build valid matroids

  static Matroid from_bases(uint32_t n, uint32_t r,
                            const std::vector<std::vector<uint32_t>>& bases);
  static Matroid from_nonbases(uint32_t n, uint32_t r,
                               const std::vector<std::vector<uint32_t>>& nonbases);
  static Matroid from_basis_masks(uint32_t n, uint32_t r,
                                  std::vector<uint64_t> bases);

  uint32_t size() const { return n_; }
  uint32_t rank() const { return r_; }
  const std::vector<uint64_t>& basis_masks() const { return bases_; }
  bool is_basis(uint64_t mask) const;
  bool is_simple() const { return simple_; }

  std::vector<uint64_t> nonbasis_masks() const;

  // rank of a subset: max |B cap S| over bases
  uint32_t subset_rank(uint64_t subset) const;
  uint64_t closure(uint64_t subset) const;

  // The unique circuit inside B + i, for a basis B and i outside B.
  uint64_t fundamental_circuit(uint32_t element, uint64_t basis_mask) const;

  // 1-indexed sorted element lists, for I/O.
  std::vector<std::vector<uint32_t>> basis_sets() const;

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && r_ == o.r_ && bases_ == o.bases_;
  }

 private:
  Matroid(uint32_t n, uint32_t r, std::vector<uint64_t> bases);
  void validate_exchange() const;
  void compute_simple();

  uint32_t n_ = 0, r_ = 0;
  std::vector<uint64_t> bases_;
  bool simple_ = false;
};

// Rank-2 flats of a simple rank-3 matroid (the lines), with Mobius data.
struct FlatLattice {
  std::vector<uint64_t> lines;        // maximal collinear sets, sorted
  std::vector<uint32_t> line_sizes;   // |F| per line
  // mu(0, rank-1 flat) = -1; mu(0, line F) = |F| - 1; built for simple rank 3
  std::vector<uint64_t> lines_through(uint32_t element) const;
  std::vector<uint32_t> size_multiset() const;  // sorted line sizes
};

FlatLattice flat_lattice(const Matroid& m);

struct CharPoly {
  // chi(t) = t^3 + c2 t^2 + c1 t + c0
  Int c2, c1, c0;
  std::optional<std::pair<uint32_t, uint32_t>> splitting;  // (d2, d3), d2<=d3
  std::string to_string() const;
};

CharPoly characteristic_polynomial(const Matroid& m);

std::string mask_to_string(uint64_t mask);

}  // namespace nfl
