#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nfl/polynomial.hpp"

namespace nfl {

struct GroebnerOptions {
  // Completion aborts with a resource_error beyond these caps.
  uint64_t max_pairs = 1'000'000;
  std::size_t max_coeff_bits = 100'000;
  bool trace = false;
};

struct GroebnerStats {
  uint64_t pairs_processed = 0;
  uint64_t pairs_skipped = 0;
  std::size_t basis_size = 0;
};

// A strong Groebner basis over Z together with the order it was computed
// under.  Elements are auto-reduced, have positive leading coefficients and
// are sorted by ascending leading term.
struct GBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order = MonomialOrder::degrevlex();

  bool is_trivial() const {  // ideal = <1>
    return elements.size() == 1 && elements[0].is_one();
  }
  bool is_zero() const { return elements.empty(); }
};

GBasis strong_groebner_basis(const std::vector<Polynomial>& gens,
                             MonomialOrder ord,
                             const GroebnerOptions& opts = {},
                             GroebnerStats* stats = nullptr);

// Completion seeded with a basis already known to be a strong GB under
// `base.order`; only pairs involving the new generators are scheduled.
GBasis groebner_extend(const GBasis& base, const std::vector<Polynomial>& extra,
                       const GroebnerOptions& opts = {},
                       GroebnerStats* stats = nullptr);

// Strong normal form: NF(f, GB) = 0 iff f lies in the ideal.  Deterministic;
// coefficients of irreducible terms are canonical residues.
Polynomial normal_form(const Polynomial& f, const GBasis& gb);

// Full strong-basis check (every S- and G-polynomial reduces to zero).
// Test-suite instrument, not used on production paths.
bool is_strong_basis(const GBasis& gb, const GroebnerOptions& opts = {});

// ---- free-module layer -----------------------------------------------------
//
// Rows are vectors of length `width` over the polynomial ring.  The module
// order is term-over-position within two position blocks: positions below
// `pos_split` dominate, which is the elimination device behind syzygies.

using PolyRow = std::vector<Polynomial>;

// Strong GB of the row module under (ord, pos_split).
std::vector<PolyRow> module_groebner(const std::vector<PolyRow>& rows,
                                     std::size_t width, std::size_t pos_split,
                                     MonomialOrder ord,
                                     const GroebnerOptions& opts = {});

// Generators of the syzygy module { a : sum_i a_i * rows_i = 0 } over the
// ambient polynomial ring, by tagging each row with a unit vector and
// eliminating the leading position block.
std::vector<PolyRow> module_syzygies(const std::vector<PolyRow>& rows,
                                     std::size_t width, MonomialOrder ord,
                                     const GroebnerOptions& opts = {});

}  // namespace nfl
