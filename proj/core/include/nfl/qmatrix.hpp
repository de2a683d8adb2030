#pragma once

#include <vector>

#include "nfl/quotient.hpp"

namespace nfl {

// Dense matrix over a quotient ring, entries held in normal form.
class QMatrix {
 public:
  QMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Polynomial v);

  QMatrix transposed() const;
  QMatrix without_row(std::size_t i) const;
  QMatrix without_col(std::size_t j) const;
  bool row_is_zero(std::size_t i) const;
  bool col_is_zero(std::size_t j) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> a_;
};

// Generators of { v in A^rows : v * M = 0 } over A = ring.  Computed by
// lifting to the ambient polynomial ring with the modulus generators
// adjoined as extra relation rows, then projecting the tag components away.
// Every returned row annihilates M exactly (asserted in debug builds).
std::vector<std::vector<Polynomial>> row_syzygies(const QMatrix& M);
std::vector<std::vector<Polynomial>> col_syzygies(const QMatrix& M);

// A matrix with the same row span over A, from a reduced module GB of the
// rows; used by presentation reduction when it shrinks the row count.
QMatrix row_span_basis(const QMatrix& M);

}  // namespace nfl
