#include "nfl/qmatrix.hpp"

#include <set>
#include <sstream>

namespace nfl {

QMatrix::QMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, ring_->zero());
}

void QMatrix::set(std::size_t i, std::size_t j, Polynomial v) {
  a_[i * cols_ + j] = ring_->nf(v);
}

QMatrix QMatrix::transposed() const {
  QMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = at(i, j);
  return t;
}

QMatrix QMatrix::without_row(std::size_t i) const {
  QMatrix r(ring_, rows_ - 1, cols_);
  for (std::size_t k = 0, ko = 0; k < rows_; ++k) {
    if (k == i) continue;
    for (std::size_t j = 0; j < cols_; ++j) r.a_[ko * cols_ + j] = at(k, j);
    ++ko;
  }
  return r;
}

QMatrix QMatrix::without_col(std::size_t j) const {
  QMatrix r(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0, ko = 0; k < cols_; ++k) {
      if (k == j) continue;
      r.a_[i * (cols_ - 1) + ko] = at(i, k);
      ++ko;
    }
  return r;
}

bool QMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(i, j).is_zero()) return false;
  return true;
}

bool QMatrix::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!at(i, j).is_zero()) return false;
  return true;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "[ ") << at(i, j).to_string();
    os << " ]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

std::vector<PolyRow> matrix_rows_with_modulus(const QMatrix& M) {
  const auto& ring = *M.ring();
  const ContextPtr& ctx = ring.context();
  std::vector<PolyRow> rows;
  rows.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    PolyRow r;
    r.reserve(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(M.at(i, j));
    rows.push_back(std::move(r));
  }
  for (const auto& q : ring.modulus().groebner().elements)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      PolyRow r(M.cols(), Polynomial::zero(ctx));
      r[j] = q;
      rows.push_back(std::move(r));
    }
  return rows;
}

}  // namespace

std::vector<std::vector<Polynomial>> row_syzygies(const QMatrix& M) {
  const auto& ring = *M.ring();
  auto rows = matrix_rows_with_modulus(M);
  auto syz = module_syzygies(rows, M.cols(), MonomialOrder::degrevlex(),
                             ring.modulus().options());
  std::vector<std::vector<Polynomial>> out;
  std::set<std::string> seen;
  for (const auto& s : syz) {
    std::vector<Polynomial> head;
    head.reserve(M.rows());
    bool all_zero = true;
    std::string key;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      Polynomial e = ring.nf(s[i]);
      all_zero = all_zero && e.is_zero();
      key += e.to_string();
      key += '|';
      head.push_back(std::move(e));
    }
    if (all_zero || !seen.insert(key).second) continue;
    out.push_back(std::move(head));
  }
#ifndef NDEBUG
  for (const auto& s : out)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      Polynomial acc = ring.zero();
      for (std::size_t i = 0; i < M.rows(); ++i)
        acc = acc + s[i] * M.at(i, j);
      if (!ring.is_zero(acc))
        throw error("row_syzygies: returned row does not annihilate");
    }
#endif
  return out;
}

std::vector<std::vector<Polynomial>> col_syzygies(const QMatrix& M) {
  return row_syzygies(M.transposed());
}

QMatrix row_span_basis(const QMatrix& M) {
  const auto& ring = *M.ring();
  auto rows = matrix_rows_with_modulus(M);
  auto gb = module_groebner(rows, M.cols(), M.cols(),
                            MonomialOrder::degrevlex(),
                            ring.modulus().options());
  std::vector<PolyRow> kept;
  for (auto& row : gb) {
    PolyRow r;
    r.reserve(M.cols());
    bool all_zero = true;
    for (auto& e : row) {
      Polynomial v = ring.nf(e);
      all_zero = all_zero && v.is_zero();
      r.push_back(std::move(v));
    }
    if (!all_zero) kept.push_back(std::move(r));
  }
  QMatrix out(M.ring(), kept.size(), M.cols());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      out.set(i, j, std::move(kept[i][j]));
  return out;
}

}  // namespace nfl
