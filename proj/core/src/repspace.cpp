#include "nfl/repspace.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace nfl {

Polynomial ParametrizedMatrix::minor3(uint64_t column_mask) const {
  if (std::popcount(column_mask) != 3 || rows != 3)
    throw usage_error("minor3: need a 3-column mask on a 3-row matrix");
  std::size_t c[3];
  int k = 0;
  for (uint32_t j = 0; j < cols; ++j)
    if (column_mask >> j & 1) c[k++] = j;
  auto det2 = [&](std::size_t r1, std::size_t r2, std::size_t c1,
                  std::size_t c2) {
    return at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
  };
  return at(0, c[0]) * det2(1, 2, c[1], c[2]) -
         at(0, c[1]) * det2(1, 2, c[0], c[2]) +
         at(0, c[2]) * det2(1, 2, c[0], c[1]);
}

std::string Slice::describe() const {
  std::ostringstream os;
  os << "V(";
  const auto& gens = I.has_cached_basis() || !I.generators().empty()
                         ? I.groebner().elements
                         : I.generators();
  if (gens.empty()) os << "0";
  for (std::size_t i = 0; i < gens.size(); ++i)
    os << (i ? ", " : "") << gens[i].to_string();
  os << ")";
  for (const auto& e : exclusions) os << " \\ V(" << e.to_string() << ")";
  return os.str();
}

std::pair<Ideal, Ideal> representation_ideals(const Matroid& m) {
  const uint32_t r = m.rank(), n = m.size();
  std::vector<std::string> names;
  for (uint32_t i = 1; i <= r; ++i)
    for (uint32_t j = 1; j <= n; ++j)
      names.push_back("p_" + std::to_string(i) + "_" + std::to_string(j));
  ContextPtr ctx = VarContext::params(std::move(names));
  ParametrizedMatrix P;
  P.ctx = ctx;
  P.rows = r;
  P.cols = n;
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < n; ++j)
      P.entries.push_back(Polynomial::variable(ctx, i * n + j));

  std::vector<Polynomial> igens;
  for (uint64_t nb : m.nonbasis_masks()) {
    Polynomial d = P.minor3(nb);
    if (!d.is_zero()) igens.push_back(d);
  }
  Polynomial prod = Polynomial::constant(ctx, 1);
  for (uint64_t b : m.basis_masks()) prod = prod * P.minor3(b);
  return {Ideal(ctx, std::move(igens)),
          Ideal(ctx, {std::move(prod)})};
}

namespace {

enum class EntryKind : uint8_t { Zero, One, Param };

}  // namespace

Slice build_slice(const Matroid& m, const GroebnerOptions& opts) {
  uint64_t best = m.basis_masks().front();  // masks sorted: lex-smallest basis
  return build_slice(m, best, opts);
}

Slice build_slice(const Matroid& m, uint64_t basis_mask,
                  const GroebnerOptions& opts) {
  if (!m.is_basis(basis_mask))
    throw usage_error("build_slice: chosen set is not a basis");
  const uint32_t r = m.rank(), n = m.size();
  if (r != 3) throw unsupported_error("build_slice: rank 3 only");

  uint32_t basis_elems[3];
  {
    int k = 0;
    for (uint32_t e = 1; e <= n; ++e)
      if (basis_mask >> (e - 1) & 1) basis_elems[k++] = e;
  }

  // entry pattern: identity on the chosen basis, zeros off the fundamental
  // circuits, ones pinned at the first nonzero entry of each column and row
  std::vector<EntryKind> kind(std::size_t(3) * n, EntryKind::Zero);
  auto K = [&](uint32_t i, uint32_t j) -> EntryKind& { return kind[i * n + j]; };
  for (uint32_t j = 1; j <= n; ++j) {
    uint64_t jbit = uint64_t(1) << (j - 1);
    if (basis_mask & jbit) {
      for (int i = 0; i < 3; ++i)
        K(i, j - 1) = basis_elems[i] == j ? EntryKind::One : EntryKind::Zero;
      continue;
    }
    uint64_t circuit = m.fundamental_circuit(j, basis_mask);
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      if (circuit >> (basis_elems[i] - 1) & 1) {
        K(i, j - 1) = first ? EntryKind::One : EntryKind::Param;
        first = false;
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      if (K(i, j) == EntryKind::Param) K(i, j) = EntryKind::One;
      if (K(i, j) != EntryKind::Zero) break;  // first nonzero in the row
    }

  std::vector<std::string> names;
  std::vector<std::size_t> var_of(std::size_t(3) * n, SIZE_MAX);
  for (uint32_t j = 0; j < n; ++j)
    for (int i = 0; i < 3; ++i)
      if (K(i, j) == EntryKind::Param) {
        var_of[i * n + j] = names.size();
        names.push_back("p_" + std::to_string(i + 1) + "_" +
                        std::to_string(j + 1));
      }
  ContextPtr ctx = VarContext::params(names);

  Slice s;
  s.ctx = ctx;
  s.matroid = m;
  s.chosen_basis = basis_mask;
  s.P.ctx = ctx;
  s.P.rows = 3;
  s.P.cols = n;
  for (int i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      switch (K(i, j)) {
        case EntryKind::Zero:
          s.P.entries.push_back(Polynomial::zero(ctx));
          break;
        case EntryKind::One:
          s.P.entries.push_back(Polynomial::constant(ctx, 1));
          break;
        case EntryKind::Param:
          s.P.entries.push_back(Polynomial::variable(ctx, var_of[i * n + j]));
          break;
      }
    }

  // I^Sigma: non-basis minors in the pinned matrix
  std::vector<Polynomial> igens;
  std::set<std::string> seen;
  for (uint64_t nb : m.nonbasis_masks()) {
    Polynomial d = s.P.minor3(nb);
    if (d.is_zero()) continue;
    if (seen.insert(d.sign_normalized().canonical_key()).second)
      igens.push_back(std::move(d));
  }
  Ideal I(ctx, std::move(igens), opts);
  if (I.is_trivial()) {
    s.I = std::move(I);
    s.representable = false;
    return s;
  }

  // I = I^Sigma : det(P_B1)^inf : ... : det(P_Bb)^inf
  std::set<std::string> saturated;
  for (uint64_t b : m.basis_masks()) {
    Polynomial d = I.reduce(s.P.minor3(b));
    if (d.is_zero()) {
      // a basis determinant inside I: the saturation is everything
      I = Ideal::unit(ctx);
      break;
    }
    if (d.is_unit_constant()) continue;
    if (!saturated.insert(d.sign_normalized().canonical_key()).second)
      continue;
    I = saturate(I, d);
    if (I.is_trivial()) break;
  }
  if (I.is_trivial()) {
    s.I = std::move(I);
    s.representable = false;
    return s;
  }
  s.representable = true;

  // J: normal forms of the basis determinants against the saturated ideal
  std::set<std::string> excl_seen;
  for (uint64_t b : m.basis_masks()) {
    Polynomial d = I.reduce(s.P.minor3(b)).sign_normalized();
    if (d.is_zero())
      throw error("build_slice: basis determinant vanished after saturation");
    if (d.is_unit_constant()) continue;
    if (excl_seen.insert(d.canonical_key()).second)
      s.exclusions.push_back(std::move(d));
  }
  std::sort(s.exclusions.begin(), s.exclusions.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return a.canonical_key() < b.canonical_key();
            });
  s.I = std::move(I);
  return s;
}

bool is_representable(const Slice& s) { return !s.I.is_trivial(); }

Matroid matroid_of_parametrized_matrix(
    const ParametrizedMatrix& P, const Ideal& I,
    const std::vector<Polynomial>& exclusions) {
  if (P.rows != 3) throw unsupported_error("matroid derivation: rank 3 only");
  Ideal sat = saturate_by_all(I, exclusions);
  std::vector<uint64_t> bases;
  uint64_t mask = (uint64_t(1) << 3) - 1;
  uint64_t limit = uint64_t(1) << P.cols;
  while (mask < limit) {
    Polynomial d = P.minor3(mask);
    // basis iff det does not vanish identically on the slice
    if (!radical_membership(d, sat)) bases.push_back(mask);
    uint64_t t = mask | (mask - 1);
    mask = (t + 1) | (((~t & -(~t)) - 1) >> (std::countr_zero(mask) + 1));
  }
  return Matroid::from_basis_masks(static_cast<uint32_t>(P.cols), 3,
                                   std::move(bases));
}

}  // namespace nfl
