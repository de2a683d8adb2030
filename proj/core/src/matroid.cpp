#include "nfl/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "nfl/errors.hpp"

namespace nfl {

namespace {

uint64_t mask_of(const std::vector<uint32_t>& set, uint32_t n, uint32_t r) {
  if (set.size() != r)
    throw usage_error("matroid: listed set has size " +
                      std::to_string(set.size()) + ", expected " +
                      std::to_string(r));
  uint64_t m = 0;
  for (uint32_t e : set) {
    if (e < 1 || e > n)
      throw usage_error("matroid: element " + std::to_string(e) +
                        " outside 1.." + std::to_string(n));
    m |= uint64_t(1) << (e - 1);
  }
  if (std::popcount(m) != static_cast<int>(r))
    throw usage_error("matroid: repeated element in a listed set");
  return m;
}

void all_subsets(uint32_t n, uint32_t r, std::vector<uint64_t>& out) {
  // lexicographically enumerate r-subsets of [0,n)
  if (r > n) return;
  uint64_t v = (uint64_t(1) << r) - 1;
  uint64_t limit = uint64_t(1) << n;
  while (v < limit) {
    out.push_back(v);
    uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -(~t)) - 1) >> (std::countr_zero(v) + 1));
  }
}

}  // namespace

std::string mask_to_string(uint64_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (uint32_t e = 0; e < 64; ++e)
    if (mask >> e & 1) {
      os << (first ? "" : ",") << (e + 1);
      first = false;
    }
  os << '}';
  return os.str();
}

Matroid::Matroid(uint32_t n, uint32_t r, std::vector<uint64_t> bases)
    : n_(n), r_(r), bases_(std::move(bases)) {
  if (n_ == 0 || n_ > 64) throw usage_error("matroid: need 1 <= n <= 64");
  if (r_ == 0 || r_ > n_) throw usage_error("matroid: need 1 <= r <= n");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw invalid_matroid_error("matroid: no bases given");
  validate_exchange();
  compute_simple();
}

Matroid Matroid::from_basis_masks(uint32_t n, uint32_t r,
                                  std::vector<uint64_t> bases) {
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases(uint32_t n, uint32_t r,
                            const std::vector<std::vector<uint32_t>>& bases) {
  std::vector<uint64_t> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(mask_of(b, n, r));
  return Matroid(n, r, std::move(masks));
}

Matroid Matroid::from_nonbases(
    uint32_t n, uint32_t r, const std::vector<std::vector<uint32_t>>& nonbases) {
  std::vector<uint64_t> nb;
  nb.reserve(nonbases.size());
  for (const auto& b : nonbases) nb.push_back(mask_of(b, n, r));
  std::sort(nb.begin(), nb.end());
  std::vector<uint64_t> all;
  all_subsets(n, r, all);
  std::vector<uint64_t> masks;
  for (uint64_t m : all)
    if (!std::binary_search(nb.begin(), nb.end(), m)) masks.push_back(m);
  return Matroid(n, r, std::move(masks));
}

bool Matroid::is_basis(uint64_t mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask);
}

void Matroid::validate_exchange() const {
  for (uint64_t b1 : bases_)
    for (uint64_t b2 : bases_) {
      if (b1 == b2) continue;
      uint64_t only1 = b1 & ~b2;
      for (uint64_t i = only1; i;) {
        uint64_t ibit = i & -i;
        i ^= ibit;
        uint64_t rest = b1 ^ ibit;
        bool found = false;
        for (uint64_t j = b2 & ~b1; j;) {
          uint64_t jbit = j & -j;
          j ^= jbit;
          if (is_basis(rest | jbit)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw invalid_matroid_error(
              "exchange axiom fails for bases " + mask_to_string(b1) + ", " +
              mask_to_string(b2) + " at element " +
              std::to_string(std::countr_zero(ibit) + 1));
      }
    }
}

void Matroid::compute_simple() {
  // simple: every 2-subset of the ground set lies in at least one basis
  std::vector<uint64_t> covered;
  simple_ = true;
  for (uint32_t a = 0; a < n_ && simple_; ++a)
    for (uint32_t b = a + 1; b < n_ && simple_; ++b) {
      uint64_t pair = (uint64_t(1) << a) | (uint64_t(1) << b);
      bool in_some = false;
      for (uint64_t bs : bases_)
        if ((bs & pair) == pair) {
          in_some = true;
          break;
        }
      if (!in_some) simple_ = false;
    }
}

std::vector<uint64_t> Matroid::nonbasis_masks() const {
  std::vector<uint64_t> all;
  all_subsets(n_, r_, all);
  std::vector<uint64_t> out;
  for (uint64_t m : all)
    if (!is_basis(m)) out.push_back(m);
  return out;
}

uint32_t Matroid::subset_rank(uint64_t subset) const {
  uint32_t best = 0;
  for (uint64_t b : bases_)
    best = std::max<uint32_t>(best, std::popcount(b & subset));
  return best;
}

uint64_t Matroid::closure(uint64_t subset) const {
  uint32_t rk = subset_rank(subset);
  uint64_t cl = subset;
  for (uint32_t e = 0; e < n_; ++e) {
    uint64_t bit = uint64_t(1) << e;
    if (cl & bit) continue;
    if (subset_rank(subset | bit) == rk) cl |= bit;
  }
  return cl;
}

uint64_t Matroid::fundamental_circuit(uint32_t element, uint64_t basis_mask) const {
  if (element < 1 || element > n_)
    throw usage_error("fundamental_circuit: element out of range");
  uint64_t ibit = uint64_t(1) << (element - 1);
  if (basis_mask & ibit)
    throw usage_error("fundamental_circuit: element lies in the basis");
  if (!is_basis(basis_mask))
    throw usage_error("fundamental_circuit: not a basis");
  uint64_t circuit = ibit;
  for (uint64_t b = basis_mask; b;) {
    uint64_t bbit = b & -b;
    b ^= bbit;
    if (is_basis((basis_mask ^ bbit) | ibit)) circuit |= bbit;
  }
  return circuit;
}

std::vector<std::vector<uint32_t>> Matroid::basis_sets() const {
  std::vector<std::vector<uint32_t>> out;
  out.reserve(bases_.size());
  for (uint64_t m : bases_) {
    std::vector<uint32_t> set;
    for (uint32_t e = 0; e < n_; ++e)
      if (m >> e & 1) set.push_back(e + 1);
    out.push_back(std::move(set));
  }
  return out;
}

FlatLattice flat_lattice(const Matroid& m) {
  if (!m.is_simple() || m.rank() != 3)
    throw unsupported_error("flat lattice: need a simple rank-3 matroid");
  FlatLattice lat;
  for (uint32_t a = 0; a < m.size(); ++a)
    for (uint32_t b = a + 1; b < m.size(); ++b) {
      uint64_t pair = (uint64_t(1) << a) | (uint64_t(1) << b);
      uint64_t line = m.closure(pair);
      if (!std::count(lat.lines.begin(), lat.lines.end(), line))
        lat.lines.push_back(line);
    }
  std::sort(lat.lines.begin(), lat.lines.end());
  // partition property: every 2-subset lies in exactly one line
  for (uint32_t a = 0; a < m.size(); ++a)
    for (uint32_t b = a + 1; b < m.size(); ++b) {
      uint64_t pair = (uint64_t(1) << a) | (uint64_t(1) << b);
      int count = 0;
      for (uint64_t l : lat.lines)
        if ((l & pair) == pair) ++count;
      if (count != 1)
        throw error("flat lattice: pair " + mask_to_string(pair) +
                    " lies in " + std::to_string(count) + " lines");
    }
  lat.line_sizes.reserve(lat.lines.size());
  for (uint64_t l : lat.lines)
    lat.line_sizes.push_back(static_cast<uint32_t>(std::popcount(l)));
  return lat;
}

std::vector<uint64_t> FlatLattice::lines_through(uint32_t element) const {
  std::vector<uint64_t> out;
  uint64_t bit = uint64_t(1) << (element - 1);
  for (uint64_t l : lines)
    if (l & bit) out.push_back(l);
  return out;
}

std::vector<uint32_t> FlatLattice::size_multiset() const {
  std::vector<uint32_t> s = line_sizes;
  std::sort(s.begin(), s.end());
  return s;
}

CharPoly characteristic_polynomial(const Matroid& m) {
  if (!m.is_simple() || m.rank() != 3)
    throw unsupported_error("characteristic polynomial: need simple rank 3");
  FlatLattice lat = flat_lattice(m);
  Int n(m.size());
  Int b = 0;
  for (uint32_t s : lat.line_sizes) b += Int(s) - 1;
  CharPoly chi;
  chi.c2 = -n;
  chi.c1 = b;
  chi.c0 = -(b - n + 1);  // fixed by chi(1) = 0
  // chi(t) = (t-1)(t^2 - (n-1) t + q) with q = b - n + 1
  Int q = b - n + 1;
  Int s = n - 1;
  if (q > 0) {
    for (Int d2 = 1; d2 * 2 <= s; ++d2) {
      Int d3 = s - d2;
      if (d2 * d3 == q) {
        chi.splitting = {static_cast<uint32_t>(d2.get_ui()),
                         static_cast<uint32_t>(d3.get_ui())};
        break;
      }
    }
  }
  return chi;
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  os << "t^3";
  auto app = [&](const Int& c, const std::string& mon) {
    if (c == 0) return;
    os << (c > 0 ? "+" : "-");
    Int a = abs(c);
    if (a != 1 || mon.empty()) os << a.get_str();
    if (!mon.empty() && a != 1) os << "*";
    os << mon;
  };
  app(c2, "t^2");
  app(c1, "t");
  app(c0, "");
  return os.str();
}

}  // namespace nfl
