#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nfl {

// Sparse monomial: (variable index, exponent) pairs sorted by index,
// exponents strictly positive.  The empty list is the monomial 1.
class Monomial {
 public:
  using Factor = std::pair<uint32_t, uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial var(uint32_t index, uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  uint32_t exponent(uint32_t var) const;
  // Total degree over variable indices in [lo, hi).
  uint32_t degree_in_range(uint32_t lo, uint32_t hi) const;
  uint32_t min_var() const;  // requires !is_one()
  uint32_t max_var() const;  // requires !is_one()

  bool divides(const Monomial& m) const;
  bool coprime_with(const Monomial& m) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Shift all variable indices by delta (for context embedding).
  Monomial shifted(int64_t delta) const;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  uint32_t degree_ = 0;
};

}  // namespace nfl
