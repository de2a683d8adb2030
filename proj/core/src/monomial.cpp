#include "nfl/monomial.hpp"

#include <algorithm>

#include "nfl/errors.hpp"

namespace nfl {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  // merge repeated variables, drop zero exponents
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
  degree_ = 0;
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial Monomial::var(uint32_t index, uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({index, exp});
    m.degree_ = exp;
  }
  return m;
}

uint32_t Monomial::exponent(uint32_t var) const {
  for (const auto& f : factors_)
    if (f.first == var) return f.second;
  return 0;
}

uint32_t Monomial::degree_in_range(uint32_t lo, uint32_t hi) const {
  uint32_t d = 0;
  for (const auto& f : factors_)
    if (f.first >= lo && f.first < hi) d += f.second;
  return d;
}

uint32_t Monomial::min_var() const { return factors_.front().first; }
uint32_t Monomial::max_var() const { return factors_.back().first; }

bool Monomial::divides(const Monomial& m) const {
  auto it = m.factors_.begin();
  for (const auto& f : factors_) {
    while (it != m.factors_.end() && it->first < f.first) ++it;
    if (it == m.factors_.end() || it->first != f.first || it->second < f.second)
      return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
  auto a = factors_.begin();
  auto b = m.factors_.begin();
  while (a != factors_.end() && b != m.factors_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
      r.factors_.push_back(*i++);
    else if (i == a.factors_.end() || j->first < i->first)
      r.factors_.push_back(*j++);
    else {
      r.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto j = b.factors_.begin();
  for (const auto& f : a.factors_) {
    if (j != b.factors_.end() && j->first == f.first) {
      if (j->second > f.second)
        throw usage_error("Monomial division is not exact");
      if (f.second > j->second) r.factors_.push_back({f.first, f.second - j->second});
      ++j;
    } else {
      r.factors_.push_back(f);
    }
  }
  if (j != b.factors_.end()) throw usage_error("Monomial division is not exact");
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
      r.factors_.push_back(*i++);
    else if (i == a.factors_.end() || j->first < i->first)
      r.factors_.push_back(*j++);
    else {
      r.factors_.push_back({i->first, std::max(i->second, j->second)});
      ++i;
      ++j;
    }
  }
  for (const auto& f : r.factors_) r.degree_ += f.second;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      r.factors_.push_back({i->first, std::min(i->second, j->second)});
      ++i;
      ++j;
    }
  }
  for (const auto& f : r.factors_) r.degree_ += f.second;
  return r;
}

Monomial Monomial::shifted(int64_t delta) const {
  Monomial r;
  r.factors_.reserve(factors_.size());
  for (const auto& f : factors_)
    r.factors_.push_back({static_cast<uint32_t>(f.first + delta), f.second});
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& f : factors_) {
    h = (h ^ f.first) * 1099511628211ull;
    h = (h ^ f.second) * 1099511628211ull;
  }
  return h;
}

}  // namespace nfl
