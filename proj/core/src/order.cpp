#include "nfl/order.hpp"

namespace nfl {

namespace {

// Degrevlex on the exponent subvector with indices in [lo, hi):
// higher total degree wins; on ties the *last* variable with differing
// exponent decides, smaller exponent winning.
Cmp degrevlex_range(const Monomial& u, const Monomial& v, uint32_t lo,
                    uint32_t hi) {
  uint32_t du = u.degree_in_range(lo, hi);
  uint32_t dv = v.degree_in_range(lo, hi);
  if (du != dv) return du < dv ? Cmp::LT : Cmp::GT;
  const auto& fu = u.factors();
  const auto& fv = v.factors();
  auto i = fu.rbegin();
  auto j = fv.rbegin();
  auto skip = [&](auto& it, const auto& end) {
    while (it != end && (it->first >= hi || it->first < lo)) ++it;
  };
  skip(i, fu.rend());
  skip(j, fv.rend());
  while (i != fu.rend() && j != fv.rend()) {
    if (i->first != j->first) {
      // the one holding the larger (later) variable has a positive exponent
      // there, making it smaller in revlex
      return i->first > j->first ? Cmp::LT : Cmp::GT;
    }
    if (i->second != j->second) return i->second > j->second ? Cmp::LT : Cmp::GT;
    ++i;
    ++j;
    skip(i, fu.rend());
    skip(j, fv.rend());
  }
  if (i != fu.rend()) return Cmp::LT;
  if (j != fv.rend()) return Cmp::GT;
  return Cmp::EQ;
}

Cmp lex_cmp(const Monomial& u, const Monomial& v) {
  const auto& fu = u.factors();
  const auto& fv = v.factors();
  auto i = fu.begin();
  auto j = fv.begin();
  while (i != fu.end() && j != fv.end()) {
    if (i->first != j->first) return i->first < j->first ? Cmp::GT : Cmp::LT;
    if (i->second != j->second) return i->second < j->second ? Cmp::LT : Cmp::GT;
    ++i;
    ++j;
  }
  if (i != fu.end()) return Cmp::GT;
  if (j != fv.end()) return Cmp::LT;
  return Cmp::EQ;
}

constexpr uint32_t kAllVars = 0xffffffffu;

}  // namespace

Cmp compare_monomials(const Monomial& u, const Monomial& v,
                      const MonomialOrder& ord) {
  switch (ord.kind) {
    case MonomialOrder::Kind::Degrevlex:
      return degrevlex_range(u, v, 0, kAllVars);
    case MonomialOrder::Kind::Lex:
      return lex_cmp(u, v);
    case MonomialOrder::Kind::Block: {
      Cmp c = degrevlex_range(u, v, 0, ord.front);
      if (c != Cmp::EQ) return c;
      return degrevlex_range(u, v, ord.front, kAllVars);
    }
  }
  return Cmp::EQ;
}

std::string MonomialOrder::describe() const {
  switch (kind) {
    case Kind::Degrevlex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(front) + ")";
  }
  return "?";
}

}  // namespace nfl
