#pragma once

#include <cstdint>
#include <string>

#include "nfl/monomial.hpp"

namespace nfl {

enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

// Global monomial orders.  Block orders eliminate a prefix of the variable
// list: monomials are compared degrevlex on the first `front` variables, then
// degrevlex on the rest.
struct MonomialOrder {
  enum class Kind : uint8_t { Degrevlex, Lex, Block };

  Kind kind = Kind::Degrevlex;
  uint32_t front = 0;  // only for Block

  static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(uint32_t front_vars) {
    return {Kind::Block, front_vars};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::Block || front == o.front);
  }

  std::string describe() const;
};

Cmp compare_monomials(const Monomial& u, const Monomial& v,
                      const MonomialOrder& ord);

inline bool order_less(const Monomial& u, const Monomial& v,
                       const MonomialOrder& ord) {
  return compare_monomials(u, v, ord) == Cmp::LT;
}

}  // namespace nfl
