#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace nfl {

// Exact integers everywhere; no floating point in this project.
using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Canonical residue in [0, |m|).
inline Int int_mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int int_divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool int_divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// g = gcd(a,b) = s*a + t*b
inline Int int_gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline std::size_t int_bits(const Int& a) {
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool is_pm_one(const Int& a) { return a == 1 || a == -1; }

}  // namespace nfl
