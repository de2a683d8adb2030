#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfl/context.hpp"
#include "nfl/errors.hpp"
#include "nfl/ints.hpp"
#include "nfl/monomial.hpp"
#include "nfl/order.hpp"

namespace nfl {

struct Term {
  Int c;
  Monomial m;
};

// Sparse multivariate polynomial over Z.  Terms are kept strictly descending
// under the polynomial's order, with no zero coefficients and no duplicate
// monomials.  Values are immutable in spirit: all operations return fresh
// polynomials.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(ContextPtr ctx,
                         MonomialOrder ord = MonomialOrder::degrevlex());
  static Polynomial constant(ContextPtr ctx, Int c,
                             MonomialOrder ord = MonomialOrder::degrevlex());
  static Polynomial variable(ContextPtr ctx, std::size_t index,
                             MonomialOrder ord = MonomialOrder::degrevlex());
  // Canonicalizes: sorts, merges, drops zeros.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms,
                               MonomialOrder ord = MonomialOrder::degrevlex());

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
  }
  // +1 or -1 constant
  bool is_unit_constant() const {
    return is_constant() && !is_zero() && is_pm_one(terms_[0].c);
  }

  const Term& leading_term() const;
  const Int& leading_coeff() const { return leading_term().c; }
  const Monomial& leading_monomial() const { return leading_term().m; }
  uint32_t total_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial times_term(const Int& c, const Monomial& m) const;
  Polynomial times_int(const Int& c) const;
  Polynomial pow(uint32_t e) const;

  // gcd of all coefficients, positive; usage error on the zero polynomial
  Int integer_content() const;
  // multiplied by -1 if the leading coefficient is negative
  Polynomial sign_normalized() const;

  Polynomial resorted(MonomialOrder ord) const;

  // Semantic equality (context value, term set).
  bool equals(const Polynomial& o) const;

  // Embed into a context that contains this context's variables at
  // index + offset (contexts grown with with_tag_prefix / with_geometric).
  Polynomial lifted(ContextPtr target, int64_t offset) const;

  // Ring morphism given by images[i] = image of variable i, all over a common
  // target context.  Missing image means the variable must not occur.
  Polynomial substituted(ContextPtr target,
                         const std::vector<std::optional<Polynomial>>& images,
                         MonomialOrder ord = MonomialOrder::degrevlex()) const;

  std::string to_string() const;

  // Stable key for hashing/dedup: order-independent canonical bytes.
  std::string canonical_key() const;

 private:
  ContextPtr ctx_;
  MonomialOrder ord_;
  std::vector<Term> terms_;

  void canonicalize();
};

void require_same_context(const Polynomial& a, const Polynomial& b);
bool canonical_terms_equal(const Polynomial& a, const Polynomial& b);

// Text format: infix with ^ for powers, * for products, e.g. "a^2-a-1".
// parse_polynomial and Polynomial::to_string round-trip.
Polynomial parse_polynomial(const std::string& text, ContextPtr ctx,
                            MonomialOrder ord = MonomialOrder::degrevlex());

}  // namespace nfl
