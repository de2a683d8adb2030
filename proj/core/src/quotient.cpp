#include "nfl/quotient.hpp"

namespace nfl {

QuotientRing::QuotientRing(ContextPtr ctx, Ideal modulus)
    : ctx_(std::move(ctx)), modulus_(std::move(modulus)) {
  if (!same_context(modulus_.context(), ctx_))
    throw usage_error("QuotientRing: modulus context mismatch");
  modulus_.groebner();  // force the cached reduced GB
}

std::optional<Polynomial> QuotientRing::try_inverse(const Polynomial& u) const {
  Polynomial un = nf(u);
  if (un.is_zero()) {
    if (is_zero_ring()) return zero();
    return std::nullopt;
  }
  if (un.is_unit_constant())
    return Polynomial::constant(ctx_, un.terms()[0].c);
  std::string key = un.canonical_key();
  auto it = inv_cache_.find(key);
  if (it != inv_cache_.end()) return it->second;

  // GB of Q + <u t - 1> with t eliminated in front; a unit shows up as a
  // basis element t - v with v its inverse.
  ContextPtr tctx = ctx_->with_tag_prefix("@t");
  GBasis seeds;
  seeds.order = MonomialOrder::block(1);
  for (const auto& g : modulus_.groebner().elements)
    seeds.elements.push_back(g.lifted(tctx, 1));
  Polynomial ut = Polynomial::variable(tctx, 0) * un.lifted(tctx, 1);
  GBasis ext = groebner_extend(
      seeds, {ut - Polynomial::constant(tctx, 1)}, modulus_.options());

  std::optional<Polynomial> result;
  for (const auto& g : ext.elements) {
    const auto& lt = g.leading_term();
    if (lt.m == Monomial::var(0) && is_pm_one(lt.c)) {
      // g = c*t + tail, c = +-1  =>  t = -c * tail
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial v = Polynomial::from_terms(tctx, std::move(tail), ext.order)
                         .times_int(-lt.c);
      bool tag_free = true;
      for (const auto& t : v.terms())
        if (!t.m.is_one() && t.m.min_var() == 0) tag_free = false;
      if (!tag_free) continue;
      Polynomial cand =
          nf(v.lifted(ctx_, -1).resorted(MonomialOrder::degrevlex()));
      // the elimination only certifies invertibility in the localization;
      // accept nothing short of u * v = 1 in A itself
      if (equal(mul(un, cand), one())) {
        result = cand;
        break;
      }
    }
  }
  inv_cache_.emplace(std::move(key), result);
  return result;
}

bool QuotientRing::is_unit(const Polynomial& u) const {
  return try_inverse(u).has_value();
}

Polynomial QuotientRing::inverse(const Polynomial& u) const {
  auto v = try_inverse(u);
  if (!v) throw usage_error("inverse of a non-unit in the quotient ring");
  return *v;
}

}  // namespace nfl
