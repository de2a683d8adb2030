#pragma once

#include <memory>
#include <optional>
#include <unordered_map>

#include "nfl/ideal.hpp"

namespace nfl {

// The ring A = Z[params]/Q presented by a modulus ideal with its reduced
// strong GB.  Elements are ambient polynomials kept in normal form; every
// product is reduced immediately, which keeps coefficient growth in check.
// The unit/inverse cache makes a single instance unsafe to share across
// threads; independent pipelines build their own rings.
class QuotientRing {
 public:
  QuotientRing(ContextPtr ctx, Ideal modulus);

  const ContextPtr& context() const { return ctx_; }
  const Ideal& modulus() const { return modulus_; }
  bool is_zero_ring() const { return modulus_.is_trivial(); }

  Polynomial nf(const Polynomial& f) const { return modulus_.reduce(f); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const {
    return nf(a * b);
  }
  bool equal(const Polynomial& a, const Polynomial& b) const {
    return nf(a - b).is_zero();
  }
  bool is_zero(const Polynomial& a) const { return nf(a).is_zero(); }

  bool is_unit(const Polynomial& u) const;
  // Inverse as an NF-reduced ambient polynomial; usage error on non-units.
  Polynomial inverse(const Polynomial& u) const;

  Polynomial zero() const { return Polynomial::zero(ctx_); }
  Polynomial one() const { return Polynomial::constant(ctx_, 1); }

 private:
  std::optional<Polynomial> try_inverse(const Polynomial& u) const;

  ContextPtr ctx_;
  Ideal modulus_;
  mutable std::unordered_map<std::string, std::optional<Polynomial>> inv_cache_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

}  // namespace nfl
