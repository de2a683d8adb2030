#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nfl/groebner.hpp"
#include "nfl/polynomial.hpp"

namespace nfl {

// Finitely generated ideal of Z[x_1..x_t] with a lazily cached reduced strong
// Groebner basis per order.  Generators are nonzero and share one context.
class Ideal {
 public:
  Ideal() = default;
  Ideal(ContextPtr ctx, std::vector<Polynomial> gens,
        GroebnerOptions opts = {});

  static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), {}); }
  static Ideal unit(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return opts_; }
  void set_options(const GroebnerOptions& o) { opts_ = o; }

  // Cached reduced strong GB under `ord` (recomputed if the cached order
  // differs).
  const GBasis& groebner(MonomialOrder ord = MonomialOrder::degrevlex()) const;
  bool has_cached_basis() const { return cached_.has_value(); }
  void adopt_basis(GBasis gb);  // trusted: gb generates this ideal

  bool is_trivial() const;  // 1 in I
  Polynomial reduce(const Polynomial& f) const;  // NF w.r.t. degrevlex GB

  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
  GroebnerOptions opts_;
  mutable std::optional<GBasis> cached_;
};

// Generator concatenation.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
// Pairwise products of generators.
Ideal ideal_product(const Ideal& a, const Ideal& b);

// I : f^infinity via the tag-variable trick: eliminate t from I + <1 - t f>.
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal saturate_by_all(const Ideal& I, const std::vector<Polynomial>& fs);

// f in sqrt(I), decided by saturate(I, f) = <1>.
bool radical_membership(const Polynomial& f, const Ideal& I);

// Generators of I intersected with the subring on the variables after the
// first `front_count` ones; returned over the shrunken context.
Ideal eliminate(const Ideal& I, std::size_t front_count);

// I cap Z = <m>, m >= 0.
Int integer_support(const Ideal& I);

}  // namespace nfl
