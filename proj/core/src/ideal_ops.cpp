#include <algorithm>

#include "nfl/ideal.hpp"

namespace nfl {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens, GroebnerOptions opts)
    : ctx_(std::move(ctx)), opts_(opts) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!same_context(g.context(), ctx_))
      throw usage_error("ideal generator in a different context");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(ContextPtr ctx) {
  std::vector<Polynomial> g{Polynomial::constant(ctx, 1)};
  return Ideal(std::move(ctx), std::move(g));
}

const GBasis& Ideal::groebner(MonomialOrder ord) const {
  if (cached_ && cached_->order == ord) return *cached_;
  cached_ = strong_groebner_basis(gens_, ord, opts_);
#ifndef NDEBUG
  for (const auto& g : gens_)
    if (!normal_form(g, *cached_).is_zero())
      throw error("groebner cache failed the generator spot-check");
#endif
  return *cached_;
}

void Ideal::adopt_basis(GBasis gb) { cached_ = std::move(gb); }

bool Ideal::is_trivial() const { return groebner().is_trivial(); }

Polynomial Ideal::reduce(const Polynomial& f) const {
  return normal_form(f, groebner());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_context(a.context(), b.context()))
    throw usage_error("ideal_sum: context mismatch");
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  Ideal r(a.context(), std::move(gens), a.options());
  return r;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_context(a.context(), b.context()))
    throw usage_error("ideal_product: context mismatch");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.context(), std::move(gens), a.options());
}

namespace {

// Elements of a block-order GB that avoid the first `front` variables form a
// reduced strong GB of the elimination ideal under the back order.
std::vector<Polynomial> filter_front_free(const GBasis& gb, std::size_t front,
                                          const ContextPtr& back_ctx) {
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements) {
    bool free_of_front = true;
    for (const auto& t : g.terms())
      if (!t.m.is_one() && t.m.min_var() < front) {
        free_of_front = false;
        break;
      }
    if (free_of_front)
      kept.push_back(g.lifted(back_ctx, -static_cast<int64_t>(front))
                         .resorted(MonomialOrder::degrevlex()));
  }
  return kept;
}

Ideal from_elimination(const ContextPtr& back_ctx,
                       std::vector<Polynomial> kept,
                       const GroebnerOptions& opts) {
  Ideal r(back_ctx, kept, opts);
  r.adopt_basis(GBasis{std::move(kept), MonomialOrder::degrevlex()});
  return r;
}

ContextPtr drop_front(const ContextPtr& ctx, std::size_t front) {
  if (front > ctx->tag_count() + ctx->param_count())
    throw usage_error("eliminate: front block reaches into geometric vars");
  std::vector<std::string> names(ctx->names().begin() + static_cast<long>(front),
                                 ctx->names().end());
  std::size_t from_tags = std::min(ctx->tag_count(), front);
  std::size_t from_params = front - from_tags;
  return std::make_shared<const VarContext>(
      std::move(names), ctx->tag_count() - from_tags,
      ctx->param_count() - from_params, ctx->geom_count());
}

}  // namespace

Ideal eliminate(const Ideal& I, std::size_t front_count) {
  const ContextPtr& ctx = I.context();
  if (front_count > ctx->size())
    throw usage_error("eliminate: front block larger than context");
  ContextPtr back = drop_front(ctx, front_count);
  MonomialOrder ord = MonomialOrder::block(static_cast<uint32_t>(front_count));
  GBasis gb = strong_groebner_basis(I.generators(), ord, I.options());
  return from_elimination(back, filter_front_free(gb, front_count, back),
                          I.options());
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw usage_error("saturate: zero polynomial");
  const ContextPtr& ctx = I.context();
  if (!same_context(f.context(), ctx))
    throw usage_error("saturate: context mismatch");
  if (f.is_unit_constant()) return I;
  if (I.is_trivial()) return I;
  ContextPtr tctx = ctx->with_tag_prefix("@t");

  // Seed the block-order completion with the cached degrevlex GB: for
  // tag-free elements the block order coincides with degrevlex, so the seeds
  // are already a strong GB and only pairs against 1 - t*f are needed.
  GBasis seeds;
  seeds.order = MonomialOrder::block(1);
  for (const auto& g : I.groebner().elements)
    seeds.elements.push_back(g.lifted(tctx, 1));
  Polynomial tf = Polynomial::variable(tctx, 0) * f.lifted(tctx, 1);
  GBasis ext =
      groebner_extend(seeds, {tf - Polynomial::constant(tctx, 1)}, I.options());
  return from_elimination(ctx, filter_front_free(ext, 1, ctx), I.options());
}

Ideal saturate_by_all(const Ideal& I, const std::vector<Polynomial>& fs) {
  Ideal cur = I;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    cur = saturate(cur, f);
    if (cur.is_trivial()) break;
  }
  return cur;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;  // 0 lies in every ideal
  if (I.contains(f)) return true;
  if (f.is_unit_constant()) return false;
  return saturate(I, f).is_trivial();
}

Int integer_support(const Ideal& I) {
  const GBasis& gb = I.groebner();
  Int best = 0;
  for (const auto& g : gb.elements)
    if (g.is_constant() && !g.is_zero()) {
      Int c = abs(g.terms()[0].c);
      if (best == 0 || c < best) best = c;
    }
  return best;
}

}  // namespace nfl
