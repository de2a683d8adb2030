#include "nfl/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nfl {

void require_same_context(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.context(), b.context()))
    throw usage_error("polynomial operands live in different contexts");
  if (!(a.order() == b.order()))
    throw usage_error("polynomial operands carry different term orders");
}

Polynomial Polynomial::zero(ContextPtr ctx, MonomialOrder ord) {
  Polynomial p;
  p.ctx_ = std::move(ctx);
  p.ord_ = ord;
  return p;
}

Polynomial Polynomial::constant(ContextPtr ctx, Int c, MonomialOrder ord) {
  Polynomial p = zero(std::move(ctx), ord);
  if (c != 0) p.terms_.push_back({std::move(c), Monomial()});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index,
                                MonomialOrder ord) {
  if (index >= ctx->size()) throw usage_error("variable index out of range");
  Polynomial p = zero(std::move(ctx), ord);
  p.terms_.push_back({Int(1), Monomial::var(static_cast<uint32_t>(index))});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms,
                                  MonomialOrder ord) {
  Polynomial p = zero(std::move(ctx), ord);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  for (const auto& t : terms_)
    if (!t.m.is_one() && t.m.max_var() >= ctx_->size())
      throw usage_error("monomial indexes a variable outside its context");
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return compare_monomials(a.m, b.m, ord_) == Cmp::GT;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw usage_error("zero polynomial has no leading term");
  return terms_.front();
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial r = Polynomial::zero(a.ctx_, a.ord_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end())
      r.terms_.push_back(*i++);
    else if (i == a.terms_.end())
      r.terms_.push_back(*j++);
    else {
      Cmp c = compare_monomials(i->m, j->m, a.ord_);
      if (c == Cmp::GT)
        r.terms_.push_back(*i++);
      else if (c == Cmp::LT)
        r.terms_.push_back(*j++);
      else {
        Int s = i->c + j->c;
        if (s != 0) r.terms_.push_back({std::move(s), i->m});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  std::vector<Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.c * t.c, s.m * t.m});
  return Polynomial::from_terms(a.ctx_, std::move(acc), a.ord_);
}

Polynomial Polynomial::times_term(const Int& c, const Monomial& m) const {
  Polynomial r = zero(ctx_, ord_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.c * c, t.m * m});
  return r;  // multiplying by a term preserves the order of terms
}

Polynomial Polynomial::times_int(const Int& c) const {
  return times_term(c, Monomial());
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial r = constant(ctx_, 1, ord_);
  for (uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Int Polynomial::integer_content() const {
  if (terms_.empty())
    throw usage_error("integer content of the zero polynomial");
  Int g = 0;
  for (const auto& t : terms_) {
    g = int_gcd(g, t.c);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::sign_normalized() const {
  if (terms_.empty() || terms_.front().c > 0) return *this;
  return -*this;
}

Polynomial Polynomial::resorted(MonomialOrder ord) const {
  if (ord == ord_) return *this;
  return from_terms(ctx_, terms_, ord);
}

bool Polynomial::equals(const Polynomial& o) const {
  if (!same_context(ctx_, o.ctx_)) return false;
  if (ord_ == o.ord_) return canonical_terms_equal(*this, o);
  return canonical_terms_equal(*this, o.resorted(ord_));
}

bool canonical_terms_equal(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].c != tb[i].c || ta[i].m != tb[i].m) return false;
  return true;
}

Polynomial Polynomial::lifted(ContextPtr target, int64_t offset) const {
  Polynomial r = zero(std::move(target), ord_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.c, t.m.shifted(offset)});
  // index shifts preserve relative variable order, but the block structure
  // may differ, so re-sort defensively
  r.canonicalize();
  return r;
}

Polynomial Polynomial::substituted(
    ContextPtr target, const std::vector<std::optional<Polynomial>>& images,
    MonomialOrder ord) const {
  Polynomial acc = zero(target, ord);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.c, ord);
    for (const auto& f : t.m.factors()) {
      if (f.first >= images.size() || !images[f.first])
        throw usage_error("substitution image missing for variable " +
                          ctx_->name(f.first));
      prod = prod * images[f.first]->pow(f.second);
    }
    acc = acc + prod;
  }
  return acc;
}

}  // namespace nfl
