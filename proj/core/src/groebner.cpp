#include "nfl/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nfl/errors.hpp"

namespace nfl {

namespace {

struct MTerm {
  Int c;
  Monomial m;
  uint32_t pos;

  bool operator==(const MTerm& o) const {
    return pos == o.pos && c == o.c && m == o.m;
  }
};

using MPoly = std::vector<MTerm>;  // strictly descending under engine order

// Completion engine for strong Groebner bases over Z, for ideals (width 1)
// and submodules of free modules.  Pairs need both S-polynomials and
// GCD-polynomials; the classical product criterion is applied only in ideal
// mode and only when leading coefficients are coprime, the chain criterion
// only to S-pairs with term divisibility (the forms that stay sound over Z).
class Engine {
 public:
  Engine(ContextPtr ctx, MonomialOrder ord, std::size_t width,
         std::size_t pos_split, GroebnerOptions opts)
      : ctx_(std::move(ctx)),
        ord_(ord),
        width_(width),
        pos_split_(pos_split),
        opts_(opts),
        module_mode_(width > 1) {}

  // a > b ?
  bool term_greater(const MTerm& a, const MTerm& b) const {
    bool fa = a.pos < pos_split_;
    bool fb = b.pos < pos_split_;
    if (fa != fb) return fa;  // front block dominates
    Cmp c = compare_monomials(a.m, b.m, ord_);
    if (c != Cmp::EQ) return c == Cmp::GT;
    return a.pos < b.pos;
  }

  bool term_equal_key(const MTerm& a, const MTerm& b) const {
    return a.pos == b.pos && a.m == b.m;
  }

  void sort_mpoly(MPoly& p) const {
    std::sort(p.begin(), p.end(),
              [this](const MTerm& a, const MTerm& b) { return term_greater(a, b); });
    MPoly out;
    out.reserve(p.size());
    for (auto& t : p) {
      if (!out.empty() && term_equal_key(out.back(), t))
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    p = std::move(out);
  }

  // r = a + c * mu * b, all sorted; positions shift is not needed here
  MPoly add_scaled(const MPoly& a, const Int& c, const Monomial& mu,
                   const MPoly& b) const {
    MPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.push_back(a[i++]);
        continue;
      }
      MTerm bt{c * b[j].c, mu * b[j].m, b[j].pos};
      if (bt.c == 0) {
        ++j;
        continue;
      }
      if (i == a.size()) {
        r.push_back(std::move(bt));
        ++j;
        continue;
      }
      if (term_equal_key(a[i], bt)) {
        Int s = a[i].c + bt.c;
        if (s != 0) r.push_back({std::move(s), a[i].m, a[i].pos});
        ++i;
        ++j;
      } else if (term_greater(a[i], bt)) {
        r.push_back(a[i++]);
      } else {
        r.push_back(std::move(bt));
        ++j;
      }
    }
    return r;
  }

  void check_coeff(const Int& c) const {
    if (int_bits(c) > opts_.max_coeff_bits)
      throw resource_error(
          "groebner: coefficient exceeded " +
          std::to_string(opts_.max_coeff_bits) + " bits (basis size " +
          std::to_string(basis_.size()) + ", pairs " +
          std::to_string(stats_.pairs_processed) + ")");
  }

  // Strong normal form against the current basis.  skip = element to exclude
  // (for auto-reduction), or npos.
  MPoly reduce(MPoly g, std::size_t skip = npos, uint64_t* sugar = nullptr,
               bool top_only = false) const {
    std::size_t pos = 0;
    while (pos < g.size()) {
      if (top_only && pos > 0) break;
      const MTerm& t = g[pos];
      std::size_t best = npos;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == skip) continue;
        const MTerm& lt = basis_[k].p.front();
        if (lt.pos != t.pos || !lt.m.divides(t.m)) continue;
        if (best == npos ||
            cmpabs(basis_[k].p.front().c, basis_[best].p.front().c) < 0)
          best = k;
      }
      if (best == npos) {
        ++pos;
        continue;
      }
      const MPoly& e = basis_[best].p;
      const Int& lc = e.front().c;
      Int absc = abs(lc);
      Int r = int_mod(t.c, absc);
      if (2 * r > absc) r -= absc;  // balanced residue in (-|lc|/2, |lc|/2]
      if (r == t.c) {
        ++pos;
        continue;
      }
      Int q = int_divexact(t.c - r, lc);
      check_coeff(q);
      Monomial mu = t.m / e.front().m;
      if (sugar)
        *sugar = std::max(*sugar, basis_[best].sugar + uint64_t(mu.degree()));
      g = add_scaled(g, -q, mu, e);
      // r != 0: the term at pos now carries the canonical residue r, which is
      // below every applicable leading coefficient, so it is final.
      if (r != 0) ++pos;
    }
    return g;
  }

  static int cmpabs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  }

  static uint64_t base_sugar(const MPoly& p) {
    uint64_t s = 0;
    for (const auto& t : p) s = std::max<uint64_t>(s, t.m.degree());
    return s;
  }

  void sign_normalize(MPoly& p) const {
    if (!p.empty() && p.front().c < 0)
      for (auto& t : p) t.c = -t.c;
  }

  // Seed with an element of an already-known GB: no pairs among seeds.
  void seed(MPoly p) {
    sort_mpoly(p);
    if (p.empty()) return;
    sign_normalize(p);
    uint64_t su = base_sugar(p);
    basis_.push_back({std::move(p), su});
    seed_count_ = basis_.size();
  }

  // Seed pairs have standard representations already; let the chain
  // criterion use them.
  void mark_seed_pairs_done() {
    for (uint32_t j = 1; j < seed_count_; ++j)
      for (uint32_t i = 0; i < j; ++i) done_.insert(pair_key(i, j));
  }

  void add_input(MPoly p) {
    sort_mpoly(p);
    uint64_t su = base_sugar(p);
    p = reduce(std::move(p), npos, &su);
    if (p.empty()) return;
    sign_normalize(p);
    append_element(std::move(p), su);
  }

  void run(GroebnerStats* stats_out) {
    while (!queue_.empty()) {
      if (stats_.pairs_processed >= opts_.max_pairs)
        throw resource_error("groebner: pair cap " +
                             std::to_string(opts_.max_pairs) +
                             " exceeded (basis size " +
                             std::to_string(basis_.size()) + ")");
      Task task = *queue_.begin();
      queue_.erase(queue_.begin());
      ++stats_.pairs_processed;
      if (opts_.trace && stats_.pairs_processed % 512 == 0)
        std::fprintf(stderr,
                     "[gb] pairs=%llu queue=%zu basis=%zu\n",
                     static_cast<unsigned long long>(stats_.pairs_processed),
                     queue_.size(), basis_.size());
      process(task);
    }
    if (stats_out) {
      stats_out->pairs_processed = stats_.pairs_processed;
      stats_out->pairs_skipped = stats_.pairs_skipped;
      stats_out->basis_size = basis_.size();
    }
  }

  // Reduced basis: minimal, tails in normal form, positive leading
  // coefficients, sorted by ascending leading term.
  std::vector<MPoly> reduced_basis() {
    for (int rounds = 0; rounds < 1000; ++rounds) {
      bool changed = false;
      for (std::size_t i = 0; i < basis_.size();) {
        MPoly h = reduce(basis_[i].p, i);
        sign_normalize(h);
        if (h != basis_[i].p) {
          changed = true;
          if (h.empty()) {
            basis_.erase(basis_.begin() + static_cast<long>(i));
            continue;
          }
          basis_[i].p = std::move(h);
        }
        ++i;
      }
      if (!changed) break;
    }
    std::vector<MPoly> out;
    out.reserve(basis_.size());
    for (auto& e : basis_) out.push_back(std::move(e.p));
    std::sort(out.begin(), out.end(), [this](const MPoly& a, const MPoly& b) {
      std::size_t n = std::min(a.size(), b.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (!term_equal_key(a[k], b[k])) return !term_greater(a[k], b[k]);
        if (a[k].c != b[k].c) return a[k].c < b[k].c;
      }
      return a.size() < b.size();
    });
    return out;
  }

  // Full pairwise S/G verification of the current basis.
  bool verify_strong() {
    for (std::size_t j = 1; j < basis_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const MTerm& a = basis_[i].p.front();
        const MTerm& b = basis_[j].p.front();
        if (a.pos != b.pos) continue;
        if (!reduce(make_spoly(i, j)).empty()) return false;
        if (!reduce(make_gpoly(i, j)).empty()) return false;
      }
    return true;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Elt {
    MPoly p;
    uint64_t sugar;
  };

  struct Task {
    uint64_t sugar;
    Monomial lcm;
    uint32_t pos;
    uint32_t i, j;
    uint8_t kind;  // 0 = S, 1 = G
  };

  struct TaskLess {
    const Engine* e;
    bool operator()(const Task& a, const Task& b) const {
      Cmp c = compare_monomials(a.lcm, b.lcm, e->ord_);
      if (c != Cmp::EQ) return c == Cmp::LT;
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.kind != b.kind) return a.kind > b.kind;  // G-polys first
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  static uint64_t pair_key(uint32_t i, uint32_t j) {
    return (uint64_t(i) << 32) | j;
  }

  void retire(uint32_t i, uint32_t j) {
    auto it = pending_.find(pair_key(i, j));
    if (it == pending_.end()) return;
    if (--it->second == 0) {
      done_.insert(pair_key(i, j));
      pending_.erase(it);
    }
  }

  void append_element(MPoly p, uint64_t sugar) {
    for (const auto& term : p) check_coeff(term.c);
    uint32_t t = static_cast<uint32_t>(basis_.size());
    basis_.push_back({std::move(p), sugar});
    const MTerm& lt = basis_[t].p.front();
    for (uint32_t s = 0; s < t; ++s) {
      const MTerm& ls = basis_[s].p.front();
      if (ls.pos != lt.pos) continue;  // no pairs across positions
      Monomial l = lcm(ls.m, lt.m);
      int scheduled = 0;
      Int cg = int_gcd(ls.c, lt.c);
      bool g_skip = int_divides(ls.c, lt.c) || int_divides(lt.c, ls.c);
      bool s_skip = !module_mode_ && ls.m.coprime_with(lt.m) && cg == 1;
      uint64_t sug_s = std::max(basis_[s].sugar + uint64_t((l / ls.m).degree()),
                                basis_[t].sugar + uint64_t((l / lt.m).degree()));
      if (!s_skip) {
        queue_.insert(Task{sug_s, l, ls.pos, s, t, 0});
        ++scheduled;
      } else {
        ++stats_.pairs_skipped;
      }
      if (!g_skip) {
        queue_.insert(Task{sug_s, l, ls.pos, s, t, 1});
        ++scheduled;
      } else {
        ++stats_.pairs_skipped;
      }
      if (scheduled == 0)
        done_.insert(pair_key(s, t));
      else
        pending_[pair_key(s, t)] = scheduled;
    }
  }

  MPoly make_spoly(uint32_t i, uint32_t j) const {
    const MTerm& a = basis_[i].p.front();
    const MTerm& b = basis_[j].p.front();
    Monomial l = lcm(a.m, b.m);
    Int cl = int_lcm(a.c, b.c);
    MPoly s = add_scaled(MPoly{}, int_divexact(cl, a.c), l / a.m, basis_[i].p);
    return add_scaled(s, -int_divexact(cl, b.c), l / b.m, basis_[j].p);
  }

  MPoly make_gpoly(uint32_t i, uint32_t j) const {
    const MTerm& a = basis_[i].p.front();
    const MTerm& b = basis_[j].p.front();
    Monomial l = lcm(a.m, b.m);
    Int s, t;
    int_gcdext(a.c, b.c, s, t);
    MPoly g = add_scaled(MPoly{}, s, l / a.m, basis_[i].p);
    return add_scaled(g, t, l / b.m, basis_[j].p);
  }

  bool chain_applies(const Task& task) const {
    const MTerm& a = basis_[task.i].p.front();
    const MTerm& b = basis_[task.j].p.front();
    Int cg = int_gcd(a.c, b.c);
    for (uint32_t k = 0; k < basis_.size(); ++k) {
      if (k == task.i || k == task.j) continue;
      const MTerm& lk = basis_[k].p.front();
      if (lk.pos != task.pos) continue;
      if (!lk.m.divides(task.lcm)) continue;
      if (!int_divides(lk.c, cg)) continue;
      uint32_t i1 = std::min(task.i, k), j1 = std::max(task.i, k);
      uint32_t i2 = std::min(task.j, k), j2 = std::max(task.j, k);
      if (done_.count(pair_key(i1, j1)) && done_.count(pair_key(i2, j2)))
        return true;
    }
    return false;
  }

  void process(const Task& task) {
    // chain criterion: only for S-pairs of ideals (term-divisibility form)
    if (task.kind == 0 && !module_mode_ && chain_applies(task)) {
      ++stats_.pairs_skipped;
      retire(task.i, task.j);
      return;
    }
    MPoly p = task.kind == 0 ? make_spoly(task.i, task.j)
                             : make_gpoly(task.i, task.j);
    uint64_t sugar = task.sugar;
    p = reduce(std::move(p), npos, &sugar);
    retire(task.i, task.j);
    if (p.empty()) return;
    sign_normalize(p);
    append_element(std::move(p), sugar);
  }

  ContextPtr ctx_;
  MonomialOrder ord_;
  std::size_t width_;
  std::size_t pos_split_;
  GroebnerOptions opts_;
  bool module_mode_;
  std::size_t seed_count_ = 0;

  std::vector<Elt> basis_;
  std::multiset<Task, TaskLess> queue_{TaskLess{this}};
  std::unordered_map<uint64_t, int> pending_;
  std::unordered_set<uint64_t> done_;
  GroebnerStats stats_;
};

MPoly to_mpoly(const Polynomial& f, uint32_t pos) {
  MPoly p;
  p.reserve(f.terms().size());
  for (const auto& t : f.terms()) p.push_back({t.c, t.m, pos});
  return p;
}

Polynomial from_mpoly(const MPoly& p, const ContextPtr& ctx,
                      MonomialOrder ord) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.c, t.m});
  return Polynomial::from_terms(ctx, std::move(terms), ord);
}

MPoly row_to_mpoly(const PolyRow& row, Engine& eng) {
  MPoly acc;
  for (std::size_t j = 0; j < row.size(); ++j) {
    MPoly part = to_mpoly(row[j], static_cast<uint32_t>(j));
    acc.insert(acc.end(), part.begin(), part.end());
  }
  eng.sort_mpoly(acc);
  return acc;
}

PolyRow mpoly_to_row(const MPoly& p, std::size_t width, const ContextPtr& ctx,
                     MonomialOrder ord) {
  std::vector<std::vector<Term>> cols(width);
  for (const auto& t : p) cols[t.pos].push_back({t.c, t.m});
  PolyRow row;
  row.reserve(width);
  for (auto& c : cols)
    row.push_back(Polynomial::from_terms(ctx, std::move(c), ord));
  return row;
}

ContextPtr context_of(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (!g.context()) throw usage_error("polynomial without context");
    return g.context();
  }
  return nullptr;
}

}  // namespace

GBasis strong_groebner_basis(const std::vector<Polynomial>& gens,
                             MonomialOrder ord, const GroebnerOptions& opts,
                             GroebnerStats* stats) {
  ContextPtr ctx = context_of(gens);
  GBasis out;
  out.order = ord;
  if (!ctx) return out;
  for (const auto& g : gens)
    if (!same_context(g.context(), ctx))
      throw usage_error("groebner: generators in mixed contexts");
  Engine eng(ctx, ord, 1, 1, opts);
  for (const auto& g : gens) eng.add_input(to_mpoly(g.resorted(ord), 0));
  eng.run(stats);
  for (const auto& p : eng.reduced_basis())
    out.elements.push_back(from_mpoly(p, ctx, ord));
  return out;
}

GBasis groebner_extend(const GBasis& base, const std::vector<Polynomial>& extra,
                       const GroebnerOptions& opts, GroebnerStats* stats) {
  ContextPtr ctx = context_of(base.elements);
  if (!ctx) ctx = context_of(extra);
  GBasis out;
  out.order = base.order;
  if (!ctx) return out;
  Engine eng(ctx, base.order, 1, 1, opts);
  for (const auto& g : base.elements) eng.seed(to_mpoly(g.resorted(base.order), 0));
  eng.mark_seed_pairs_done();
  for (const auto& g : extra) {
    if (!same_context(g.context(), ctx))
      throw usage_error("groebner_extend: mixed contexts");
    eng.add_input(to_mpoly(g.resorted(base.order), 0));
  }
  eng.run(stats);
  for (const auto& p : eng.reduced_basis())
    out.elements.push_back(from_mpoly(p, ctx, base.order));
  return out;
}

Polynomial normal_form(const Polynomial& f, const GBasis& gb) {
  if (gb.elements.empty()) return f.resorted(gb.order);
  ContextPtr ctx = gb.elements[0].context();
  if (!same_context(f.context(), ctx))
    throw usage_error("normal_form: context mismatch");
  Engine eng(ctx, gb.order, 1, 1, GroebnerOptions{});
  for (const auto& g : gb.elements) eng.seed(to_mpoly(g.resorted(gb.order), 0));
  MPoly r = eng.reduce(to_mpoly(f.resorted(gb.order), 0));
  return from_mpoly(r, f.context(), gb.order);
}

bool is_strong_basis(const GBasis& gb, const GroebnerOptions& opts) {
  ContextPtr ctx = context_of(gb.elements);
  if (!ctx) return true;
  Engine eng(ctx, gb.order, 1, 1, opts);
  for (const auto& g : gb.elements) eng.seed(to_mpoly(g.resorted(gb.order), 0));
  return eng.verify_strong();
}

std::vector<PolyRow> module_groebner(const std::vector<PolyRow>& rows,
                                     std::size_t width, std::size_t pos_split,
                                     MonomialOrder ord,
                                     const GroebnerOptions& opts) {
  ContextPtr ctx;
  for (const auto& row : rows) {
    if (row.size() != width)
      throw usage_error("module_groebner: ragged row width");
    for (const auto& e : row)
      if (e.context()) {
        ctx = e.context();
        break;
      }
    if (ctx) break;
  }
  if (!ctx) return {};
  Engine eng(ctx, ord, std::max<std::size_t>(width, 2), pos_split, opts);
  for (const auto& row : rows) {
    MPoly p = row_to_mpoly(row, eng);
    eng.add_input(std::move(p));
  }
  eng.run(nullptr);
  std::vector<PolyRow> out;
  for (const auto& p : eng.reduced_basis())
    out.push_back(mpoly_to_row(p, width, ctx, ord));
  return out;
}

std::vector<PolyRow> module_syzygies(const std::vector<PolyRow>& rows,
                                     std::size_t width, MonomialOrder ord,
                                     const GroebnerOptions& opts) {
  const std::size_t u = rows.size();
  std::vector<PolyRow> tagged;
  tagged.reserve(u);
  ContextPtr ctx;
  for (const auto& row : rows)
    for (const auto& e : row)
      if (e.context()) ctx = e.context();
  if (!ctx) throw usage_error("module_syzygies: no context");
  for (std::size_t i = 0; i < u; ++i) {
    PolyRow row = rows[i];
    row.resize(width + u, Polynomial::zero(ctx, ord));
    row[width + i] = Polynomial::constant(ctx, 1, ord);
    tagged.push_back(std::move(row));
  }
  auto gb = module_groebner(tagged, width + u, width, ord, opts);
  std::vector<PolyRow> syz;
  for (auto& row : gb) {
    bool in_sub = true;
    for (std::size_t j = 0; j < width && in_sub; ++j)
      if (!row[j].is_zero()) in_sub = false;
    if (!in_sub) continue;
    PolyRow s(row.begin() + static_cast<long>(width), row.end());
    syz.push_back(std::move(s));
  }
  return syz;
}

}  // namespace nfl
