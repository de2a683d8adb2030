#include "nfl/embedding.hpp"

#include <algorithm>
#include <set>

namespace nfl {

Polynomial EmbeddingMap::apply(const Polynomial& f) const {
  std::vector<std::optional<Polynomial>> imgs;
  imgs.reserve(images.size());
  for (const auto& p : images) imgs.emplace_back(p);
  return f.substituted(target, imgs);
}

namespace {

struct Step {
  ContextPtr from;
  ContextPtr to;
  std::vector<std::optional<Polynomial>> images;  // per `from` variable
};

// context with the given variable indices removed, order preserved
ContextPtr remove_vars(const ContextPtr& ctx, const std::set<std::size_t>& drop) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ctx->size(); ++i)
    if (!drop.count(i)) names.push_back(ctx->name(i));
  return VarContext::params(std::move(names));
}

Step identity_on_remaining(const ContextPtr& from,
                           const std::set<std::size_t>& drop) {
  Step st;
  st.from = from;
  st.to = remove_vars(from, drop);
  st.images.resize(from->size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < from->size(); ++i)
    if (!drop.count(i)) st.images[i] = Polynomial::variable(st.to, k++);
  return st;
}

}  // namespace

std::pair<Slice, EmbeddingMap> shrink_embedding(const Slice& s) {
  ContextPtr cur = s.ctx;
  Ideal I = s.I;
  EmbeddingMap emb;
  emb.source = s.ctx;
  emb.target = s.ctx;
  for (std::size_t i = 0; i < s.ctx->size(); ++i)
    emb.images.push_back(Polynomial::variable(s.ctx, i));

  auto apply_step = [&](Step st) {
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    for (const auto& g : I.groebner().elements) {
      Polynomial h = g.substituted(st.to, st.images);
      if (h.is_zero()) continue;
      if (seen.insert(h.sign_normalized().canonical_key()).second)
        gens.push_back(std::move(h));
    }
    I = Ideal(st.to, std::move(gens), I.options());
    for (auto& img : emb.images) img = img.substituted(st.to, st.images);
    emb.target = st.to;
    cur = st.to;
  };

  for (int guard = 0; guard < 1024; ++guard) {
    const GBasis& gb = I.groebner();
    if (gb.is_trivial()) break;

    // (a) non-standard indeterminates: NF(y) != y; the normal form lives in
    // the standard subring, substitute it everywhere
    std::set<std::size_t> nonstd;
    std::vector<Polynomial> nf_of(cur->size(), Polynomial());
    for (std::size_t v = 0; v < cur->size(); ++v) {
      Polynomial var = Polynomial::variable(cur, v);
      Polynomial nf = normal_form(var, gb);
      if (!nf.equals(var)) {
        nonstd.insert(v);
        nf_of[v] = nf;
      }
    }
    if (!nonstd.empty()) {
      Step st = identity_on_remaining(cur, nonstd);
      for (std::size_t v : nonstd)
        st.images[v] = nf_of[v].substituted(st.to, st.images);
      apply_step(std::move(st));
      continue;
    }

    // (b) unit pivot: g = u*y + h with u = +-1 and h free of y
    bool fired = false;
    for (const auto& g : gb.elements) {
      for (const auto& t : g.terms()) {
        if (t.m.degree() != 1 || !is_pm_one(t.c)) continue;
        uint32_t y = t.m.min_var();
        bool clean = true;
        for (const auto& t2 : g.terms())
          if (&t2 != &t && t2.m.exponent(y) > 0) {
            clean = false;
            break;
          }
        if (!clean) continue;
        // y = -u * (g - u*y)
        Polynomial h = g - Polynomial::variable(cur, y).times_int(t.c);
        Polynomial image = h.times_int(-t.c);
        std::set<std::size_t> drop{y};
        Step st = identity_on_remaining(cur, drop);
        st.images[y] = image.substituted(st.to, st.images);
        apply_step(std::move(st));
        fired = true;
        break;
      }
      if (fired) break;
    }
    if (!fired) break;
  }

  Slice out;
  out.ctx = cur;
  out.I = I;
  out.matroid = s.matroid;
  out.chosen_basis = s.chosen_basis;
  out.representable = s.representable;
  out.P.ctx = cur;
  out.P.rows = s.P.rows;
  out.P.cols = s.P.cols;
  std::vector<std::optional<Polynomial>> imgs;
  for (const auto& p : emb.images) imgs.emplace_back(p);
  for (const auto& e : s.P.entries)
    out.P.entries.push_back(I.reduce(e.substituted(cur, imgs)));
  std::set<std::string> seen;
  for (const auto& e : s.exclusions) {
    Polynomial t = I.reduce(e.substituted(cur, imgs)).sign_normalized();
    if (t.is_zero())
      throw error("shrink_embedding: exclusion vanished under the embedding");
    if (t.is_unit_constant()) continue;
    if (seen.insert(t.canonical_key()).second)
      out.exclusions.push_back(std::move(t));
  }
  std::sort(out.exclusions.begin(), out.exclusions.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return {std::move(out), std::move(emb)};
}

}  // namespace nfl
