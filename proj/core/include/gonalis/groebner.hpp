#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gonalis/poly.hpp"

namespace gonalis {

// Raised when a computation exceeds its configured work budget.  Carries
// enough context for the caller to report a partial certificate.
struct DegreeBudgetExceeded : std::runtime_error {
  explicit DegreeBudgetExceeded(const std::string& what, long long spent_)
      : std::runtime_error(what), spent(spent_) {}
  long long spent;
};

struct GBOptions {
  // Ignore S-pairs whose lcm degree exceeds the cap; the result is then a
  // d-truncated basis, valid for all computations in degrees <= cap.
  int degree_cap = -1;
  // Hard budget on reduction steps; DegreeBudgetExceeded past it.
  long long max_reductions = 50'000'000;
};

template <class K>
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly<K>> polys;  // reduced, monic
  int truncation = -1;         // degree cap it was computed under, -1 if none
};

// ---------------------------------------------------------------------------
// Normal form: full reduction of every term modulo the basis.
template <class K>
Poly<K> normal_form(const K& F, const Ring& r, const std::vector<Poly<K>>& basis,
                    Poly<K> p) {
  Poly<K> out;
  while (!p.is_zero()) {
    bool reduced = false;
    const Mono& lm = p.lead().m;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lead().m.divides(lm)) {
        auto q = lm / g.lead().m;
        auto c = F.div(p.lead().c, g.lead().c);
        p = poly_sub(F, r, p, poly_mul_term(F, g, q, c));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.terms.push_back(p.lead());
      p.terms.erase(p.terms.begin());
    }
  }
  return out;
}

template <class K>
Poly<K> normal_form(const K& F, const GroebnerBasis<K>& gb, const Poly<K>& p) {
  return normal_form(F, gb.ring, gb.polys, p);
}

template <class K>
bool in_ideal(const K& F, const GroebnerBasis<K>& gb, const Poly<K>& p) {
  return normal_form(F, gb, p).is_zero();
}

// ---------------------------------------------------------------------------
// Buchberger with the Gebauer-Moeller pair criteria.

template <class K>
GroebnerBasis<K> buchberger(const K& F, const Ring& r, std::vector<Poly<K>> gens,
                            const GBOptions& opts = {}) {
  struct Pair {
    int i, j;
    Mono l;
  };
  std::vector<Poly<K>> g;
  std::vector<Pair> pairs;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
    return r.greater(b.l, a.l);  // smaller lcm first
  };

  auto add_generator = [&](Poly<K> p) {
    int k = static_cast<int>(g.size());
    const Mono& lk = p.lead().m;
    // Gebauer-Moeller: drop queued pairs made redundant by the new leading term.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      if (lk.divides(pr.l) && lcm(g[pr.i].lead().m, lk) != pr.l &&
          lcm(g[pr.j].lead().m, lk) != pr.l)
        continue;
      kept.push_back(pr);
    }
    pairs.swap(kept);
    // Candidate new pairs (i,k).
    std::vector<Pair> fresh;
    for (int i = 0; i < k; ++i) fresh.push_back({i, k, lcm(g[i].lead().m, lk)});
    // M-criterion: discard (i,k) if another (j,k) has a strictly dividing lcm.
    std::vector<bool> drop(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (fresh[b].l != fresh[a].l && fresh[b].l.divides(fresh[a].l)) drop[a] = true;
      }
    // F-criterion: among equal lcms keep one.
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = a + 1; b < fresh.size(); ++b)
        if (!drop[a] && !drop[b] && fresh[a].l == fresh[b].l) drop[b] = true;
    // Buchberger coprime criterion.
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a] && g[fresh[a].i].lead().m.coprime_with(lk)) drop[a] = true;
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) pairs.push_back(fresh[a]);
    g.push_back(std::move(p));
  };

  for (auto& p : gens) {
    poly_normalize(F, r, p);
    if (p.is_zero()) continue;
    add_generator(poly_monic(F, p));
  }

  long long work = 0;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    if (opts.degree_cap >= 0 && pr.l.deg > opts.degree_cap) continue;
    const Poly<K>& a = g[pr.i];
    const Poly<K>& b = g[pr.j];
    auto sa = poly_mul_term(F, a, pr.l / a.lead().m, F.one());
    auto sb = poly_mul_term(F, b, pr.l / b.lead().m, F.one());
    auto s = poly_sub(F, r, sa, sb);
    work += static_cast<long long>(s.terms.size()) + 1;
    if (work > opts.max_reductions)
      throw DegreeBudgetExceeded("groebner basis reduction budget exhausted", work);
    auto nf = normal_form(F, r, g, s);
    if (!nf.is_zero()) add_generator(poly_monic(F, nf));
  }

  // Inter-reduce to the reduced basis: drop members whose lead is divisible by
  // another lead, then put every member in normal form w.r.t. the others.
  std::vector<Poly<K>> reduced;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (g[j].lead().m.divides(g[i].lead().m) &&
          !(g[i].lead().m == g[j].lead().m && i < j)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(g[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly<K>> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = poly_monic(F, normal_form(F, r, others, reduced[i]));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly<K>& x, const Poly<K>& y) { return r.greater(y.lead().m, x.lead().m); });

  GroebnerBasis<K> out;
  out.ring = r;
  out.polys = std::move(reduced);
  out.truncation = opts.degree_cap;
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert series / dimension / degree from the leading term ideal.

struct HilbertData {
  int dim = -1;            // projective dimension of the zero set (-1: empty)
  long long degree = 0;    // degree of the projective scheme
  std::vector<long long> numerator;  // N(T) with H_{S/I}(T) = N(T)/(1-T)^n
};

// Numerator of the Hilbert series of S/(monomial ideal).
std::vector<long long> hilbert_numerator(std::vector<Mono> gens, int nvars);

// Hilbert function value dim_k (S/I)_j from the numerator.
long long hilbert_function(const std::vector<long long>& numerator, int nvars, int j);

HilbertData hilbert_from_leads(const std::vector<Mono>& leads, int nvars);

template <class K>
HilbertData hilbert_data(const GroebnerBasis<K>& gb) {
  std::vector<Mono> leads;
  leads.reserve(gb.polys.size());
  for (const auto& p : gb.polys) leads.push_back(p.lead().m);
  return hilbert_from_leads(leads, gb.ring.n);
}

// ---------------------------------------------------------------------------
// Variable manipulation, elimination, saturation, intersection.

// Re-embeds p into a ring with `k` new variables prepended.
template <class K>
Poly<K> prepend_vars(const Poly<K>& p, int k) {
  Poly<K> out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Mono m;
    m.deg = t.m.deg;
    for (int i = kMaxVars - 1; i >= k; --i) m.e[i] = t.m.e[i - k];
    out.terms.push_back({m, t.c});
  }
  return out;
}

// Drops the first k variables (which must not occur in p).
template <class K>
Poly<K> chop_vars(const Poly<K>& p, int k) {
  Poly<K> out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Mono m;
    m.deg = t.m.deg;
    for (int i = 0; i < kMaxVars - k; ++i) m.e[i] = t.m.e[i + k];
    out.terms.push_back({m, t.c});
  }
  return out;
}

// Members of the basis lying in the subring without the first `block` vars,
// with those vars chopped off.  Assumes gb was computed in an elimination
// order for that block.
template <class K>
std::vector<Poly<K>> eliminate_block(const GroebnerBasis<K>& gb, int block) {
  std::vector<Poly<K>> out;
  for (const auto& p : gb.polys) {
    bool pure = true;
    for (int i = 0; i < block && pure; ++i)
      if (p.lead().m.e[i]) pure = false;
    if (pure) out.push_back(chop_vars(p, block));
  }
  return out;
}

// I : f^infinity via the extra-variable trick: eliminate t from I + (1 - t f).
template <class K>
std::vector<Poly<K>> saturate_by(const K& F, const Ring& r, const std::vector<Poly<K>>& gens,
                                 const Poly<K>& f, const GBOptions& opts = {}) {
  if (r.n + 1 > kMaxVars) throw std::invalid_argument("saturate_by: too many variables");
  std::vector<std::string> names;
  names.push_back("sat_t");
  for (const auto& nm : r.names) names.push_back(nm);
  Ring rt = Ring::with_vars(names, /*elim=*/1);
  std::vector<Poly<K>> ext;
  ext.reserve(gens.size() + 1);
  for (const auto& p : gens) ext.push_back(prepend_vars(p, 1));
  // 1 - t*f
  auto tf = poly_mul(F, rt, poly_var(F, 0), prepend_vars(f, 1));
  ext.push_back(poly_sub(F, rt, poly_const(F, F.one()), tf));
  GBOptions o = opts;
  o.degree_cap = -1;  // truncation is unsound through the Rabinowitsch trick
  auto gb = buchberger(F, rt, ext, o);
  return eliminate_block(gb, 1);
}

// Intersection of two ideals: eliminate t from t*I + (1-t)*J.
template <class K>
std::vector<Poly<K>> intersect_ideals(const K& F, const Ring& r,
                                      const std::vector<Poly<K>>& I,
                                      const std::vector<Poly<K>>& J,
                                      const GBOptions& opts = {}) {
  if (r.n + 1 > kMaxVars) throw std::invalid_argument("intersect_ideals: too many variables");
  std::vector<std::string> names;
  names.push_back("sect_t");
  for (const auto& nm : r.names) names.push_back(nm);
  Ring rt = Ring::with_vars(names, /*elim=*/1);
  auto t = poly_var(F, 0);
  auto one_minus_t = poly_sub(F, rt, poly_const(F, F.one()), t);
  std::vector<Poly<K>> ext;
  for (const auto& p : I) ext.push_back(poly_mul(F, rt, t, prepend_vars(p, 1)));
  for (const auto& p : J) ext.push_back(poly_mul(F, rt, one_minus_t, prepend_vars(p, 1)));
  GBOptions o = opts;
  o.degree_cap = -1;
  auto gb = buchberger(F, rt, ext, o);
  return eliminate_block(gb, 1);
}

// I : (f_1, ..., f_k)^infinity = intersection of the single-f saturations.
template <class K>
std::vector<Poly<K>> saturate_by_ideal(const K& F, const Ring& r,
                                       const std::vector<Poly<K>>& gens,
                                       const std::vector<Poly<K>>& fs,
                                       const GBOptions& opts = {}) {
  std::vector<Poly<K>> acc;
  bool first = true;
  for (const auto& f : fs) {
    auto s = saturate_by(F, r, gens, f, opts);
    if (first) {
      acc = std::move(s);
      first = false;
    } else {
      acc = intersect_ideals(F, r, acc, s, opts);
    }
  }
  return acc;
}

}  // namespace gonalis
