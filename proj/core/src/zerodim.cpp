#include "gonalis/zerodim.hpp"

#include "gonalis/rational.hpp"

namespace gonalis {

template <class K>
UPoly<K> matrix_minpoly(const K& F, const Mat<K>& M, Rng& rng, int tries) {
  const int n = M.rows();
  UPoly<K> acc{F.one()};  // running lcm
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<typename K::elem> v(n, F.zero());
    for (auto& c : v) c = F.random(rng);
    // Krylov: v, Mv, M^2 v, ... until dependence.
    RowSpace<K> space(n, F);
    std::vector<std::vector<typename K::elem>> seq;
    seq.push_back(v);
    int k = 0;
    while (true) {
      if (!space.insert(seq.back())) break;
      // next = M * seq.back()
      std::vector<typename K::elem> next(n, F.zero());
      for (int i = 0; i < n; ++i) {
        auto s = F.zero();
        for (int j = 0; j < n; ++j) s = F.add(s, F.mul(M.at(i, j), seq.back()[j]));
        next[i] = s;
      }
      seq.push_back(std::move(next));
      ++k;
      if (k > n) throw std::logic_error("matrix_minpoly: Krylov did not terminate");
    }
    // seq[k] = sum c_j seq[j]: solve the k x k system.
    Mat<K> A(n, k, F);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) A.at(i, j) = seq[j][i];
    auto sol = solve(F, A, seq[k]);
    if (!sol) throw std::logic_error("matrix_minpoly: inconsistent Krylov system");
    UPoly<K> m(k + 1, F.zero());
    m[k] = F.one();
    for (int j = 0; j < k; ++j) m[j] = F.neg((*sol)[j]);
    // acc = lcm(acc, m) = acc * m / gcd
    auto g = up_gcd(F, acc, m);
    acc = up_mul(F, acc, up_divmod(F, m, g).first);
    if (up_deg(acc) == n) break;  // cannot grow further
  }
  return up_monic(F, acc);
}

template UPoly<Fp> matrix_minpoly<Fp>(const Fp&, const Mat<Fp>&, Rng&, int);
template UPoly<RatField> matrix_minpoly<RatField>(const RatField&, const Mat<RatField>&, Rng&,
                                                  int);

std::optional<FpAffineSolution> solve_zerodim_affine(const Fp& F, const GroebnerBasis<Fp>& gb,
                                                     Rng& rng) {
  auto basis_opt = standard_monomials(gb);
  if (!basis_opt) return std::nullopt;
  const auto& basis = *basis_opt;
  FpAffineSolution out;
  out.quotient_dim = static_cast<int>(basis.size());
  if (basis.empty()) return out;

  const int n = gb.ring.n;
  const int D = out.quotient_dim;

  // Index of the constant monomial in the basis.
  int one_idx = -1;
  for (int i = 0; i < D; ++i)
    if (basis[i].deg == 0) one_idx = i;
  if (one_idx < 0) throw std::logic_error("solve_zerodim_affine: no constant in basis");

  // Coordinate evaluation data: dense NF(x_i).
  std::vector<std::vector<Fp::elem>> coord_nf(n, std::vector<Fp::elem>(D, F.zero()));
  {
    std::unordered_map<Mono, int, MonoHash> index;
    for (int i = 0; i < D; ++i) index[basis[i]] = i;
    for (int v = 0; v < n; ++v) {
      auto nf = normal_form(F, gb, poly_var(F, v));
      for (const auto& t : nf.terms) coord_nf[v][index.at(t.m)] = t.c;
    }
  }

  for (int attempt = 0; attempt < 6; ++attempt) {
    // Random separating linear form.
    Poly<Fp> lambda;
    for (int v = 0; v < n; ++v)
      lambda = poly_add(F, gb.ring, lambda, poly_scale(F, poly_var(F, v), F.random(rng)));
    if (lambda.is_zero()) continue;
    auto M = multiplication_matrix(F, gb, basis, lambda);
    auto mp = matrix_minpoly(F, M, rng);
    auto roots = up_roots_scan(F, mp);

    std::vector<FpPoint> pts;
    bool ambiguous = false;
    auto Mt = M.transposed(F);
    for (auto r : roots) {
      // Eigenfunctionals of multiplication: evaluation at the point.
      Mat<Fp> A = Mt;
      for (int i = 0; i < D; ++i) A.at(i, i) = F.sub(A.at(i, i), r);
      auto ker = nullspace(F, A);
      if (ker.cols() != 1) {
        ambiguous = true;
        break;
      }
      std::vector<Fp::elem> w(D);
      for (int i = 0; i < D; ++i) w[i] = ker.at(i, 0);
      if (F.is_zero(w[one_idx])) {
        ambiguous = true;
        break;
      }
      auto scale = F.inv(w[one_idx]);
      FpPoint pt;
      pt.coords.resize(n);
      for (int v = 0; v < n; ++v) {
        auto s = F.zero();
        for (int i = 0; i < D; ++i) s = F.add(s, F.mul(coord_nf[v][i], w[i]));
        pt.coords[v] = F.mul(s, scale);
      }
      pts.push_back(std::move(pt));
    }
    if (ambiguous) continue;

    // Keep verified zeros only.
    std::vector<FpPoint> verified;
    for (auto& pt : pts) {
      std::vector<Fp::elem> x(kMaxVars, F.zero());
      for (int v = 0; v < n; ++v) x[v] = pt.coords[v];
      bool ok = true;
      for (const auto& p : gb.polys)
        if (!F.is_zero(poly_eval(F, p, x))) {
          ok = false;
          break;
        }
      if (ok) verified.push_back(std::move(pt));
    }
    out.points = std::move(verified);
    return out;
  }
  // Separating form not found; report no rational points rather than guessing.
  out.points.clear();
  return out;
}

std::vector<FpPoint> rational_points_projective(const Fp& F, const Ring& ring,
                                                const std::vector<Poly<Fp>>& gens, Rng& rng,
                                                const GBOptions& opts) {
  const int n = ring.n;
  std::vector<FpPoint> all;
  for (int chart = 0; chart < n; ++chart) {
    // Affine chart x_chart = 1, coordinates x_j (j > chart); earlier vars are 0
    // (their points were caught by earlier charts).
    Ring sub = Ring::standard(n - chart - 1, "c");
    std::vector<Poly<Fp>> images(kMaxVars, Poly<Fp>{});
    for (int j = 0; j < chart; ++j) images[j] = Poly<Fp>{};
    images[chart] = poly_const(F, F.one());
    for (int j = chart + 1; j < n; ++j) images[j] = poly_var(F, j - chart - 1);
    std::vector<Poly<Fp>> affine;
    for (const auto& g : gens) {
      auto s = poly_subst(F, sub, g, images);
      if (!s.is_zero()) affine.push_back(s);
    }
    if (sub.n == 0) {
      // Last chart holds the single point (0:...:0:1); on it iff all gens vanish.
      if (affine.empty() && !gens.empty()) {
        FpPoint pt;
        pt.coords.assign(n, 0);
        pt.coords[chart] = 1;
        all.push_back(pt);
      }
      continue;
    }
    auto gb = buchberger(F, sub, affine, opts);
    // Unit ideal: nothing in this chart.
    if (!gb.polys.empty() && gb.polys.front().degree() == 0) continue;
    auto sol = solve_zerodim_affine(F, gb, rng);
    if (!sol) continue;  // positive-dimensional in this chart; caller beware
    for (const auto& p : sol->points) {
      FpPoint pt;
      pt.coords.assign(n, 0);
      pt.coords[chart] = 1;
      for (int j = chart + 1; j < n; ++j) pt.coords[j] = p.coords[j - chart - 1];
      all.push_back(pt);
    }
  }
  return all;
}

}  // namespace gonalis
