#pragma once

#include <optional>
#include <vector>

#include "gonalis/groebner.hpp"
#include "gonalis/matrix.hpp"
#include "gonalis/rng.hpp"
#include "gonalis/upoly.hpp"

namespace gonalis {

// Monomials outside the leading term ideal.  Finite exactly when the ideal is
// zero-dimensional as an affine ideal.
template <class K>
std::optional<std::vector<Mono>> standard_monomials(const GroebnerBasis<K>& gb,
                                                    int limit = 200000) {
  // Finiteness: every variable must appear as a pure power among the leads.
  for (int v = 0; v < gb.ring.n; ++v) {
    bool pure = false;
    for (const auto& p : gb.polys) {
      const Mono& m = p.lead().m;
      bool only_v = m.deg > 0;
      for (int i = 0; i < gb.ring.n && only_v; ++i)
        if (i != v && m.e[i]) only_v = false;
      if (only_v && m.e[v]) {
        pure = true;
        break;
      }
    }
    if (!pure) return std::nullopt;
  }
  std::vector<Mono> basis;
  for (int d = 0;; ++d) {
    auto ms = monomials_of_degree(gb.ring, d);
    int added = 0;
    for (const auto& m : ms) {
      bool in_lead = false;
      for (const auto& p : gb.polys)
        if (p.lead().m.divides(m)) {
          in_lead = true;
          break;
        }
      if (!in_lead) {
        basis.push_back(m);
        ++added;
        if (static_cast<int>(basis.size()) > limit) return std::nullopt;
      }
    }
    if (added == 0) break;
  }
  return basis;
}

// Matrix of multiplication by f on the quotient algebra, in the given
// standard monomial basis (columns are NF(f * m_j) coordinates).
template <class K>
Mat<K> multiplication_matrix(const K& F, const GroebnerBasis<K>& gb,
                             const std::vector<Mono>& basis, const Poly<K>& f) {
  const int n = static_cast<int>(basis.size());
  std::unordered_map<Mono, int, MonoHash> index;
  for (int i = 0; i < n; ++i) index[basis[i]] = i;
  Mat<K> M(n, n, F);
  for (int j = 0; j < n; ++j) {
    auto prod = normal_form(F, gb, poly_mul_term(F, f, basis[j], F.one()));
    for (const auto& t : prod.terms) {
      auto it = index.find(t.m);
      if (it == index.end()) throw std::logic_error("multiplication_matrix: NF outside basis");
      M.at(it->second, j) = t.c;
    }
  }
  return M;
}

// Minimal polynomial of a square matrix via Krylov sequences (lcm over a few
// random start vectors).
template <class K>
UPoly<K> matrix_minpoly(const K& F, const Mat<K>& M, Rng& rng, int tries = 3);

struct FpPoint {
  std::vector<std::uint32_t> coords;
};

// All GF(p)-rational points of a zero-dimensional affine ideal, plus the
// vector space dimension of the quotient (degree with multiplicity).
// Returns nullopt if the ideal is not zero-dimensional.
struct FpAffineSolution {
  std::vector<FpPoint> points;
  int quotient_dim = 0;
};
std::optional<FpAffineSolution> solve_zerodim_affine(const Fp& F, const GroebnerBasis<Fp>& gb,
                                                     Rng& rng);

// GF(p)-rational points of a projective zero- (or low-) dimensional ideal by
// sweeping the standard affine charts.  Points are normalized so the first
// nonzero coordinate is 1.  Ideal generators must be homogeneous.
std::vector<FpPoint> rational_points_projective(const Fp& F, const Ring& ring,
                                                const std::vector<Poly<Fp>>& gens, Rng& rng,
                                                const GBOptions& opts = {});

}  // namespace gonalis
