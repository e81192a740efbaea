#include <doctest.h>

#include "gonalis/fp.hpp"
#include "gonalis/resolution.hpp"
#include "gonalis/rng.hpp"

#include <vector>

using namespace gonalis;

namespace {

const Fp F(10007);

std::vector<Poly<Fp>> parse_all(const Ring& rt, const std::vector<std::string>& srcs) {
  std::vector<Poly<Fp>> out;
  for (const auto& s : srcs) out.push_back(parse_poly(F, rt, s));
  return out;
}

Resolution<Fp> resolve_ideal(const Ring& rt, const std::vector<Poly<Fp>>& gens,
                             std::vector<long long>* numerator_out = nullptr,
                             ResolveOptions opt = {}) {
  auto gb = buchberger(F, rt, gens);
  auto hd = hilbert_data(gb);
  if (numerator_out) *numerator_out = hd.numerator;
  return resolve(F, rt, gens, hd.numerator, opt);
}

// A random linear form in the given ring.
Poly<Fp> random_linear(const Ring& rt, Rng& rng) {
  Poly<Fp> p;
  for (int v = 0; v < rt.n; ++v)
    p = poly_add(F, rt, p, poly_scale(F, poly_var<Fp>(F, v), F.random_nonzero(rng)));
  return p;
}

Poly<Fp> random_quadric(const Ring& rt, Rng& rng) {
  Poly<Fp> p;
  for (const Mono& m : monomials_of_degree(rt, 2))
    p = poly_add(F, rt, p, poly_term<Fp>(F, m, F.random(rng)));
  return p;
}

// Canonical ideal of a general genus-6 curve: the quadric section of a
// quintic del Pezzo surface given by the 4x4 Pfaffians of a skew 5x5 matrix
// of random linear forms in six variables.
std::vector<Poly<Fp>> genus6_canonical(const Ring& rt, uint64_t seed) {
  Rng rng(seed, "genus6");
  std::vector<std::vector<Poly<Fp>>> a(5, std::vector<Poly<Fp>>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      a[i][j] = random_linear(rt, rng);
      a[j][i] = poly_neg(F, a[i][j]);
    }
  auto mul = [&](const Poly<Fp>& x, const Poly<Fp>& y) { return poly_mul(F, rt, x, y); };
  std::vector<Poly<Fp>> gens;
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> ix;
    for (int q = 0; q < 5; ++q)
      if (q != drop) ix.push_back(q);
    // Pfaffian of the 4x4 skew submatrix on rows/columns ix.
    Poly<Fp> pf = poly_sub(F, rt, mul(a[ix[0]][ix[1]], a[ix[2]][ix[3]]),
                           mul(a[ix[0]][ix[2]], a[ix[1]][ix[3]]));
    pf = poly_add(F, rt, pf, mul(a[ix[0]][ix[3]], a[ix[1]][ix[2]]));
    gens.push_back(pf);
  }
  gens.push_back(random_quadric(rt, rng));
  return gens;
}

bool strand_composes_to_zero(const Ring& rt, const LinearStrand<Fp>& st) {
  for (size_t s = 1; s < st.maps.size(); ++s) {
    const auto& a = st.maps[s - 1];
    const auto& b = st.maps[s];
    for (int i = 0; i < a.target.size(); ++i)
      for (int j = 0; j < b.source.size(); ++j) {
        Poly<Fp> acc;
        for (int m = 0; m < a.source.size(); ++m)
          acc = poly_add(F, rt, acc, poly_mul(F, rt, a.entries[i][m], b.entries[m][j]));
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("colex subset enumeration agrees with its rank function") {
  for (int n : {4, 6})
    for (int k = 0; k <= n; ++k) {
      auto subs = colex_subsets(n, k);
      REQUIRE(static_cast<long long>(subs.size()) == binomial(n, k));
      for (size_t i = 0; i < subs.size(); ++i)
        CHECK(colex_rank(subs[i]) == static_cast<long long>(i));
    }
}

TEST_CASE("minimalize_generators drops consequences of lower degrees") {
  Ring rt = Ring::standard(2);
  auto gens = parse_all(rt, {"x0^2", "x1^2", "x0*x1", "x0^3 + x1^3", "x0^2 + x0*x1"});
  auto min = minimalize_generators(F, rt, gens);
  // x0^3 + x1^3 = x0*x0^2 + x1*x1^2 and the last quadric is a combination.
  CHECK(min.size() == 3);
  for (const auto& p : min) CHECK(p.degree() == 2);
}

TEST_CASE("twisted cubic: Hilbert-Burch resolution") {
  Ring rt = Ring::standard(4);
  auto gens = parse_all(rt, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  std::vector<long long> num;
  auto res = resolve_ideal(rt, gens, &num);
  REQUIRE(res.complete);
  REQUIRE(res.length() == 2);
  auto t = betti_of(res);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 3);
  CHECK(t.at(2, 3) == 2);
  CHECK(composes_to_zero(F, res));
  CHECK(euler_consistent(t, num));
}

TEST_CASE("complete intersection with a degree gap in the last syzygy") {
  // (x0^2, x1^3) in three variables: Koszul relation sits in degree 5,
  // two degrees above the top generator, so the scan must jump the gap.
  Ring rt = Ring::standard(3);
  auto gens = parse_all(rt, {"x0^2", "x1^3"});
  std::vector<long long> num;
  auto res = resolve_ideal(rt, gens, &num);
  REQUIRE(res.complete);
  REQUIRE(res.length() == 2);
  auto t = betti_of(res);
  CHECK(t.at(1, 2) == 1);
  CHECK(t.at(1, 3) == 1);
  CHECK(t.at(2, 5) == 1);
  CHECK(composes_to_zero(F, res));
  CHECK(euler_consistent(t, num));
}

TEST_CASE("rational normal quartic: Eagon-Northcott linear resolution") {
  Ring rt = Ring::standard(5);
  std::vector<Poly<Fp>> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto xi = [&](int k) { return poly_var<Fp>(F, k); };
      gens.push_back(poly_sub(F, rt, poly_mul(F, rt, xi(i), xi(j + 1)),
                              poly_mul(F, rt, xi(i + 1), xi(j))));
    }
  std::vector<long long> num;
  auto res = resolve_ideal(rt, gens, &num);
  REQUIRE(res.complete);
  REQUIRE(res.length() == 3);
  auto t = betti_of(res);
  CHECK(t.at(1, 2) == 6);
  CHECK(t.at(2, 3) == 8);
  CHECK(t.at(3, 4) == 3);
  CHECK(t.at(2, 4) == 0);
  CHECK(composes_to_zero(F, res));
  CHECK(euler_consistent(t, num));

  // The resolution is entirely linear, so the strand recovers it in full.
  auto st = linear_strand(F, rt, gens);
  CHECK(st.row() == std::vector<long long>{6, 8, 3});
  CHECK(strand_composes_to_zero(rt, st));
}

TEST_CASE("genus 5: three general quadrics, Koszul Betti table both ways") {
  Ring rt = Ring::standard(5);
  auto gens = parse_all(rt, {"x0^2 + x1^2 + x2^2 + x3^2 + x4^2",
                             "x0*x1 + x1*x2 + x2*x3 + x3*x4 + x4*x0",
                             "x0*x2 + x1*x3 + x2*x4 + x3*x0 + x4*x1"});
  auto gb = buchberger(F, rt, gens);
  auto hd = hilbert_data(gb);
  // Complete intersection: numerator (1-T^2)^3.
  REQUIRE(hd.numerator == std::vector<long long>({1, 0, -3, 0, 3, 0, -1}));
  auto res = resolve(F, rt, gens, hd.numerator);
  REQUIRE(res.complete);
  auto t = betti_of(res);
  CHECK(t.at(1, 2) == 3);
  CHECK(t.at(2, 3) == 0);
  CHECK(t.at(2, 4) == 3);
  CHECK(t.at(3, 6) == 1);
  CHECK(t.length() == 3);

  auto viaK = betti_via_koszul(F, gb);
  CHECK(viaK == t);
}

TEST_CASE("genus 6 general canonical curve: resolution, Koszul route, strand blocks") {
  Ring rt = Ring::standard(6);
  auto gens = genus6_canonical(rt, 61);
  auto gb = buchberger(F, rt, gens);
  auto hd = hilbert_data(gb);
  REQUIRE(hd.dim == 1);
  REQUIRE(hd.degree == 10);
  REQUIRE(hilbert_function(hd.numerator, 6, 2) == 15);

  auto res = resolve(F, rt, gens, hd.numerator);
  REQUIRE(res.complete);
  auto t = betti_of(res);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 6);
  CHECK(t.at(2, 3) == 5);
  CHECK(t.at(2, 4) == 5);
  CHECK(t.at(3, 5) == 6);
  CHECK(t.at(4, 7) == 1);
  CHECK(t.at(3, 4) == 0);
  CHECK(t.at(1, 3) == 0);
  CHECK(composes_to_zero(F, res));
  CHECK(euler_consistent(t, hd.numerator));

  CHECK(betti_via_koszul(F, gb) == t);

  // Linear strand block of d_2 and its dual partner in d_3.
  auto a2 = degree_block(res, 2, 2, 3);
  CHECK(a2.rows() == 6);
  CHECK(a2.cols() == 5);
  for (const auto& row : a2.entries)
    for (const auto& e : row)
      if (!e.is_zero()) CHECK(e.degree() == 1);
  auto b3 = degree_block(res, 3, 4, 5);
  CHECK(b3.rows() == 5);
  CHECK(b3.cols() == 6);
  // Degree-0 entries between same-degree generators vanish by minimality.
  auto zero_block = degree_block(res, 2, 3, 3);
  for (const auto& row : zero_block.entries)
    for (const auto& e : row) CHECK(e.is_zero());

  // The strand computed directly matches the strand blocks of the full
  // resolution, entry degrees included.
  auto st = linear_strand(F, rt, gens);
  CHECK(st.row() == std::vector<long long>{6, 5});
  CHECK(strand_composes_to_zero(rt, st));
  REQUIRE(st.maps.size() == 2);
  for (const auto& row : st.maps[1].entries)
    for (const auto& e : row)
      if (!e.is_zero()) CHECK(e.degree() == 1);
}

TEST_CASE("partial resolution honours max_steps") {
  Ring rt = Ring::standard(6);
  auto gens = genus6_canonical(rt, 61);
  std::vector<long long> num;
  ResolveOptions opt;
  opt.max_steps = 2;
  auto res = resolve_ideal(rt, gens, &num, opt);
  CHECK(res.length() == 2);
  CHECK_FALSE(res.complete);
}

TEST_CASE("koszul route rejects non-canonical input") {
  // The rational normal quartic is the canonical image of a hyperelliptic
  // genus-5 curve; its quadrics do not form a canonical ideal.
  Ring rt = Ring::standard(5);
  std::vector<Poly<Fp>> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto xi = [&](int k) { return poly_var<Fp>(F, k); };
      gens.push_back(poly_sub(F, rt, poly_mul(F, rt, xi(i), xi(j + 1)),
                              poly_mul(F, rt, xi(i + 1), xi(j))));
    }
  auto gb = buchberger(F, rt, gens);
  CHECK_THROWS_AS(betti_via_koszul(F, gb), std::domain_error);
}

TEST_CASE("euler consistency detects a perturbed table") {
  Ring rt = Ring::standard(4);
  auto gens = parse_all(rt, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  std::vector<long long> num;
  auto res = resolve_ideal(rt, gens, &num);
  auto t = betti_of(res);
  REQUIRE(euler_consistent(t, num));
  t.steps[2][3] += 1;
  CHECK_FALSE(euler_consistent(t, num));
}
