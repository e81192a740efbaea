#include <doctest.h>

#include "gonalis/fp.hpp"
#include "gonalis/invariants.hpp"
#include "gonalis/resolution.hpp"
#include "gonalis/rng.hpp"

#include <stdexcept>
#include <vector>

using namespace gonalis;

namespace {

const Fp F(10007);

Poly<Fp> random_linear(const Ring& rt, Rng& rng) {
  Poly<Fp> p;
  for (int v = 0; v < rt.n; ++v)
    p = poly_add(F, rt, p, poly_scale(F, poly_var<Fp>(F, v), F.random_nonzero(rng)));
  return p;
}

// Ideal of 2x2 minors of a random 2x(f+1) matrix of linear forms in f+2
// variables.  Random entries make the matrix 1-generic with overwhelming
// probability, so the minors cut out a rational normal scroll of
// codimension f and the resolution is Eagon-Northcott.
std::vector<Poly<Fp>> random_scroll_minors(const Ring& rt, int f, Rng& rng) {
  std::vector<std::vector<Poly<Fp>>> m(2, std::vector<Poly<Fp>>(f + 1));
  for (auto& row : m)
    for (auto& e : row) e = random_linear(rt, rng);
  std::vector<Poly<Fp>> gens;
  for (int a = 0; a < f + 1; ++a)
    for (int b = a + 1; b < f + 1; ++b)
      gens.push_back(poly_sub(F, rt, poly_mul(F, rt, m[0][a], m[1][b]),
                              poly_mul(F, rt, m[0][b], m[1][a])));
  return gens;
}

}  // namespace

TEST_CASE("Brill-Noether numbers") {
  CHECK(brill_noether_rho(6, 1, 4) == 0);
  CHECK(brill_noether_rho(7, 1, 5) == 1);
  CHECK(brill_noether_rho(7, 1, 4) == -1);
  CHECK(brill_noether_rho(10, 1, 6) == 0);

  // rho(g,1,d) >= 0 exactly when g <= 2d-2.
  for (long long g = 0; g <= 30; ++g)
    for (long long d = 1; d <= 20; ++d)
      CHECK((brill_noether_rho(g, 1, d) >= 0) == (g <= 2 * d - 2));
}

TEST_CASE("gonality and Clifford arithmetic") {
  CHECK(gonality_upper_bound(6) == 4);
  CHECK(gonality_upper_bound(2) == 2);
  CHECK(gonality_upper_bound(7) == 5);
  CHECK(gonality_upper_bound(10) == 6);

  CHECK(clifford_window(2) == std::pair<long long, long long>{4, 5});
  CHECK(clifford_window(0) == std::pair<long long, long long>{2, 3});

  CHECK(clifford_of_divisor(4, 2) == 2);
  // A pencil of degree d has Clifford index d-2.
  for (long long d = 2; d <= 9; ++d) CHECK(clifford_of_divisor(d, 2) == d - 2);
}

TEST_CASE("minimal pencil counts in even genus") {
  CHECK(w1d_count(4, 3) == 2);
  CHECK(w1d_count(6, 4) == 5);
  CHECK(w1d_count(8, 5) == 14);
  CHECK(w1d_count(10, 6) == 42);

  CHECK_THROWS_AS(w1d_count(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(w1d_count(6, 3), std::invalid_argument);

  // The odd-genus closed formula, exposed for reference only.
  CHECK(w1d_genus_formula(7) == 43);
  CHECK_THROWS_AS(w1d_genus_formula(8), std::invalid_argument);
}

TEST_CASE("Eagon-Northcott Betti rows of scrolls") {
  CHECK(scroll_betti_row(4) == std::vector<long long>{10, 20, 15, 4});
  CHECK(scroll_betti_row(6) == std::vector<long long>{21, 70, 105, 84, 35, 6});
  CHECK(scroll_betti_row(8) ==
        std::vector<long long>{36, 168, 378, 504, 420, 216, 63, 8});

  // The row must reproduce the Hilbert numerator of a codimension-f
  // arithmetically Cohen-Macaulay variety of degree f+1 with h-vector
  // (1, f): 1 + sum_i (-1)^i beta_i t^(i+1) = (1-t)^f (1 + f t).
  for (int f = 1; f <= 10; ++f) {
    auto row = scroll_betti_row(f);
    std::vector<long long> lhs(static_cast<size_t>(f) + 2, 0);
    lhs[0] = 1;
    for (int i = 1; i <= f; ++i)
      lhs[static_cast<size_t>(i) + 1] = (i % 2 == 0 ? 1 : -1) * row[i - 1];
    std::vector<long long> rhs{1};
    for (int k = 0; k < f; ++k) {  // multiply by (1-t)
      std::vector<long long> next(rhs.size() + 1, 0);
      for (size_t i = 0; i < rhs.size(); ++i) {
        next[i] += rhs[i];
        next[i + 1] -= rhs[i];
      }
      rhs = next;
    }
    std::vector<long long> withft(rhs.size() + 1, 0);  // multiply by (1+ft)
    for (size_t i = 0; i < rhs.size(); ++i) {
      withft[i] += rhs[i];
      withft[i + 1] += f * rhs[i];
    }
    withft.resize(lhs.size(), 0);
    CHECK(lhs == withft);
  }
}

TEST_CASE("scroll Betti rows match actual resolutions of random 1-generic matrices") {
  Rng rng(20260814, "scrolls");
  for (int f = 2; f <= 6; ++f) {
    Ring rt = Ring::standard(f + 2);
    auto gens = random_scroll_minors(rt, f, rng);
    auto gb = buchberger(F, rt, gens);
    auto hd = hilbert_data(gb);
    REQUIRE(hd.dim == 1);
    REQUIRE(hd.degree == f + 1);
    auto res = resolve(F, rt, gens, hd.numerator);
    REQUIRE(res.complete);
    auto row = scroll_betti_row(f);
    BettiTable expect;
    expect.steps.resize(static_cast<size_t>(f) + 1);
    expect.steps[0][0] = 1;
    for (int i = 1; i <= f; ++i) expect.steps[static_cast<size_t>(i)][i + 1] = row[i - 1];
    CHECK(betti_of(res) == expect);
  }
}

TEST_CASE("gonality bounds from plane models") {
  auto b = plane_gonality_bounds(6, 2, 3);  // three-nodal sextic
  CHECK(b.lower == 4);
  CHECK(b.upper == 4);
  CHECK(b.certificate == "OS-exact");

  b = plane_gonality_bounds(6, 2, 5);  // five nodes: Q(3) = 0, still exact
  CHECK(b.lower == 4);
  CHECK(b.upper == 4);
  CHECK(b.certificate == "OS-exact");

  b = plane_gonality_bounds(6, 2, 6);  // Q(3) = 1: only the defect bound
  CHECK(b.lower == 3);
  CHECK(b.upper == 4);
  CHECK(b.certificate == "Sakai");

  b = plane_gonality_bounds(9, 5, 18);  // d/nu < 2: no lower bound rule
  CHECK(b.lower == 2);
  CHECK(b.upper == 4);
  CHECK(b.certificate == "none");

  for (long long d = 3; d <= 12; ++d)
    for (long long nu = 1; nu < d; ++nu)
      for (long long delta = nu * (nu - 1) / 2; delta <= nu * nu; ++delta) {
        auto g = plane_gonality_bounds(d, nu, delta);
        CHECK(g.upper == d - nu);
        CHECK(g.lower <= g.upper);
        CHECK(!g.certificate.empty());
      }
}
