#include <doctest.h>

#include "gonalis/groebner.hpp"
#include "gonalis/zerodim.hpp"

using namespace gonalis;

namespace {

Fp F10007() { return Fp(10007); }

std::vector<Poly<Fp>> parse_all(const Fp& F, const Ring& R,
                                const std::vector<std::string>& ss) {
  std::vector<Poly<Fp>> out;
  for (const auto& s : ss) out.push_back(parse_poly(F, R, s));
  return out;
}

}  // namespace

TEST_CASE("buchberger on (x^2+y^2, x*y) adds y^3") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y"});
  auto gb = buchberger(F, R, parse_all(F, R, {"x^2 + y^2", "x*y"}));
  REQUIRE(gb.polys.size() == 3);
  // sorted ascending by lead in grevlex (degree first): x*y, x^2, then y^3
  CHECK(poly_eq(F, gb.polys[0], parse_poly(F, R, "x*y")));
  CHECK(poly_eq(F, gb.polys[1], parse_poly(F, R, "x^2 + y^2")));
  CHECK(poly_eq(F, gb.polys[2], parse_poly(F, R, "y^3")));

  auto hd = hilbert_data(gb);
  CHECK(hd.dim == -1);     // projectively empty
  CHECK(hd.degree == 4);   // quotient vector space dimension
}

TEST_CASE("twisted cubic: GB, hilbert data, normal forms") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y", "z", "w"});
  auto gens = parse_all(F, R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  auto gb = buchberger(F, R, gens);
  CHECK(gb.polys.size() == 3);  // the quadrics are already a basis

  auto hd = hilbert_data(gb);
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 3);
  CHECK(hilbert_function(hd.numerator, 4, 1) == 4);
  CHECK(hilbert_function(hd.numerator, 4, 2) == 7);
  CHECK(hilbert_function(hd.numerator, 4, 3) == 10);

  // y^2 reduces to x*z
  auto nf = normal_form(F, gb, parse_poly(F, R, "y^2"));
  CHECK(poly_eq(F, nf, parse_poly(F, R, "x*z")));
  CHECK(in_ideal(F, gb, parse_poly(F, R, "x*z*w - y^2*w")));
}

TEST_CASE("unit ideal reports an empty scheme") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y"});
  auto gb = buchberger(F, R, parse_all(F, R, {"x", "x + 1"}));
  auto hd = hilbert_data(gb);
  CHECK(hd.dim == -1);
  CHECK(hd.degree == 0);
}

TEST_CASE("saturation (x*y, x*z) : x^inf = (y, z)") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y", "z"});
  auto sat = saturate_by(F, R, parse_all(F, R, {"x*y", "x*z"}), parse_poly(F, R, "x"));
  auto gb = buchberger(F, R, sat);
  REQUIRE(gb.polys.size() == 2);
  CHECK(poly_eq(F, gb.polys[0], parse_poly(F, R, "z")));
  CHECK(poly_eq(F, gb.polys[1], parse_poly(F, R, "y")));
}

TEST_CASE("elimination: parametric twisted curve gives x^3 - y^2") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"t", "x", "y"}, /*elim=*/1);
  auto gb = buchberger(F, R, parse_all(F, R, {"x - t^2", "y - t^3"}));
  auto elim = eliminate_block(gb, 1);
  REQUIRE(elim.size() == 1);
  Ring Rxy = Ring::with_vars({"x", "y"});
  CHECK(poly_eq(F, poly_monic(F, elim[0]), parse_poly(F, Rxy, "x^3 - y^2")));
}

TEST_CASE("ideal intersection (x) cap (y) = (x*y)") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y"});
  auto meet = intersect_ideals(F, R, parse_all(F, R, {"x"}), parse_all(F, R, {"y"}));
  auto gb = buchberger(F, R, meet);
  REQUIRE(gb.polys.size() == 1);
  CHECK(poly_eq(F, gb.polys[0], parse_poly(F, R, "x*y")));
}

TEST_CASE("degree-truncated basis keeps low-degree part complete") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y", "z", "w"});
  GBOptions opts;
  opts.degree_cap = 2;
  auto gb = buchberger(F, R, parse_all(F, R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}), opts);
  CHECK(gb.truncation == 2);
  CHECK(gb.polys.size() == 3);
}

TEST_CASE("reduction budget raises DegreeBudgetExceeded") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y"});
  GBOptions opts;
  opts.max_reductions = 1;
  CHECK_THROWS_AS(buchberger(F, R, parse_all(F, R, {"x^2 + y^2", "x*y"}), opts),
                  DegreeBudgetExceeded);
}

TEST_CASE("zero-dimensional solve: two rational points on a line pair") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y"});
  auto gb = buchberger(F, R, parse_all(F, R, {"x^2 - 1", "y - x"}));
  Rng rng(11, "zerodim");
  auto sol = solve_zerodim_affine(F, gb, rng);
  REQUIRE(sol.has_value());
  CHECK(sol->quotient_dim == 2);
  REQUIRE(sol->points.size() == 2);
  for (const auto& p : sol->points) CHECK(p.coords[0] == p.coords[1]);
}

TEST_CASE("zero-dimensional solve distinguishes residues from non-residues") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x"});
  // 10007 = 7 mod 8, so 2 is a quadratic residue.
  REQUIRE(F.is_square(2));
  Rng rng(5, "zerodim");
  auto gb = buchberger(F, R, parse_all(F, R, {"x^2 - 2"}));
  auto sol = solve_zerodim_affine(F, gb, rng);
  REQUIRE(sol.has_value());
  CHECK(sol->points.size() == 2);
  CHECK(sol->quotient_dim == 2);

  Fp::elem nonsq = 0;
  for (Fp::elem c = 2; c < 100; ++c)
    if (!F.is_square(c)) {
      nonsq = c;
      break;
    }
  Ring R1 = Ring::with_vars({"x"});
  auto gb2 = buchberger(
      F, R1, std::vector<Poly<Fp>>{parse_poly(F, R1, "x^2 - " + std::to_string(nonsq))});
  auto sol2 = solve_zerodim_affine(F, gb2, rng);
  REQUIRE(sol2.has_value());
  CHECK(sol2->points.empty());
  CHECK(sol2->quotient_dim == 2);
}

TEST_CASE("non-reduced point found with multiplicity") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x"});
  auto gb = buchberger(F, R, std::vector<Poly<Fp>>{parse_poly(F, R, "x^2")});
  Rng rng(3, "zerodim");
  auto sol = solve_zerodim_affine(F, gb, rng);
  REQUIRE(sol.has_value());
  CHECK(sol->quotient_dim == 2);
  REQUIRE(sol->points.size() == 1);
  CHECK(sol->points[0].coords[0] == 0);
}

TEST_CASE("projective rational points across charts") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x", "y", "z"});
  // Two points (1:0:1), (1:0:-1) plus the chart-boundary point (0:1:0) for x^2 = z^2, x*y = 0?
  // Use V(x^2 - z^2, y): exactly two points.
  auto gens = parse_all(F, R, {"x^2 - z^2", "y"});
  Rng rng(17, "proj");
  auto pts = rational_points_projective(F, R, gens, rng);
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(p.coords[0] == 1);
    CHECK(p.coords[1] == 0);
    CHECK((p.coords[2] == 1 || p.coords[2] == 10006));
  }
}

TEST_CASE("matrix minpoly via Krylov") {
  Fp F = F10007();
  Ring R = Ring::with_vars({"x"});
  auto gb = buchberger(F, R, std::vector<Poly<Fp>>{parse_poly(F, R, "x^2 - 1")});
  auto basis = standard_monomials(gb);
  REQUIRE(basis.has_value());
  auto M = multiplication_matrix(F, gb, *basis, parse_poly(F, R, "x"));
  Rng rng(23, "minpoly");
  auto mp = matrix_minpoly(F, M, rng);
  REQUIRE(up_deg(mp) == 2);
  CHECK(mp[0] == F.from_int(-1));
  CHECK(mp[1] == 0);
  CHECK(mp[2] == 1);
}
