#include <doctest.h>

#include "gonalis/curvein.hpp"
#include "gonalis/fp.hpp"
#include "gonalis/invariants.hpp"
#include "gonalis/resolution.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace gonalis;

namespace {

const Fp F(10007);

// Random plane curve of degree d with ordinary nodes at the coordinate
// points listed in `nodes`, built by dropping every monomial whose presence
// would break 2-fold vanishing there and randomizing the rest.
PlaneModel<Fp> nodal_at_coords(int d, const std::vector<int>& nodes, uint64_t seed) {
  Ring rt = Ring::with_vars({"x", "y", "z"});
  Rng rng(seed, "nodal");
  Poly<Fp> f;
  for (const Mono& m : monomials_of_degree(rt, d)) {
    bool skip = false;
    for (int c : nodes)
      if (m.deg - m.e[c] <= 1) skip = true;
    if (skip) continue;
    f = poly_add(F, rt, f, poly_term<Fp>(F, m, F.random(rng)));
  }
  PlaneModel<Fp> P;
  P.ring = rt;
  P.F = f;
  P.degree = d;
  for (int c : nodes) {
    PlaneSingularity<Fp> s;
    s.point = {F.zero(), F.zero(), F.zero()};
    s.point[static_cast<size_t>(c)] = F.one();
    P.sings.push_back(s);
  }
  return P;
}

PlaneModel<Fp> plane_from_lines(const std::string& text) {
  return make_plane_model(F, parse_curve_input(text));
}

// Expresses a plane form of adjoint degree in the model's adjoint basis and
// returns the matching linear form in the canonical coordinates.
Poly<Fp> in_adjoint_coords(const CanonicalModel<Fp>& M, const Poly<Fp>& target) {
  const int g = M.genus;
  DegreeBasis cb(M.back_ring, target.degree());
  Mat<Fp> aug(static_cast<int>(cb.size()), g + 1, F);
  for (int j = 0; j < g; ++j) {
    auto v = poly_to_dense(F, cb, M.back_map[static_cast<size_t>(j)]);
    for (int i = 0; i < aug.rows(); ++i) aug.at(i, j) = v[static_cast<size_t>(i)];
  }
  auto tv = poly_to_dense(F, cb, target);
  for (int i = 0; i < aug.rows(); ++i) aug.at(i, g) = tv[static_cast<size_t>(i)];
  auto ker = nullspace(F, aug);
  REQUIRE(ker.cols() == 1);
  REQUIRE_FALSE(F.is_zero(ker.at(g, 0)));
  Poly<Fp> out;
  auto s = F.neg(F.inv(ker.at(g, 0)));
  for (int i = 0; i < g; ++i)
    out = poly_add(F, M.ring, out, poly_scale(F, poly_var<Fp>(F, i), F.mul(s, ker.at(i, 0))));
  return out;
}

}  // namespace

TEST_CASE("curve input parsing") {
  auto in = parse_curve_input(
      "# plane sextic with two marked nodes\n"
      "field GF 10007\n"
      "plane 6\n"
      "F = x^4*y*z + x*y^5 - z^6\n"
      "sing (1:0:0) mult 2\n"
      "sing (0:-1:1) mult 2\n");
  CHECK_FALSE(in.field.rational);
  CHECK(in.field.p == 10007);
  CHECK(in.kind == InputKind::plane);
  CHECK(in.plane_degree == 6);
  CHECK(in.plane_poly == "x^4*y*z + x*y^5 - z^6");
  REQUIRE(in.sings.size() == 2);
  CHECK(in.sings[0].coords[0] == "1");
  CHECK(in.sings[1].coords[1] == "-1");
  CHECK(in.sings[1].mult == 2);

  auto can = parse_curve_input(
      "field QQ\n"
      "canonical 4\n"
      "ideal:\n"
      "x0*x3 - x1*x2\n"
      "x1^3 + x2^3 + x0^2*x3 - x0*x1*x2\n");
  CHECK(can.field.rational);
  CHECK(can.kind == InputKind::canonical);
  CHECK(can.genus == 4);
  CHECK(can.ideal_gens.size() == 2);

  auto hyp = parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^8 - 1\n");
  CHECK(hyp.kind == InputKind::hyperelliptic);
  CHECK(hyp.hyperell_rhs == "x^8 - 1");

  // Malformed inputs carry line-numbered diagnostics.
  CHECK_THROWS_AS(parse_curve_input("plane 6\nF = x^6\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field GF 7\nbogus 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field GF 7\nplane 6\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field GF 7\nplane 6\nF = x^6\nsing (1:0) mult 2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field GF 7\nplane 6\nF = x^6\nsing (1:0:0) mult 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field GF 1\nplane 6\nF = x^6\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve_input("field QQ\ncanonical 4\n"), std::invalid_argument);
}

TEST_CASE("delta and genus of plane models") {
  auto quartic = plane_from_lines(
      "field GF 10007\n"
      "plane 4\n"
      "F = x^4 + y^4 + z^4\n");
  CHECK(delta_genus(F, quartic) == std::pair<long long, long long>{0, 3});

  auto sextic = plane_from_lines(
      "field GF 10007\n"
      "plane 6\n"
      "F = x^6 + y^6 + z^6 + x*y*z^4\n");
  CHECK(delta_genus(F, sextic) == std::pair<long long, long long>{0, 10});

  auto nodal = nodal_at_coords(6, {0, 1, 2}, 77);
  CHECK(delta_genus(F, nodal) == std::pair<long long, long long>{3, 7});
}

TEST_CASE("plane model validation rejects bad singularity data") {
  // A cusp is not an ordinary double point.
  CHECK_THROWS_AS(plane_from_lines("field GF 10007\n"
                                   "plane 3\n"
                                   "F = y^2*z - x^3\n"
                                   "sing (0:0:1) mult 2\n"),
                  NonOrdinaryInput);
  // Smooth point claimed singular.
  CHECK_THROWS_AS(plane_from_lines("field GF 10007\n"
                                   "plane 4\n"
                                   "F = x^4 + y^4 + x*z^3\n"
                                   "sing (0:0:1) mult 2\n"),
                  NonOrdinaryInput);
  // Ordinary triple point with the multiplicity understated.
  CHECK_THROWS_AS(plane_from_lines("field GF 10007\n"
                                   "plane 6\n"
                                   "F = x^3*z^3 + y^3*z^3 + x^5*y + x*y^5\n"
                                   "sing (0:0:1) mult 2\n"),
                  NonOrdinaryInput);
  // The same point listed twice, in different scalings.
  CHECK_THROWS_AS(plane_from_lines("field GF 10007\n"
                                   "plane 6\n"
                                   "F = x^4*y*z + x*y^5 - z^6 + y^2*z^4\n"
                                   "sing (1:0:0) mult 2\n"
                                   "sing (2:0:0) mult 2\n"),
                  NonOrdinaryInput);
  // F not homogeneous of the stated degree.
  CHECK_THROWS_AS(plane_from_lines("field GF 10007\n"
                                   "plane 4\n"
                                   "F = x^4 + y^3\n"),
                  NonOrdinaryInput);
}

TEST_CASE("smooth plane quartic: principal canonical ideal and a degree-3 pencil") {
  auto P = plane_from_lines(
      "field GF 10007\n"
      "plane 4\n"
      "F = x^4 + y^4 + x*z^3\n");
  auto M = canonical_ideal(F, P);
  CHECK(M.genus == 3);
  REQUIRE(M.ideal.size() == 1);
  CHECK(M.ideal[0].degree() == 4);
  REQUIRE(M.back_map.size() == 3);
  for (const auto& a : M.back_map) CHECK(a.degree() == 1);

  CHECK(classify_canonical_image(F, M.ring, M.ideal, M.genus) ==
        CanonicalClass::nonhyperelliptic);

  // (0:0:1) lies on the curve; projecting from it has degree d - 1 = 3.
  auto num = in_adjoint_coords(M, parse_poly(F, P.ring, "x"));
  auto den = in_adjoint_coords(M, parse_poly(F, P.ring, "y"));
  CHECK(map_degree(F, M.ring, M.ideal, num, den, 9) == 3);
  auto bounds = plane_gonality_bounds(4, 1, 0);
  CHECK(bounds.lower <= 3);
  CHECK(3 <= bounds.upper);
}

TEST_CASE("two-nodal quintic: (2,3) complete intersection and a degree-3 pencil") {
  auto P = nodal_at_coords(5, {1, 2}, 41);
  CHECK(delta_genus(F, P) == std::pair<long long, long long>{2, 4});

  auto M = canonical_ideal(F, P);
  CHECK(M.genus == 4);
  REQUIRE(M.ideal.size() == 2);

  auto gb = buchberger(F, M.ring, M.ideal);
  auto hd = hilbert_data(gb);
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 2 * M.genus - 2);

  auto res = resolve(F, M.ring, M.ideal, hd.numerator);
  REQUIRE(res.complete);
  auto t = betti_of(res);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 1);
  CHECK(t.at(1, 3) == 1);
  CHECK(t.at(2, 5) == 1);

  // Projection from the node at (0:1:0): the pencil x/z lifted by the line x
  // gives two adjoint conics; the map has degree d - 2 = 3.
  auto num = in_adjoint_coords(M, parse_poly(F, P.ring, "x^2"));
  auto den = in_adjoint_coords(M, parse_poly(F, P.ring, "x*z"));
  CHECK(map_degree(F, M.ring, M.ideal, num, den, 5) == 3);
  auto bounds = plane_gonality_bounds(5, 2, 2);
  CHECK(bounds.lower <= 3);
  CHECK(3 <= bounds.upper);
}

TEST_CASE("three-nodal sextic: full canonical model, Betti table, gonal pencil") {
  auto P = nodal_at_coords(6, {0, 1, 2}, 77);
  CHECK(delta_genus(F, P) == std::pair<long long, long long>{3, 7});

  auto M = canonical_ideal(F, P);
  CHECK(M.genus == 7);
  REQUIRE(M.back_map.size() == 7);
  // Petri: the ideal is generated by binomial(g-2, 2) = 10 quadrics.
  REQUIRE(M.ideal.size() == 10);
  for (const auto& p : M.ideal) CHECK(p.degree() == 2);

  auto gb = buchberger(F, M.ring, M.ideal);
  auto hd = hilbert_data(gb);
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 12);

  auto res = resolve(F, M.ring, M.ideal, hd.numerator);
  REQUIRE(res.complete);
  auto t = betti_of(res);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 10);
  CHECK(t.at(2, 3) == 16);
  CHECK(t.at(3, 4) == 9);
  CHECK(t.at(2, 4) == 9);
  CHECK(t.at(3, 5) == 16);
  CHECK(t.at(4, 6) == 10);
  CHECK(t.at(5, 8) == 1);
  CHECK(t.at(1, 3) == 0);
  CHECK(euler_consistent(t, hd.numerator));

  CHECK(betti_via_koszul(F, gb) == t);
  CHECK(linear_strand(F, M.ring, M.ideal).row() == std::vector<long long>{10, 16, 9});

  // Projection from the node at (1:0:0): the pencil y/z lifted by the conic
  // yz gives two adjoint cubics; the map has degree d - 2 = 4.
  auto num = in_adjoint_coords(M, parse_poly(F, P.ring, "y^2*z"));
  auto den = in_adjoint_coords(M, parse_poly(F, P.ring, "y*z^2"));
  CHECK(map_degree(F, M.ring, M.ideal, num, den, 5) == 4);
  auto bounds = plane_gonality_bounds(6, 2, 3);
  CHECK(bounds.lower == 4);
  CHECK(bounds.upper == 4);
}

TEST_CASE("canonical ideal refuses genus below 3 and hyperelliptic images") {
  // A smooth cubic has genus 1.
  CHECK_THROWS_AS(canonical_ideal(F, plane_from_lines("field GF 10007\n"
                                                      "plane 3\n"
                                                      "F = x^3 + y^3 + z^3 + x*y*z\n")),
                  GenusTooSmall);
}

TEST_CASE("classification of canonical images") {
  // Conic in P^2: canonical image of a hyperelliptic genus-3 curve.
  {
    Ring rt = Ring::standard(3);
    auto conic = rnc_ideal(F, rt);
    REQUIRE(conic.size() == 1);
    CHECK(classify_canonical_image(F, rt, conic, 3) == CanonicalClass::hyperelliptic);
  }
  // Twisted cubic in P^3: hyperelliptic genus 4.
  {
    Ring rt = Ring::standard(4);
    CHECK(classify_canonical_image(F, rt, rnc_ideal(F, rt), 4) ==
          CanonicalClass::hyperelliptic);
  }
  // A quadric surface in P^3 is not a canonical image for genus 4.
  {
    Ring rt = Ring::standard(4);
    std::vector<Poly<Fp>> quad{parse_poly(F, rt, "x0*x3 - x1*x2")};
    CHECK_THROWS_AS(classify_canonical_image(F, rt, quad, 4), UnclassifiableImage);
  }
  CHECK(classify_canonical_image(F, Ring::standard(1), {}, 0) == CanonicalClass::rational);
  CHECK_THROWS_AS(classify_canonical_image(F, Ring::standard(1), {}, 1), UnclassifiableImage);
}

TEST_CASE("canonical input kind round-trips through parsing") {
  auto in = parse_curve_input(
      "field GF 10007\n"
      "canonical 4\n"
      "ideal:\n"
      "x0*x3 - x1*x2\n"
      "x1^3 + x2^3 + x0^2*x3 - x0*x1*x2\n");
  auto M = make_canonical_model(F, in);
  CHECK(M.genus == 4);
  REQUIRE(M.ideal.size() == 2);
  CHECK(M.ring.n == 4);
  auto gb = buchberger(F, M.ring, M.ideal);
  auto hd = hilbert_data(gb);
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 6);
  CHECK(classify_canonical_image(F, M.ring, M.ideal, M.genus) ==
        CanonicalClass::nonhyperelliptic);
}

TEST_CASE("map_degree basics on the twisted cubic") {
  Ring rt = Ring::standard(4);
  auto IC = rnc_ideal(F, rt);
  auto x0 = poly_var<Fp>(F, 0);
  auto x1 = poly_var<Fp>(F, 1);
  // (x0 : x1) restricts to the degree-1 parameter of the twisted cubic.
  CHECK(map_degree(F, rt, IC, x0, x1) == 1);
  // Proportional forms give a constant map.
  CHECK_THROWS_AS(map_degree(F, rt, IC, x0, poly_scale(F, x0, F.from_int(2))), ConstantMap);
  // Forms inside the ideal are rejected up front.
  CHECK_THROWS_AS(map_degree(F, rt, IC, IC[0], IC[1]), ConstantMap);
  // Mismatched degrees are a caller error.
  CHECK_THROWS_AS(map_degree(F, rt, IC, x0, poly_mul(F, rt, x0, x1)), std::invalid_argument);
}

TEST_CASE("hyperelliptic input kind") {
  auto H = make_hyperelliptic_model(
      F, parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^8 - 1\n"));
  CHECK(H.genus == 3);
  auto H7 = make_hyperelliptic_model(
      F, parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^7 - x + 3\n"));
  CHECK(H7.genus == 3);
  auto H5 = make_hyperelliptic_model(
      F, parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^5 + x + 1\n"));
  CHECK(H5.genus == 2);

  CHECK_THROWS_AS(make_hyperelliptic_model(
                      F, parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^4 - 1\n")),
                  GenusTooSmall);
  // x^6 - 2x^3 + 1 = (x^3 - 1)^2 has repeated roots.
  CHECK_THROWS_AS(
      make_hyperelliptic_model(
          F, parse_curve_input("field GF 10007\nhyperelliptic f(x) = x^6 - 2*x^3 + 1\n")),
      NonOrdinaryInput);
}
