#include <doctest.h>

#include "gonalis/ext.hpp"
#include "gonalis/fp.hpp"
#include "gonalis/matrix.hpp"
#include "gonalis/monomial.hpp"
#include "gonalis/poly.hpp"
#include "gonalis/rational.hpp"
#include "gonalis/rng.hpp"
#include "gonalis/upoly.hpp"

using namespace gonalis;

TEST_CASE("prime field arithmetic over GF(10007)") {
  Fp F(10007);
  CHECK(F.mul(3, 5) == 15);
  CHECK(F.add(10000, 10) == 3);
  CHECK(F.sub(3, 10) == 10000);
  // 3 * 3336 = 10008 = 1 mod 10007
  CHECK(F.inv(3) == 3336);
  CHECK(F.mul(F.inv(3), 3) == 1);
  CHECK(F.pow(5, 10006) == 1);  // Fermat
  CHECK(F.from_int(-1) == 10006);

  // 10007 = 3 mod 4: fast square root path.
  auto r = F.sqrt(4);
  CHECK((r == 2 || r == 10005));
  CHECK(F.mul(r, r) == 4);
  CHECK(F.is_square(F.mul(123, 123)));
}

TEST_CASE("Tonelli-Shanks square root for p = 1 mod 4") {
  Fp F(13);
  auto r = F.sqrt(3);
  CHECK((r == 4 || r == 9));
  CHECK(F.mul(r, r) == 3);
  CHECK_FALSE(F.is_square(2));  // 2 is a non-residue mod 13
  CHECK_THROWS_AS(F.sqrt(2), std::domain_error);
}

TEST_CASE("rationals are exact and canonical") {
  RatField Q;
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK((a - b).to_string() == "1/6");
  CHECK((Rat(-4, 8)).to_string() == "-1/2");
  CHECK(Rat::from_string("22/7") * Rat(7) == Rat(22));
  CHECK_THROWS_AS(Q.inv(Rat(0)), std::domain_error);
  CHECK(Q.inv(Rat(2, 3)) == Rat(3, 2));
}

TEST_CASE("quadratic extension GF(7)[u]/(u^2+1)") {
  Fp F(7);
  Ext<Fp> E(F, {1, 0});  // u^2 + 1; irreducible since 7 = 3 mod 4
  auto u = E.generator();
  auto u2 = E.mul(u, u);
  CHECK(E.eq(u2, E.from_int(-1)));
  // (u+1)^2 = 2u
  auto s = E.add(u, E.one());
  auto s2 = E.mul(s, s);
  auto two_u = E.add(u, u);
  CHECK(E.eq(s2, two_u));
  // u * (-u) = 1
  CHECK(E.eq(E.mul(u, E.inv(u)), E.one()));
  auto inv_s = E.inv(s);
  CHECK(E.eq(E.mul(s, inv_s), E.one()));
}

TEST_CASE("reducible modulus raises a zero-divisor witness") {
  Fp F(7);
  Ext<Fp> E(F, {6, 0});  // u^2 - 1 = (u-1)(u+1)
  auto a = E.sub(E.generator(), E.one());
  CHECK_THROWS_AS(E.inv(a), ZeroDivisor);
}

TEST_CASE("shoup axpy agrees with schoolbook modular arithmetic") {
  Fp F(10007);
  Rng rng(42, "axpy");
  std::vector<std::uint32_t> x(257), y(257), yref;
  for (auto& v : x) v = F.random(rng);
  for (auto& v : y) v = F.random(rng);
  yref = y;
  std::uint32_t c = F.random_nonzero(rng);
  fp_axpy(F.modulus(), c, x.data(), y.data(), static_cast<int>(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    CHECK(y[i] == F.add(yref[i], F.mul(c, x[i])));
  }
}

TEST_CASE("rank, nullspace, solve over GF(p)") {
  Fp F(10007);
  Mat<Fp> M(2, 2, F);
  M.at(0, 0) = 1;
  M.at(0, 1) = 2;
  M.at(1, 0) = 2;
  M.at(1, 1) = 4;
  CHECK(rank(F, M) == 1);
  auto ker = nullspace(F, M);
  CHECK(ker.cols() == 1);
  // kernel direction proportional to (-2, 1)
  CHECK(F.eq(F.mul(ker.at(0, 0), 1), F.mul(ker.at(1, 0), F.from_int(-2))));

  Mat<Fp> A(2, 2, F);
  A.at(0, 0) = 1;
  A.at(0, 1) = 1;
  A.at(1, 0) = 1;
  A.at(1, 1) = F.from_int(-1);
  auto x = solve(F, A, {F.from_int(3), F.from_int(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  // inconsistent system
  auto bad = solve(F, M, {F.one(), F.one()});
  CHECK_FALSE(bad.has_value());
}

TEST_CASE("matrix inverse over the rationals") {
  RatField Q;
  Mat<RatField> A(3, 3, Q);
  // A small well-conditioned integer matrix with det = 1.
  long long vals[3][3] = {{2, 1, 1}, {1, 1, 0}, {1, 0, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A.at(i, j) = Rat(vals[i][j]);
  auto inv = inverse(Q, A);
  REQUIRE(inv.has_value());
  auto P = matmul(Q, A, *inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(P.at(i, j) == Rat(i == j ? 1 : 0));
}

TEST_CASE("row space membership and quotient dimension") {
  Fp F(10007);
  RowSpace<Fp> rs(3, F);
  CHECK(rs.insert({1, 2, 3}));
  CHECK(rs.insert({0, 1, 1}));
  CHECK_FALSE(rs.insert({1, 3, 4}));  // sum of the first two
  CHECK(rs.dim() == 2);
  std::vector<Fp::elem> v{1, 0, 0};
  rs.reduce(v);
  bool nonzero = false;
  for (auto c : v) nonzero |= !F.is_zero(c);
  CHECK(nonzero);
}

TEST_CASE("grevlex monomial order and degree enumeration") {
  Ring R = Ring::standard(3);
  auto ms = monomials_of_degree(R, 2);
  REQUIRE(ms.size() == 6);
  // descending grevlex: x0^2, x0*x1, x1^2, x0*x2, x1*x2, x2^2
  CHECK(R.mono_string(ms[0]) == "x0^2");
  CHECK(R.mono_string(ms[1]) == "x0*x1");
  CHECK(R.mono_string(ms[2]) == "x1^2");
  CHECK(R.mono_string(ms[3]) == "x0*x2");
  CHECK(R.mono_string(ms[4]) == "x1*x2");
  CHECK(R.mono_string(ms[5]) == "x2^2");
  CHECK(poly_dim(3, 2) == 6);
  CHECK(binomial(8, 2) == 28);
}

TEST_CASE("elimination block order puts first-block monomials on top") {
  Ring R = Ring::with_vars({"t", "x", "y"}, /*elim=*/1);
  // t > x^5 under the block order
  CHECK(R.greater(Mono::var(0), Mono::var(1, 5)));
  CHECK(R.greater(Mono::var(1), Mono::var(2)));
}

TEST_CASE("polynomial arithmetic and parsing") {
  Fp F(10007);
  Ring R = Ring::with_vars({"x", "y", "z"});
  auto p = parse_poly(F, R, "(x + y)^2 - x^2 - 2*x*y");
  auto y2 = parse_poly(F, R, "y^2");
  CHECK(poly_eq(F, p, y2));

  auto q = parse_poly(F, R, "x^2*y - 3*z^3 + 7");
  CHECK(q.degree() == 3);
  auto dq = poly_derivative(F, R, q, 0);
  CHECK(poly_eq(F, dq, parse_poly(F, R, "2*x*y")));

  auto val = poly_eval(F, q, {F.from_int(2), F.from_int(3), F.from_int(1)});
  CHECK(val == F.from_int(2 * 2 * 3 - 3 + 7));

  // dense round trip in degree 3
  DegreeBasis B(R, 3);
  auto cubic = parse_poly(F, R, "x^3 + 5*x*y*z - z^3");
  auto dense = poly_to_dense(F, B, cubic);
  auto back = poly_from_dense(F, B, dense);
  CHECK(poly_eq(F, cubic, back));
}

TEST_CASE("rational coefficients parse in GF and QQ") {
  Fp F(10007);
  Ring R = Ring::with_vars({"x"});
  auto p = parse_poly(F, R, "1/2*x");
  CHECK(p.lead().c == F.div(1, 2));

  RatField Q;
  auto q = parse_poly(Q, R, "3/4*x - 1/4*x");
  CHECK(poly_eq(Q, q, parse_poly(Q, R, "1/2*x")));
}

TEST_CASE("univariate gcd, division, root scan") {
  Fp F(7);
  // x^2 - 1 and x^3 - 1 share x - 1
  UPoly<Fp> a{F.from_int(-1), 0, 1};
  UPoly<Fp> b{F.from_int(-1), 0, 0, 1};
  auto g = up_gcd(F, a, b);
  REQUIRE(up_deg(g) == 1);
  CHECK(g[0] == F.from_int(-1));
  CHECK(g[1] == 1);

  auto [q, r] = up_divmod(F, b, a);
  CHECK(up_deg(q) == 1);
  // x^3 - 1 = x*(x^2-1) + (x-1)
  CHECK(up_deg(r) == 1);

  auto roots = up_roots_scan(F, a);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == 1);
  CHECK(roots[1] == 6);
}

TEST_CASE("rng streams are deterministic and tag-separated") {
  Rng a(7, "alpha"), b(7, "alpha"), c(7, "beta");
  CHECK(a.next() == b.next());
  CHECK(a.next() == b.next());
  Rng a2(7, "alpha");
  CHECK(a2.next() != c.next());
}
