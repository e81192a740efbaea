#pragma once

// Curve ingestion.  Plane curves with ordinary singularities are turned into
// canonically embedded models via the adjoint linear system; canonical ideals
// can also be ingested directly.  Includes the delta-invariant/genus count,
// the hyperelliptic/nonhyperelliptic classification of a canonical image,
// and the degree of a rational map to P^1 cut out by a pencil of forms.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gonalis/groebner.hpp"
#include "gonalis/invariants.hpp"
#include "gonalis/monomial.hpp"
#include "gonalis/poly.hpp"
#include "gonalis/resolution.hpp"
#include "gonalis/rng.hpp"
#include "gonalis/upoly.hpp"

namespace gonalis {

// Input-class errors.  These all mean "the input is not what it claims to
// be", which the CLI reports distinctly from internal failures.
struct NonOrdinaryInput : std::domain_error {
  using std::domain_error::domain_error;
};
struct GenusTooSmall : std::domain_error {
  using std::domain_error::domain_error;
};
struct HyperellipticImage : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnclassifiableImage : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConstantMap : std::domain_error {
  using std::domain_error::domain_error;
};

template <class K>
struct PlaneSingularity {
  std::array<typename K::elem, 3> point{};
  int mult = 2;
  bool ordinary = true;  // the input's claim, verified on ingestion
};

template <class K>
struct PlaneModel {
  Ring ring;  // three variables
  Poly<K> F;
  int degree = 0;
  std::vector<PlaneSingularity<K>> sings;
};

template <class K>
struct CanonicalModel {
  Ring ring;  // g variables
  std::vector<Poly<K>> ideal;
  int genus = 0;
  // Adjoint forms in the plane ring realizing the map from the plane model,
  // empty for directly ingested canonical ideals.
  std::vector<Poly<K>> back_map;
  Ring back_ring;
};

enum class CanonicalClass { nonhyperelliptic, hyperelliptic, rational };

// ---------------------------------------------------------------------------
// Local analysis at a point of P^2.

// f restricted to an affine chart centered at p, in local coordinates (u, v):
// substitutes x_c -> p_c for the chart index c (the last nonzero coordinate)
// and x_s -> p_s + u, x_t -> p_t + v for the other two.  The multiplicity of
// f at p is the lowest total degree appearing in the result.
template <class K>
Poly<K> local_expansion(const K& F, const Ring& local, const Poly<K>& f,
                        const std::array<typename K::elem, 3>& p) {
  int c = -1;
  for (int i = 2; i >= 0; --i)
    if (!F.is_zero(p[i])) {
      c = i;
      break;
    }
  if (c < 0) throw std::invalid_argument("local_expansion: zero point");
  std::vector<Poly<K>> images(3);
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    auto at = poly_const(F, F.div(p[i], p[c]));
    if (i == c) {
      images[i] = at;
    } else {
      images[i] = poly_add(F, local, at, poly_var<K>(F, next));
      ++next;
    }
  }
  return poly_subst(F, local, f, images);
}

template <class K>
int poly_min_degree(const Poly<K>& p) {
  int md = -1;
  for (const auto& t : p.terms)
    if (md < 0 || t.m.deg < md) md = t.m.deg;
  return md;
}

// Whether a binary form (a polynomial in the first two variables of `local`,
// homogeneous of its own degree) has no repeated linear factor over the
// algebraic closure.  Exact: a binary form is squarefree iff u and v divide
// it at most once and its dehomogenization has trivial gcd with its
// derivative.
template <class K>
bool binary_form_squarefree(const K& F, const Poly<K>& form) {
  int deg = form.degree();
  std::vector<typename K::elem> c(static_cast<size_t>(deg) + 1, F.zero());
  for (const auto& t : form.terms) c[static_cast<size_t>(t.m.e[0])] = t.c;
  int lo = 0, hi = deg;
  while (F.is_zero(c[static_cast<size_t>(lo)])) ++lo;  // u-multiplicity
  while (F.is_zero(c[static_cast<size_t>(hi)])) --hi;  // deg - v-multiplicity
  if (lo > 1 || deg - hi > 1) return false;
  UPoly<K> q(c.begin() + lo, c.begin() + hi + 1);
  up_trim(F, q);
  if (up_deg(q) <= 0) return true;
  auto g = up_gcd(F, q, up_derivative(F, q));
  return up_deg(g) == 0;
}

// Checks the PlaneModel invariants: F homogeneous of the stated degree,
// singular points distinct, F of multiplicity exactly nu at each listed
// point with squarefree tangent cone.  Throws NonOrdinaryInput.
template <class K>
void validate_plane_model(const K& F, const PlaneModel<K>& P) {
  if (!is_homogeneous(P.F) || P.F.degree() != P.degree)
    throw NonOrdinaryInput("plane model: F is not homogeneous of the stated degree");
  for (size_t i = 0; i < P.sings.size(); ++i)
    for (size_t j = i + 1; j < P.sings.size(); ++j) {
      const auto &a = P.sings[i].point, &b = P.sings[j].point;
      bool same = true;
      for (int r = 0; r < 3 && same; ++r)
        for (int s = r + 1; s < 3 && same; ++s)
          if (!F.is_zero(F.sub(F.mul(a[r], b[s]), F.mul(a[s], b[r])))) same = false;
      if (same) throw NonOrdinaryInput("plane model: repeated singular point");
    }
  Ring local = Ring::standard(2, "u");
  for (const auto& s : P.sings) {
    if (s.mult < 2) throw NonOrdinaryInput("plane model: multiplicity must be >= 2");
    if (!s.ordinary) throw NonOrdinaryInput("plane model: only ordinary singularities are supported");
    auto g = local_expansion(F, local, P.F, s.point);
    if (poly_min_degree(g) != s.mult)
      throw NonOrdinaryInput("plane model: stated multiplicity does not match the curve");
    Poly<K> cone;
    for (const auto& t : g.terms)
      if (t.m.deg == s.mult) cone.terms.push_back(t);
    poly_normalize(F, local, cone);
    if (!binary_form_squarefree(F, cone))
      throw NonOrdinaryInput("plane model: tangent cone has a repeated factor");
  }
}

// delta = sum nu_i(nu_i-1)/2 over the ordinary singularities, and the
// geometric genus g = (d-1)(d-2)/2 - delta.
template <class K>
std::pair<long long, long long> delta_genus(const K& F, const PlaneModel<K>& P) {
  validate_plane_model(F, P);
  long long delta = 0;
  for (const auto& s : P.sings) delta += static_cast<long long>(s.mult) * (s.mult - 1) / 2;
  const long long d = P.degree;
  return {delta, (d - 1) * (d - 2) / 2 - delta};
}

// Basis of the adjoint system: forms of degree d-3 vanishing to order
// nu_i - 1 at each singular point.  For a plane model of geometric genus g
// these cut out the canonical system, so the basis has size g.
template <class K>
std::vector<Poly<K>> adjoint_basis(const K& F, const PlaneModel<K>& P) {
  const int ad = P.degree - 3;
  DegreeBasis basis(P.ring, ad);
  Ring local = Ring::standard(2, "u");
  std::vector<std::vector<typename K::elem>> rows;
  for (const auto& s : P.sings) {
    const int ord = s.mult - 1;  // vanish to this order
    // One row per local monomial u^a v^b with a+b <= ord-1.
    std::vector<std::vector<typename K::elem>> block;
    for (int a = 0; a + 0 <= ord - 1; ++a)
      for (int b = 0; a + b <= ord - 1; ++b)
        block.emplace_back(basis.size(), F.zero());
    for (long long col = 0; col < basis.size(); ++col) {
      auto g = local_expansion(F, local, poly_term<K>(F, basis.mono(col), F.one()), s.point);
      for (const auto& t : g.terms) {
        if (t.m.deg > ord - 1) continue;
        // row index of (a, b) within the block, enumerated as above
        int a = t.m.e[0], b = t.m.e[1], idx = 0;
        for (int aa = 0; aa < a; ++aa) idx += ord - aa;
        idx += b;
        block[static_cast<size_t>(idx)][static_cast<size_t>(col)] = t.c;
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  Mat<K> M(static_cast<int>(rows.size()), static_cast<int>(basis.size()), F);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) M.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  Mat<K> ker = nullspace(F, M);
  std::vector<Poly<K>> out;
  for (int j = 0; j < ker.cols(); ++j) {
    std::vector<typename K::elem> v(static_cast<size_t>(ker.rows()));
    for (int i = 0; i < ker.rows(); ++i) v[static_cast<size_t>(i)] = ker.at(i, j);
    out.push_back(poly_from_dense(F, basis, v));
  }
  return out;
}

// Kernel of the ring map K[t_0..t_{m-1}] -> K[x,y,z]/(F), t_i -> A_i,
// computed by eliminating x, y, z from (F, t_i - A_i).  The result is a
// homogeneous ideal in an m-variable standard ring since the A_i all have
// equal degree.
template <class K>
std::vector<Poly<K>> ring_map_kernel(const K& F, const Ring& src, const Poly<K>& rel,
                                     const std::vector<Poly<K>>& images) {
  const int m = static_cast<int>(images.size());
  if (src.n + m > kMaxVars)
    throw std::invalid_argument("ring_map_kernel: too many variables");
  std::vector<std::string> names = src.names;
  for (int i = 0; i < m; ++i) names.push_back("t" + std::to_string(i));
  Ring big = Ring::with_vars(names, /*elim=*/src.n);
  std::vector<Poly<K>> gens;
  if (!rel.is_zero()) gens.push_back(rel);
  for (int i = 0; i < m; ++i) {
    // t_i - A_i, with t_i living after the src block
    Poly<K> t = poly_var<K>(F, src.n + i);
    gens.push_back(poly_sub(F, big, t, images[static_cast<size_t>(i)]));
  }
  auto gb = buchberger(F, big, gens);
  auto ker = eliminate_block(gb, src.n);
  Ring dst = Ring::standard(m);
  auto minimal = minimalize_generators(F, dst, ker);
  return minimal;
}

// Classifies the image of a canonical system from its homogeneous ideal:
// a curve of degree 2g-2 is the nonhyperelliptic canonical embedding; a
// rational normal curve of degree g-1 (checked against the Eagon-Northcott
// Betti row) is the 2:1 hyperelliptic image.  Throws UnclassifiableImage
// when neither signature matches.
template <class K>
CanonicalClass classify_canonical_image(const K& F, const Ring& rt,
                                        const std::vector<Poly<K>>& ideal, int g) {
  if (g == 0) return CanonicalClass::rational;
  if (g == 1) throw UnclassifiableImage("genus-1 curves have no canonical image curve");
  auto gb = buchberger(F, rt, ideal);
  auto hd = hilbert_data(gb);
  if (g == 2) {
    // The canonical image is P^1 itself, double-covered.
    if (hd.dim == 1 && hd.degree == 1) return CanonicalClass::hyperelliptic;
    throw UnclassifiableImage("genus-2 canonical image is not a line");
  }
  if (hd.dim == 1 && hd.degree == 2 * g - 2) return CanonicalClass::nonhyperelliptic;
  if (hd.dim == 1 && hd.degree == g - 1) {
    auto res = resolve(F, rt, ideal, hd.numerator);
    auto row = scroll_betti_row(g - 2);
    BettiTable expect;
    expect.steps.resize(static_cast<size_t>(g) - 1);
    expect.steps[0][0] = 1;
    for (int i = 1; i <= g - 2; ++i)
      expect.steps[static_cast<size_t>(i)][i + 1] = row[static_cast<size_t>(i) - 1];
    if (res.complete && betti_of(res) == expect) return CanonicalClass::hyperelliptic;
    throw UnclassifiableImage("canonical image has rational-normal-curve degree but the wrong resolution");
  }
  throw UnclassifiableImage("canonical image matches neither the degree-(2g-2) nor the degree-(g-1) signature");
}

// Canonical model of the normalization of a plane model with ordinary
// singularities: the image of the adjoint map, with its ideal computed by
// elimination.  Validates the canonical-model invariants.
template <class K>
CanonicalModel<K> canonical_ideal(const K& F, const PlaneModel<K>& P) {
  auto [delta, g] = delta_genus(F, P);
  (void)delta;
  if (g <= 2) throw GenusTooSmall("plane model has genus <= 2; no canonical embedding");
  auto adj = adjoint_basis(F, P);
  if (static_cast<long long>(adj.size()) != g)
    throw NonOrdinaryInput("adjoint system has unexpected dimension");
  auto ker = ring_map_kernel(F, P.ring, P.F, adj);
  CanonicalModel<K> M;
  M.ring = Ring::standard(static_cast<int>(g));
  M.ideal = std::move(ker);
  M.genus = static_cast<int>(g);
  M.back_map = adj;
  M.back_ring = P.ring;
  auto cls = classify_canonical_image(F, M.ring, M.ideal, M.genus);
  if (cls == CanonicalClass::hyperelliptic)
    throw HyperellipticImage("curve is hyperelliptic; canonical map is not an embedding");
  // Petri: the canonical ideal of a nonhyperelliptic curve of genus >= 4
  // has exactly C(g-2,2) quadric generators.
  if (g >= 4) {
    long long quads = 0;
    for (const auto& p : M.ideal)
      if (p.degree() == 2) ++quads;
    if (quads != binomial(g - 2, 2))
      throw UnclassifiableImage("canonical ideal has the wrong number of quadrics");
  }
  return M;
}

// Degree of the map C -> P^1, (num : den), as the length of a generic fiber:
// saturate (I_C + (a num - b den)) by num*den to remove the base locus and
// read off the degree of the resulting finite scheme.  Evaluated at two
// seeded choices of (a : b), which must agree.
template <class K>
long long map_degree(const K& F, const Ring& rt, const std::vector<Poly<K>>& IC,
                     const Poly<K>& num, const Poly<K>& den, uint64_t seed = 1) {
  if (num.is_zero() || den.is_zero() || !is_homogeneous(num) || !is_homogeneous(den) ||
      num.degree() != den.degree())
    throw std::invalid_argument("map_degree: need homogeneous forms of equal degree");
  {
    auto gb = buchberger(F, rt, IC);
    if (normal_form(F, gb, num).is_zero() && normal_form(F, gb, den).is_zero())
      throw ConstantMap("both forms vanish identically on the curve");
  }
  long long degs[2];
  Rng rng(seed, "map_degree");
  for (int trial = 0; trial < 2; ++trial) {
    auto a = F.random_nonzero(rng);
    auto b = F.random_nonzero(rng);
    auto pencil = poly_sub(F, rt, poly_scale(F, num, a), poly_scale(F, den, b));
    auto fiber = IC;
    fiber.push_back(pencil);
    auto sat = saturate_by(F, rt, fiber, poly_mul(F, rt, num, den));
    auto gb = buchberger(F, rt, sat);
    auto hd = hilbert_data(gb);
    if (hd.dim < 0)
      throw ConstantMap("pencil is constant on the curve: generic fiber is empty");
    if (hd.dim != 0) throw std::runtime_error("map_degree: fiber is not finite");
    degs[trial] = hd.degree;
  }
  if (degs[0] != degs[1])
    throw std::runtime_error("map_degree: fibers at independent points disagree");
  return degs[0];
}

// ---------------------------------------------------------------------------
// Text input format.

struct FieldSpec {
  bool rational = false;  // QQ when true, GF(p) otherwise
  long long p = 0;
};

enum class InputKind { plane, canonical, hyperelliptic };

// A parsed curve description, still field-agnostic: polynomials and
// coordinates are kept as text until a field is instantiated.
struct CurveInput {
  FieldSpec field;
  InputKind kind = InputKind::plane;
  // plane <d> / F = ... / sing (a:b:c) mult <nu>
  int plane_degree = 0;
  std::string plane_poly;
  struct SingSpec {
    std::array<std::string, 3> coords;
    int mult = 2;
  };
  std::vector<SingSpec> sings;
  // canonical <g> / ideal: / one generator per line
  int genus = 0;
  std::vector<std::string> ideal_gens;
  // hyperelliptic f(x) = ...
  std::string hyperell_rhs;
};

// Parses the text input format.  Throws std::invalid_argument with a
// line-numbered message on malformed input.
CurveInput parse_curve_input(const std::string& text);

// Scalar literal: an integer or a fraction a/b.
template <class K>
typename K::elem parse_scalar(const K& F, const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return F.from_int(std::stoll(tok));
  return F.div(F.from_int(std::stoll(tok.substr(0, slash))),
               F.from_int(std::stoll(tok.substr(slash + 1))));
}

template <class K>
PlaneModel<K> make_plane_model(const K& F, const CurveInput& in) {
  if (in.kind != InputKind::plane)
    throw std::invalid_argument("make_plane_model: input is not a plane model");
  PlaneModel<K> P;
  P.ring = Ring::with_vars({"x", "y", "z"});
  P.F = parse_poly(F, P.ring, in.plane_poly);
  P.degree = in.plane_degree;
  for (const auto& s : in.sings) {
    PlaneSingularity<K> ps;
    for (int i = 0; i < 3; ++i) ps.point[static_cast<size_t>(i)] = parse_scalar(F, s.coords[static_cast<size_t>(i)]);
    ps.mult = s.mult;
    P.sings.push_back(ps);
  }
  validate_plane_model(F, P);
  return P;
}

template <class K>
CanonicalModel<K> make_canonical_model(const K& F, const CurveInput& in) {
  if (in.kind != InputKind::canonical)
    throw std::invalid_argument("make_canonical_model: input is not a canonical ideal");
  CanonicalModel<K> M;
  M.genus = in.genus;
  M.ring = Ring::standard(in.genus);
  for (const auto& s : in.ideal_gens) M.ideal.push_back(parse_poly(F, M.ring, s));
  return M;
}

// The hyperelliptic input kind y^2 = f(x): the gonal map is x itself, and
// the canonical image is the rational normal curve of degree g-1.
template <class K>
struct HyperellipticModel {
  UPoly<K> f;
  long long genus = 0;
};

template <class K>
HyperellipticModel<K> make_hyperelliptic_model(const K& F, const CurveInput& in) {
  if (in.kind != InputKind::hyperelliptic)
    throw std::invalid_argument("make_hyperelliptic_model: input is not hyperelliptic");
  Ring rx = Ring::with_vars({"x"});
  auto fx = parse_poly(F, rx, in.hyperell_rhs);
  HyperellipticModel<K> H;
  H.f.assign(static_cast<size_t>(fx.degree()) + 1, F.zero());
  for (const auto& t : fx.terms) H.f[static_cast<size_t>(t.m.e[0])] = t.c;
  up_trim(F, H.f);
  const int d = up_deg(H.f);
  if (d < 5) throw GenusTooSmall("hyperelliptic model needs deg f >= 5 for genus >= 2");
  auto g = up_gcd(F, H.f, up_derivative(F, H.f));
  if (up_deg(g) != 0)
    throw NonOrdinaryInput("hyperelliptic model: f has a repeated root");
  H.genus = (d - 1) / 2;
  return H;
}

// Ideal of the rational normal curve of degree n in P^n: 2x2 minors of the
// Hankel matrix on the n+1 coordinates.
template <class K>
std::vector<Poly<K>> rnc_ideal(const K& F, const Ring& rt) {
  const int n = rt.n - 1;
  std::vector<Poly<K>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto m = poly_sub(F, rt,
                        poly_mul(F, rt, poly_var<K>(F, i), poly_var<K>(F, j + 1)),
                        poly_mul(F, rt, poly_var<K>(F, i + 1), poly_var<K>(F, j)));
      gens.push_back(m);
    }
  return gens;
}

}  // namespace gonalis
