#pragma once

// Closed-form numerical invariants of curves: Brill-Noether numbers,
// Clifford-index and gonality bounds, pencil counts, Eagon-Northcott
// Betti rows of rational normal scrolls, and gonality bounds derived
// from a plane model.  Everything here is exact integer arithmetic.

#include <string>
#include <utility>
#include <vector>

namespace gonalis {

// rho(g, r, d) = g - (r+1)(g - d + r), the expected dimension of the
// space of g^r_d's on a general curve of genus g.
long long brill_noether_rho(long long g, long long r, long long d);

// Every curve of genus g >= 2 carries a pencil of degree floor((g+3)/2).
long long gonality_upper_bound(long long g);

// A curve of Clifford index c has gonality c+2 or c+3.
std::pair<long long, long long> clifford_window(long long c);

// Cliff(D) = deg(D) - 2(h^0(D) - 1).
long long clifford_of_divisor(long long deg, long long h0);

// Number of minimal pencils on a general curve of even genus g, where the
// minimal pencil degree is d = (g+2)/2: the count is g!/((g-d+1)!(g-d+2)!),
// the Catalan number C_{g/2}.  Both arguments are taken so the caller's
// claim about d can be validated.  Throws std::invalid_argument if g is
// odd (the pencils then form a curve, not a finite set) or if d is not
// the minimal pencil degree.
long long w1d_count(long long g, long long d);

// Genus of the curve of minimal pencils on a general curve of odd genus
// g = 2n+1, as the closed formula 2*C(2n+1, n-1) + 1.  This formula is
// known to disagree with a directly computed example at g = 7 (it gives
// 43 where the computation gives 15), so it is exposed for reference but
// must not be used as ground truth.
long long w1d_genus_formula(long long g);

// Betti row of the Eagon-Northcott resolution of the 2x2 minors of a
// 1-generic 2x(f+1) matrix of linear forms (a rational normal scroll of
// codimension f): beta_i = i * C(f+1, i+1) for i = 1..f.
std::vector<long long> scroll_betti_row(int f);

// Gonality bounds computed from a plane model of degree d with maximal
// singularity multiplicity nu and delta-invariant delta.  The certificate
// names the rule that produced the lower bound.
struct GonalityBounds {
  long long lower = 0;
  long long upper = 0;
  std::string certificate;  // "OS-exact", "Sakai", or "none"
};

// upper = d - nu always (project from a point of maximal multiplicity).
// With Q(x) = x(x-d) + d + delta - nu: if d >= 2*nu and Q(floor(d/nu)) <= 0
// the projection is gonal and lower = d - nu ("OS-exact"); if d >= 2*nu but
// Q(floor(d/nu)) > 0, lower = d - nu - Q(floor(d/nu)) ("Sakai"); otherwise
// only the trivial lower = 2 is claimed ("none").
GonalityBounds plane_gonality_bounds(long long d, long long nu,
                                     long long delta);

}  // namespace gonalis
