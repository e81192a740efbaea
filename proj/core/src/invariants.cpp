#include "gonalis/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "gonalis/monomial.hpp"  // binomial

namespace gonalis {

long long brill_noether_rho(long long g, long long r, long long d) {
  if (g < 0 || r < 0 || d < 1) {
    throw std::invalid_argument("brill_noether_rho: need g >= 0, r >= 0, d >= 1");
  }
  return g - (r + 1) * (g - d + r);
}

long long gonality_upper_bound(long long g) {
  if (g < 2) throw std::invalid_argument("gonality_upper_bound: need g >= 2");
  return (g + 3) / 2;
}

std::pair<long long, long long> clifford_window(long long c) {
  if (c < 0) throw std::invalid_argument("clifford_window: need c >= 0");
  return {c + 2, c + 3};
}

long long clifford_of_divisor(long long deg, long long h0) {
  if (h0 < 1) throw std::invalid_argument("clifford_of_divisor: need h0 >= 1");
  return deg - 2 * (h0 - 1);
}

long long w1d_count(long long g, long long d) {
  if (g < 2 || g % 2 != 0) {
    throw std::invalid_argument("w1d_count: finite pencil count needs even g");
  }
  if (d != (g + 3) / 2) {
    throw std::invalid_argument("w1d_count: d must be the minimal pencil degree");
  }
  // g!/((g-d+1)!(g-d+2)!) with g = 2m, d = m+1 is (2m)!/(m!(m+1)!).
  const long long m = g / 2;
  return binomial(g, m) / (m + 1);
}

long long w1d_genus_formula(long long g) {
  if (g < 3 || g % 2 != 1) {
    throw std::invalid_argument("w1d_genus_formula: needs odd g >= 3");
  }
  const long long n = (g - 1) / 2;
  return 2 * binomial(2 * n + 1, n - 1) + 1;
}

std::vector<long long> scroll_betti_row(int f) {
  if (f < 1) throw std::invalid_argument("scroll_betti_row: need f >= 1");
  std::vector<long long> row(static_cast<size_t>(f));
  for (int i = 1; i <= f; ++i) {
    row[static_cast<size_t>(i - 1)] = i * binomial(f + 1, i + 1);
  }
  return row;
}

GonalityBounds plane_gonality_bounds(long long d, long long nu,
                                     long long delta) {
  if (d < 3 || nu < 1 || nu >= d || delta < 0) {
    throw std::invalid_argument(
        "plane_gonality_bounds: need d >= 3, 1 <= nu < d, delta >= 0");
  }
  GonalityBounds b;
  b.upper = d - nu;
  if (d >= 2 * nu) {
    const long long x = d / nu;
    const long long q = x * (x - d) + d + delta - nu;
    if (q <= 0) {
      b.lower = d - nu;
      b.certificate = "OS-exact";
    } else {
      b.lower = d - nu - q;
      b.certificate = "Sakai";
    }
  } else {
    // Trivial bound; capped by the projection bound so that lower <= upper
    // even for nu = d-1 (where the model is rational and upper = 1).
    b.lower = std::min<long long>(2, b.upper);
    b.certificate = "none";
  }
  return b;
}

}  // namespace gonalis
