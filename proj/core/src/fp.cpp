#include "gonalis/fp.hpp"

namespace gonalis {

Fp::elem Fp::sqrt(elem a) const {
  if (a == 0) return 0;
  if (!is_square(a)) throw std::domain_error("Fp::sqrt: not a square");
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  // Tonelli-Shanks.  Write p-1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  // Find a quadratic non-residue z by scanning small values.
  elem z = 2;
  while (is_square(z)) ++z;

  elem m = s;
  elem c = pow(z, q);
  elem t = pow(a, q);
  elem r = pow(a, (q + 1) / 2);
  while (t != 1) {
    // Least i with t^(2^i) = 1.
    elem i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    elem b = c;
    for (elem j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace gonalis
