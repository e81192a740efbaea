#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gonalis/rng.hpp"

namespace gonalis {

// Prime field GF(p) for odd p < 2^31.  Elements are plain uint32_t values in
// [0, p); all arithmetic goes through the field object, which lets the same
// templated linear algebra and polynomial code run over GF(p), extensions and
// the rationals.
class Fp {
public:
  using elem = std::uint32_t;

  explicit Fp(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p < 3 || p >= (1ull << 31)) throw std::invalid_argument("Fp: need odd prime 3 <= p < 2^31");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }

  elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<elem>(r);
  }

  elem add(elem a, elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem mul(elem a, elem b) const {
    return static_cast<elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  elem pow(elem a, std::uint64_t e) const {
    elem r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("Fp::inv of zero");
    return pow(a, p_ - 2);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  bool is_square(elem a) const {
    if (a == 0) return true;
    return pow(a, (p_ - 1) / 2) == 1;
  }

  // Square root when it exists; throws otherwise.  p = 3 mod 4 fast path,
  // Tonelli-Shanks for the general case.
  elem sqrt(elem a) const;

  elem random(Rng& rng) const { return static_cast<elem>(rng.below(p_)); }
  elem random_nonzero(Rng& rng) const { return static_cast<elem>(1 + rng.below(p_ - 1)); }

  std::string to_string(elem a) const { return std::to_string(a); }

private:
  std::uint32_t p_;
};

}  // namespace gonalis
