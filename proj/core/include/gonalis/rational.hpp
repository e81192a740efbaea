#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "gonalis/rng.hpp"

namespace gonalis {

// Arbitrary-precision rational, a thin RAII wrapper over GMP's mpq_t.
// Values are kept canonical (reduced, positive denominator).
class Rat {
public:
  Rat() { mpq_init(q_); }
  Rat(long long num) {
    mpq_init(q_);
    mpq_set_si(q_, static_cast<long>(num), 1);
  }
  Rat(long long num, unsigned long long den) {
    mpq_init(q_);
    mpq_set_si(q_, static_cast<long>(num), static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
  }
  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  static Rat from_string(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0) throw std::invalid_argument("Rat: bad literal " + s);
    mpq_canonicalize(r.q_);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (mpq_sgn(b.q_) == 0) throw std::domain_error("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  std::string to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  double to_double() const { return mpq_get_d(q_); }

  const mpq_t& raw() const { return q_; }
  mpq_t& raw() { return q_; }

private:
  mpq_t q_;
};

// Field object over Rat with the same interface as Fp, so templated
// algorithms work over both.
class RatField {
public:
  using elem = Rat;

  std::uint64_t characteristic() const { return 0; }

  elem zero() const { return Rat(0); }
  elem one() const { return Rat(1); }
  bool is_zero(const elem& a) const { return a.is_zero(); }
  bool eq(const elem& a, const elem& b) const { return a == b; }

  elem from_int(long long v) const { return Rat(v); }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const { return Rat(1) / a; }
  elem div(const elem& a, const elem& b) const { return a / b; }

  elem random(Rng& rng) const { return Rat(static_cast<long long>(rng.below(2048)) - 1024); }
  elem random_nonzero(Rng& rng) const {
    return Rat(static_cast<long long>(1 + rng.below(1023)) * (rng.below(2) ? 1 : -1));
  }

  std::string to_string(const elem& a) const { return a.to_string(); }
};

}  // namespace gonalis
