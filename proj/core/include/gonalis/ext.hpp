#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gonalis/rng.hpp"

namespace gonalis {

// Thrown when inversion in Ext<K> meets a zero divisor, i.e. the modulus was
// reducible.  The witness is a proper factor of the modulus, so callers that
// extend by a polynomial of unknown factorization can split and retry.
struct ZeroDivisor : std::domain_error {
  explicit ZeroDivisor(std::vector<std::string> factor_desc)
      : std::domain_error("zero divisor in extension; modulus factor found"),
        factor(std::move(factor_desc)) {}
  std::vector<std::string> factor;  // coefficients of a proper factor, base-field strings
};

// Quotient ring K[u]/(m(u)) for a monic modulus m, used as a field when m is
// irreducible.  Elements are coefficient vectors of length deg(m) over the
// base field.  Inversion raises ZeroDivisor (with a factor of m) if the
// element is not invertible, so the caller learns the modulus was reducible
// instead of silently computing garbage.
template <class K>
class Ext {
public:
  using base_elem = typename K::elem;
  using elem = std::vector<base_elem>;

  // modulus: coefficients m_0 .. m_{d-1} of a monic m(u) = u^d + m_{d-1}u^{d-1} + ... + m_0.
  Ext(const K& base, std::vector<base_elem> modulus)
      : base_(base), mod_(std::move(modulus)), deg_(static_cast<int>(mod_.size())) {
    if (deg_ < 1) throw std::invalid_argument("Ext: modulus must have degree >= 1");
  }

  const K& base() const { return base_; }
  int degree() const { return deg_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  elem zero() const { return elem(deg_, base_.zero()); }
  elem one() const {
    elem e(deg_, base_.zero());
    e[0] = base_.one();
    return e;
  }
  elem generator() const {
    elem e(deg_, base_.zero());
    if (deg_ == 1) {
      // K[u]/(u - c): the generator is the scalar c.
      e[0] = base_.neg(mod_[0]);
    } else {
      e[1] = base_.one();
    }
    return e;
  }
  elem embed(const base_elem& a) const {
    elem e(deg_, base_.zero());
    e[0] = a;
    return e;
  }

  bool is_zero(const elem& a) const {
    for (const auto& c : a)
      if (!base_.is_zero(c)) return false;
    return true;
  }
  bool eq(const elem& a, const elem& b) const {
    for (int i = 0; i < deg_; ++i)
      if (!base_.eq(a[i], b[i])) return false;
    return true;
  }

  elem from_int(long long v) const { return embed(base_.from_int(v)); }

  elem add(const elem& a, const elem& b) const {
    elem r(deg_, base_.zero());
    for (int i = 0; i < deg_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  elem sub(const elem& a, const elem& b) const {
    elem r(deg_, base_.zero());
    for (int i = 0; i < deg_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  elem neg(const elem& a) const {
    elem r(deg_, base_.zero());
    for (int i = 0; i < deg_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }

  elem mul(const elem& a, const elem& b) const {
    // Schoolbook product followed by reduction; degrees here are tiny.
    std::vector<base_elem> prod(2 * deg_ - 1, base_.zero());
    for (int i = 0; i < deg_; ++i) {
      if (base_.is_zero(a[i])) continue;
      for (int j = 0; j < deg_; ++j)
        prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
      if (base_.is_zero(prod[k])) continue;
      base_elem c = prod[k];
      prod[k] = base_.zero();
      for (int i = 0; i < deg_; ++i)
        prod[k - deg_ + i] = base_.sub(prod[k - deg_ + i], base_.mul(c, mod_[i]));
    }
    prod.resize(deg_);
    return prod;
  }

  elem inv(const elem& a) const;
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

  elem random(Rng& rng) const {
    elem r(deg_, base_.zero());
    for (auto& c : r) c = base_.random(rng);
    return r;
  }
  elem random_nonzero(Rng& rng) const {
    for (;;) {
      elem r = random(rng);
      if (!is_zero(r)) return r;
    }
  }

  std::string to_string(const elem& a) const {
    std::string s = "[";
    for (int i = 0; i < deg_; ++i) {
      if (i) s += ",";
      s += base_.to_string(a[i]);
    }
    return s + "]";
  }

private:
  K base_;
  std::vector<base_elem> mod_;
  int deg_;
};

template <class K>
typename Ext<K>::elem Ext<K>::inv(const elem& a) const {
  if (is_zero(a)) throw std::domain_error("Ext::inv of zero");
  // Extended Euclid on (a, m) over K[u].  Polynomials as coefficient vectors,
  // lowest degree first, trimmed.
  using Vec = std::vector<base_elem>;
  auto trim = [&](Vec& v) {
    while (!v.empty() && base_.is_zero(v.back())) v.pop_back();
  };
  auto timesc = [&](const Vec& v, const base_elem& c) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = base_.mul(v[i], c);
    return r;
  };
  auto submul = [&](Vec a_, const Vec& b, const base_elem& c, int shift) {
    // a - c * u^shift * b
    if (a_.size() < b.size() + shift) a_.resize(b.size() + shift, base_.zero());
    for (size_t i = 0; i < b.size(); ++i)
      a_[i + shift] = base_.sub(a_[i + shift], base_.mul(c, b[i]));
    trim(a_);
    return a_;
  };

  Vec r0 = mod_;
  r0.push_back(base_.one());  // the monic modulus itself
  Vec r1(a);
  trim(r1);
  Vec s0{}, s1{base_.one()};  // s with r = s*a mod m

  while (!r1.empty()) {
    // Divide r0 by r1.
    Vec q;  // unused explicitly; fold into s updates
    while (r0.size() >= r1.size() && !r0.empty()) {
      int shift = static_cast<int>(r0.size() - r1.size());
      base_elem c = base_.div(r0.back(), r1.back());
      r0 = submul(r0, r1, c, shift);
      // s0 -= c * u^shift * s1
      Vec term = timesc(s1, c);
      if (s0.size() < term.size() + shift) s0.resize(term.size() + shift, base_.zero());
      for (size_t i = 0; i < term.size(); ++i)
        s0[i + shift] = base_.sub(s0[i + shift], term[i]);
      trim(s0);
      if (r0.size() < r1.size()) break;
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  // gcd = r0.
  if (static_cast<int>(r0.size()) != 1) {
    // Non-trivial gcd: witness a proper factor of the modulus.
    std::vector<std::string> fac;
    fac.reserve(r0.size());
    for (const auto& c : r0) fac.push_back(base_.to_string(c));
    throw ZeroDivisor(std::move(fac));
  }
  base_elem lead_inv = base_.inv(r0[0]);
  elem out(deg_, base_.zero());
  for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(deg_); ++i)
    out[i] = base_.mul(s0[i], lead_inv);
  return out;
}

}  // namespace gonalis
