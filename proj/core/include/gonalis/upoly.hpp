#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gonalis/fp.hpp"

namespace gonalis {

// Univariate polynomials as coefficient vectors, lowest degree first, no
// trailing zeros.  Used for symbolic parameters, minimal polynomials and the
// resultant machinery.
template <class K>
using UPoly = std::vector<typename K::elem>;

template <class K>
void up_trim(const K& F, UPoly<K>& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class T>
int up_deg(const std::vector<T>& a) {
  return static_cast<int>(a.size()) - 1;  // -1 for zero
}

template <class T>
bool up_is_zero(const std::vector<T>& a) {
  return a.empty();
}

template <class K>
UPoly<K> up_const(const K& F, const typename K::elem& c) {
  UPoly<K> r;
  if (!F.is_zero(c)) r.push_back(c);
  return r;
}

template <class K>
UPoly<K> up_x(const K& F) {
  return UPoly<K>{F.zero(), F.one()};
}

template <class K>
UPoly<K> up_add(const K& F, const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  up_trim(F, r);
  return r;
}

template <class K>
UPoly<K> up_neg(const K& F, const UPoly<K>& a) {
  UPoly<K> r(a);
  for (auto& c : r) c = F.neg(c);
  return r;
}

template <class K>
UPoly<K> up_sub(const K& F, const UPoly<K>& a, const UPoly<K>& b) {
  return up_add(F, a, up_neg(F, b));
}

template <class K>
UPoly<K> up_mul(const K& F, const UPoly<K>& a, const UPoly<K>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<K> r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  up_trim(F, r);
  return r;
}

template <class K>
UPoly<K> up_scale(const K& F, const UPoly<K>& a, const typename K::elem& c) {
  if (F.is_zero(c)) return {};
  UPoly<K> r(a);
  for (auto& x : r) x = F.mul(x, c);
  return r;
}

// Division with remainder over a field: a = q*b + r.
template <class K>
std::pair<UPoly<K>, UPoly<K>> up_divmod(const K& F, UPoly<K> a, const UPoly<K>& b) {
  if (b.empty()) throw std::domain_error("up_divmod: division by zero polynomial");
  UPoly<K> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, F.zero());
  auto lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    auto c = F.mul(a.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
    up_trim(F, a);
    if (a.size() < b.size()) break;
  }
  up_trim(F, q);
  return {q, a};
}

template <class K>
UPoly<K> up_mod(const K& F, const UPoly<K>& a, const UPoly<K>& b) {
  return up_divmod(F, a, b).second;
}

template <class K>
UPoly<K> up_monic(const K& F, UPoly<K> a) {
  if (a.empty()) return a;
  auto d = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, d);
  return a;
}

template <class K>
UPoly<K> up_gcd(const K& F, UPoly<K> a, UPoly<K> b) {
  while (!b.empty()) {
    auto r = up_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(F, std::move(a));
}

template <class K>
UPoly<K> up_derivative(const K& F, const UPoly<K>& a) {
  UPoly<K> r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], F.from_int(static_cast<long long>(i))));
  up_trim(F, r);
  return r;
}

template <class K>
typename K::elem up_eval(const K& F, const UPoly<K>& a, const typename K::elem& x) {
  auto r = F.zero();
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

// All roots in the base field by exhaustive scan; intended for GF(p) with
// moderate p.  Returns each root once (ignores multiplicity).
inline std::vector<std::uint32_t> up_roots_scan(const Fp& F, const UPoly<Fp>& a) {
  std::vector<std::uint32_t> roots;
  if (a.empty()) throw std::domain_error("up_roots_scan: zero polynomial");
  for (std::uint32_t x = 0; x < F.modulus(); ++x)
    if (F.is_zero(up_eval(F, a, x))) roots.push_back(x);
  return roots;
}

template <class K>
std::string up_string(const K& F, const UPoly<K>& a, const std::string& var = "t") {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = a.size(); i-- > 0;) {
    if (F.is_zero(a[i])) continue;
    if (!s.empty()) s += " + ";
    s += F.to_string(a[i]);
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace gonalis
