#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gonalis/monomial.hpp"

namespace gonalis {

// Sparse multivariate polynomial: terms sorted strictly descending in the
// ring order, no zero coefficients.
template <class K>
struct Poly {
  using elem = typename K::elem;
  struct Term {
    Mono m;
    elem c;
  };
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : static_cast<int>(terms.front().m.deg); }
  const Term& lead() const { return terms.front(); }
};

template <class K>
Poly<K> poly_zero() {
  return Poly<K>{};
}

template <class K>
Poly<K> poly_const(const K& F, const typename K::elem& c) {
  Poly<K> p;
  if (!F.is_zero(c)) p.terms.push_back({Mono::one(), c});
  return p;
}

template <class K>
Poly<K> poly_term(const K& F, const Mono& m, const typename K::elem& c) {
  Poly<K> p;
  if (!F.is_zero(c)) p.terms.push_back({m, c});
  return p;
}

template <class K>
Poly<K> poly_var(const K& F, int i) {
  return poly_term(F, Mono::var(i), F.one());
}

// Sorts terms, merges duplicates, drops zeros.
template <class K>
void poly_normalize(const K& F, const Ring& r, Poly<K>& p) {
  auto& t = p.terms;
  std::sort(t.begin(), t.end(),
            [&](const auto& a, const auto& b) { return r.greater(a.m, b.m); });
  size_t out = 0;
  for (size_t i = 0; i < t.size();) {
    Mono m = t[i].m;
    auto c = t[i].c;
    size_t j = i + 1;
    while (j < t.size() && t[j].m == m) {
      c = F.add(c, t[j].c);
      ++j;
    }
    if (!F.is_zero(c)) t[out++] = {m, c};
    i = j;
  }
  t.resize(out);
}

template <class K>
Poly<K> poly_add(const K& F, const Ring& r, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].m == b.terms[j].m) {
      auto c = F.add(a.terms[i].c, b.terms[j].c);
      if (!F.is_zero(c)) out.terms.push_back({a.terms[i].m, c});
      ++i;
      ++j;
    } else if (r.greater(a.terms[i].m, b.terms[j].m)) {
      out.terms.push_back(a.terms[i++]);
    } else {
      out.terms.push_back(b.terms[j++]);
    }
  }
  while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) out.terms.push_back(b.terms[j++]);
  return out;
}

template <class K>
Poly<K> poly_scale(const K& F, const Poly<K>& a, const typename K::elem& c) {
  Poly<K> out;
  if (F.is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.m, F.mul(t.c, c)});
  return out;
}

template <class K>
Poly<K> poly_neg(const K& F, const Poly<K>& a) {
  Poly<K> out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.m, F.neg(t.c)});
  return out;
}

template <class K>
Poly<K> poly_sub(const K& F, const Ring& r, const Poly<K>& a, const Poly<K>& b) {
  return poly_add(F, r, a, poly_neg(F, b));
}

// a * (c * m)
template <class K>
Poly<K> poly_mul_term(const K& F, const Poly<K>& a, const Mono& m, const typename K::elem& c) {
  Poly<K> out;
  if (F.is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.m * m, F.mul(t.c, c)});
  return out;
}

template <class K>
Poly<K> poly_mul(const K& F, const Ring& r, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> out;
  if (a.is_zero() || b.is_zero()) return out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) out.terms.push_back({ta.m * tb.m, F.mul(ta.c, tb.c)});
  poly_normalize(F, r, out);
  return out;
}

template <class K>
bool poly_eq(const K& F, const Poly<K>& a, const Poly<K>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].m != b.terms[i].m || !F.eq(a.terms[i].c, b.terms[i].c)) return false;
  return true;
}

template <class K>
Poly<K> poly_monic(const K& F, const Poly<K>& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.lead().c));
}

// d/dx_i
template <class K>
Poly<K> poly_derivative(const K& F, const Ring& r, const Poly<K>& a, int i) {
  Poly<K> out;
  for (const auto& t : a.terms) {
    if (!t.m.e[i]) continue;
    Mono m = t.m;
    auto c = F.mul(t.c, F.from_int(m.e[i]));
    m.e[i] -= 1;
    m.deg -= 1;
    if (!F.is_zero(c)) out.terms.push_back({m, c});
  }
  poly_normalize(F, r, out);
  return out;
}

template <class K>
typename K::elem poly_eval(const K& F, const Poly<K>& a,
                           const std::vector<typename K::elem>& x) {
  auto acc = F.zero();
  for (const auto& t : a.terms) {
    auto v = t.c;
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v = F.mul(v, x[i]);
    acc = F.add(acc, v);
  }
  return acc;
}

// Substitutes polynomials for the variables.
template <class K>
Poly<K> poly_subst(const K& F, const Ring& target, const Poly<K>& a,
                   const std::vector<Poly<K>>& images) {
  Poly<K> acc;
  for (const auto& t : a.terms) {
    Poly<K> v = poly_const(F, t.c);
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v = poly_mul(F, target, v, images[i]);
    acc = poly_add(F, target, acc, v);
  }
  return acc;
}

template <class K>
std::string poly_string(const K& F, const Ring& r, const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    if (i) s += " + ";
    std::string cs = F.to_string(p.terms[i].c);
    if (p.terms[i].m.deg == 0) {
      s += cs;
    } else if (cs == "1") {
      s += r.mono_string(p.terms[i].m);
    } else {
      s += cs + "*" + r.mono_string(p.terms[i].m);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dense degree slices

// Fixed monomial basis of S_d with index lookup.
class DegreeBasis {
public:
  DegreeBasis() = default;
  DegreeBasis(const Ring& r, int d) : monos_(monomials_of_degree(r, d)) {
    for (size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = static_cast<int>(i);
  }
  int size() const { return static_cast<int>(monos_.size()); }
  const Mono& mono(int i) const { return monos_[i]; }
  int index(const Mono& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

private:
  std::vector<Mono> monos_;
  std::unordered_map<Mono, int, MonoHash> index_;
};

template <class K>
std::vector<typename K::elem> poly_to_dense(const K& F, const DegreeBasis& basis,
                                            const Poly<K>& p) {
  std::vector<typename K::elem> v(basis.size(), F.zero());
  for (const auto& t : p.terms) {
    int idx = basis.index(t.m);
    if (idx < 0) throw std::logic_error("poly_to_dense: monomial outside basis (degree mismatch)");
    v[idx] = t.c;
  }
  return v;
}

template <class K>
Poly<K> poly_from_dense(const K& F, const DegreeBasis& basis,
                        const std::vector<typename K::elem>& v) {
  Poly<K> p;
  for (int i = 0; i < basis.size(); ++i)
    if (!F.is_zero(v[i])) p.terms.push_back({basis.mono(i), v[i]});
  // basis order is already descending ring order
  return p;
}

// ---------------------------------------------------------------------------
// Parser: integers/rationals, variables, + - * ^ and parentheses.

namespace detail {

template <class K>
typename K::elem parse_coeff(const K& F, const std::string& tok) {
  if constexpr (requires { K::elem::from_string(tok); }) {
    return K::elem::from_string(tok);
  } else {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return F.from_int(std::stoll(tok));
    return F.div(F.from_int(std::stoll(tok.substr(0, slash))),
                 F.from_int(std::stoll(tok.substr(slash + 1))));
  }
}

template <class K>
struct PolyParser {
  const K& F;
  const Ring& ring;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  int var_index(const std::string& name) {
    for (int i = 0; i < ring.n; ++i)
      if (ring.names[i] == name) return i;
    throw std::invalid_argument("unknown variable '" + name + "'");
  }

  Poly<K> parse_expr() {
    Poly<K> acc = parse_term_signed();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc = poly_add(F, ring, acc, parse_term_signed());
      } else if (eat('-')) {
        acc = poly_sub(F, ring, acc, parse_term_signed());
      } else {
        return acc;
      }
    }
  }

  Poly<K> parse_term_signed() {
    skip_ws();
    bool negate = false;
    while (eat('+') || peek('-')) {
      if (eat('-')) negate = !negate;
    }
    Poly<K> t = parse_product();
    return negate ? poly_neg(F, t) : t;
  }

  Poly<K> parse_product() {
    Poly<K> acc = parse_power();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc = poly_mul(F, ring, acc, parse_power());
      } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
        // implicit multiplication: 3x, x(y+z)
        acc = poly_mul(F, ring, acc, parse_power());
      } else {
        return acc;
      }
    }
  }

  Poly<K> parse_power() {
    Poly<K> base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected exponent");
      int e = std::stoi(s.substr(start, pos - start));
      Poly<K> acc = poly_const(F, F.one());
      for (int i = 0; i < e; ++i) acc = poly_mul(F, ring, acc, base);
      return acc;
    }
    return base;
  }

  Poly<K> parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of polynomial");
    if (eat('(')) {
      Poly<K> inner = parse_expr();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      return inner;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      // rational literal a/b (only when not followed by another factor pattern)
      if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
      return poly_const(F, parse_coeff(F, s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return poly_var(F, var_index(s.substr(start, pos - start)));
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
  }
};

}  // namespace detail

template <class K>
Poly<K> parse_poly(const K& F, const Ring& ring, const std::string& text) {
  detail::PolyParser<K> p{F, ring, text};
  Poly<K> out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("trailing characters in polynomial: " + text.substr(p.pos));
  poly_normalize(F, ring, out);
  return out;
}

}  // namespace gonalis
