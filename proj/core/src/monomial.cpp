#include "gonalis/monomial.hpp"

#include <algorithm>

namespace gonalis {

Ring Ring::standard(int n, const std::string& prefix) {
  Ring r;
  r.n = n;
  r.names.reserve(n);
  for (int i = 0; i < n; ++i) r.names.push_back(prefix + std::to_string(i));
  return r;
}

std::string Ring::mono_string(const Mono& m) const {
  if (m.deg == 0) return "1";
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(m.e[i]));
  }
  return s;
}

namespace {
void gen_rec(int n, int var, int rem, Mono& cur, std::vector<Mono>& out) {
  if (var == n - 1) {
    cur.e[var] = static_cast<std::uint8_t>(rem);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = rem; k >= 0; --k) {
    cur.e[var] = static_cast<std::uint8_t>(k);
    gen_rec(n, var + 1, rem - k, cur, out);
  }
  cur.e[var] = 0;
}
}  // namespace

std::vector<Mono> monomials_of_degree(const Ring& r, int d) {
  std::vector<Mono> out;
  out.reserve(static_cast<size_t>(poly_dim(r.n, d)));
  Mono cur;
  cur.deg = static_cast<std::uint16_t>(d);
  if (r.n == 0) {
    if (d == 0) out.push_back(Mono::one());
    return out;
  }
  gen_rec(r.n, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return r.greater(a, b); });
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

long long poly_dim(int n, int d) {
  if (d < 0) return 0;
  return binomial(n - 1 + d, d);
}

}  // namespace gonalis
