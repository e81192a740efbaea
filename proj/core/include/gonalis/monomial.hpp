#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gonalis {

inline constexpr int kMaxVars = 16;

// Exponent vector with cached total degree.  Fits in 18 bytes; suitable as a
// hash key by raw bytes.
struct Mono {
  std::uint16_t deg = 0;
  std::array<std::uint8_t, kMaxVars> e{};

  static Mono one() { return Mono{}; }
  static Mono var(int i, int power = 1) {
    Mono m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

  Mono operator*(const Mono& o) const {
    Mono r;
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return r;
  }

  bool divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // this / o, assuming o divides this.
  Mono operator/(const Mono& o) const {
    Mono r;
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    return r;
  }

  friend Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime_with(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ m.deg) * 1099511628211ull;
    for (int i = 0; i < kMaxVars; ++i) h = (h ^ m.e[i]) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

// Polynomial ring metadata: variable count, print names, monomial order.
// Order is graded reverse lexicographic, optionally as a block order that
// eliminates the first `elim_block` variables (block-wise grevlex, first
// block dominant) for elimination ideals.
struct Ring {
  int n = 0;
  std::vector<std::string> names;
  int elim_block = 0;

  static Ring with_vars(const std::vector<std::string>& vars, int elim = 0) {
    Ring r;
    r.n = static_cast<int>(vars.size());
    r.names = vars;
    r.elim_block = elim;
    return r;
  }
  // x0..x{n-1}
  static Ring standard(int n, const std::string& prefix = "x");

  // true if a > b in the ring order.
  bool greater(const Mono& a, const Mono& b) const {
    if (elim_block > 0) {
      int da = 0, db = 0;
      for (int i = 0; i < elim_block; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da > db;
      // grevlex tie-break within the first block
      for (int i = elim_block - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    if (a.deg != b.deg) return a.deg > b.deg;
    for (int i = n - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }

  std::string mono_string(const Mono& m) const;
};

// All monomials of total degree d in r.n variables, sorted descending in the
// ring order (deterministic basis for dense degree slices).
std::vector<Mono> monomials_of_degree(const Ring& r, int d);

// dim_k S_d for the polynomial ring on n variables: C(n-1+d, d).
long long poly_dim(int n, int d);

long long binomial(long long n, long long k);

}  // namespace gonalis
