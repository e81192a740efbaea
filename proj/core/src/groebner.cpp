#include "gonalis/groebner.hpp"

#include <numeric>

namespace gonalis {

namespace {

// Drops generators divisible by another generator.
void minimalize(std::vector<Mono>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Mono& a, const Mono& b) { return a.deg < b.deg; });
  std::vector<Mono> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens.swap(out);
}

std::vector<long long> poly_mul_series(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

void poly_add_shifted(std::vector<long long>& a, const std::vector<long long>& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::vector<long long> one_minus_t_pow(int d) {
  std::vector<long long> r(d + 1, 0);
  r[0] = 1;
  r[d] -= 1;
  return r;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Mono> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().deg == 0) return {0};  // unit ideal

  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime_with(gens[j])) coprime = false;
  if (coprime) {
    std::vector<long long> r{1};
    for (const auto& m : gens) r = poly_mul_series(r, one_minus_t_pow(m.deg));
    return r;
  }

  // Pivot on the variable hitting the most generators.
  int best = -1, best_count = 0;
  for (int v = 0; v < nvars; ++v) {
    int cnt = 0;
    for (const auto& m : gens)
      if (m.e[v]) ++cnt;
    if (cnt > best_count) {
      best_count = cnt;
      best = v;
    }
  }

  // N(I) = N(I + (x)) + T * N(I : x)  from  0 -> S/(I:x)(-1) -> S/I -> S/(I+(x)) -> 0.
  std::vector<Mono> plus;
  plus.push_back(Mono::var(best));
  for (const auto& m : gens)
    if (!m.e[best]) plus.push_back(m);

  std::vector<Mono> colon;
  colon.reserve(gens.size());
  for (auto m : gens) {
    if (m.e[best]) {
      m.e[best] -= 1;
      m.deg -= 1;
    }
    colon.push_back(m);
  }

  auto n_plus = hilbert_numerator(std::move(plus), nvars);
  auto n_colon = hilbert_numerator(std::move(colon), nvars);
  poly_add_shifted(n_plus, n_colon, 1);
  return n_plus;
}

long long hilbert_function(const std::vector<long long>& numerator, int nvars, int j) {
  long long h = 0;
  for (size_t k = 0; k < numerator.size(); ++k) {
    if (static_cast<int>(k) > j) break;
    h += numerator[k] * poly_dim(nvars, j - static_cast<int>(k));
  }
  return h;
}

HilbertData hilbert_from_leads(const std::vector<Mono>& leads, int nvars) {
  HilbertData out;
  out.numerator = hilbert_numerator(leads, nvars);

  std::vector<long long> q = out.numerator;
  bool is_zero = q.size() == 1 && q[0] == 0;
  if (is_zero) {
    out.dim = -1;  // unit ideal: empty scheme
    out.degree = 0;
    return out;
  }

  // Peel off (1-T)^c.  (1-T) M = N  gives  M_k = N_k + M_{k-1}, with the top
  // coefficient of M vanishing exactly when N(1) = 0.
  int c = 0;
  while (std::accumulate(q.begin(), q.end(), 0ll) == 0) {
    std::vector<long long> m(q.size(), 0);
    long long carry = 0;
    for (size_t k = 0; k < q.size(); ++k) {
      carry += q[k];
      m[k] = carry;
    }
    while (m.size() > 1 && m.back() == 0) m.pop_back();
    q = std::move(m);
    ++c;
  }
  int affine_dim = nvars - c;
  out.dim = affine_dim - 1;
  out.degree = std::accumulate(q.begin(), q.end(), 0ll);
  return out;
}

}  // namespace gonalis
