#include "gonalis/resolution.hpp"

#include <sstream>

namespace gonalis {

long long free_module_hf(const FreeModule& fm, int nvars, int d) {
  long long s = 0;
  for (int e : fm.degrees)
    if (d - e >= 0) s += poly_dim(nvars, d - e);
  return s;
}

long long BettiTable::at(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(steps.size())) return 0;
  auto it = steps[i].find(j);
  return it == steps[i].end() ? 0 : it->second;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < steps.size(); ++i)
    for (const auto& [j, c] : steps[i])
      os << "beta(" << i << "," << j << ") = " << c << "\n";
  return os.str();
}

bool euler_consistent(const BettiTable& t, const std::vector<long long>& numerator) {
  std::vector<long long> acc(numerator.size(), 0);
  for (size_t i = 0; i < t.steps.size(); ++i)
    for (const auto& [j, c] : t.steps[i]) {
      if (j < 0) return false;
      if (j >= static_cast<int>(acc.size())) acc.resize(j + 1, 0);
      acc[j] += (i % 2 == 0) ? c : -c;
    }
  std::vector<long long> num = numerator;
  const size_t len = std::max(acc.size(), num.size());
  acc.resize(len, 0);
  num.resize(len, 0);
  return acc == num;
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> all;
  if (k < 0 || k > n) return all;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    all.push_back(s);
    int i = 0;
    while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
    if (i == k) break;
    ++s[i];
    for (int q = 0; q < i; ++q) s[q] = q;
  }
  return all;
}

long long colex_rank(const std::vector<int>& sorted_subset) {
  long long r = 0;
  for (size_t i = 0; i < sorted_subset.size(); ++i)
    r += binomial(sorted_subset[i], static_cast<long long>(i) + 1);
  return r;
}

}  // namespace gonalis
