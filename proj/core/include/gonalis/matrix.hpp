#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "gonalis/fp.hpp"

namespace gonalis {

// Dense row-major matrix over a field object K (Fp, RatField, Ext<...>).
template <class K>
class Mat {
public:
  using elem = typename K::elem;

  Mat() : nr_(0), nc_(0) {}
  Mat(int nr, int nc, const K& F) : nr_(nr), nc_(nc), a_(static_cast<size_t>(nr) * nc, F.zero()) {}

  static Mat identity(int n, const K& F) {
    Mat m(n, n, F);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
  }

  int rows() const { return nr_; }
  int cols() const { return nc_; }
  elem& at(int i, int j) { return a_[static_cast<size_t>(i) * nc_ + j]; }
  const elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * nc_ + j]; }
  elem* row(int i) { return a_.data() + static_cast<size_t>(i) * nc_; }
  const elem* row(int i) const { return a_.data() + static_cast<size_t>(i) * nc_; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    elem* a = row(i);
    elem* b = row(j);
    for (int k = 0; k < nc_; ++k) std::swap(a[k], b[k]);
  }

  Mat transposed(const K& F) const {
    Mat t(nc_, nr_, F);
    for (int i = 0; i < nr_; ++i)
      for (int j = 0; j < nc_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

private:
  int nr_, nc_;
  std::vector<elem> a_;
};

// y += c * x over GF(p), Shoup-preconditioned so the inner loop has no
// division.  Requires p < 2^31 and all inputs reduced mod p.
inline void fp_axpy(std::uint32_t p, std::uint32_t c, const std::uint32_t* x, std::uint32_t* y,
                    int n) {
  if (c == 0) return;
  const std::uint64_t cshoup =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) << 64) / p);
  for (int i = 0; i < n; ++i) {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(cshoup) * x[i]) >> 64);
    std::uint64_t t = static_cast<std::uint64_t>(c) * x[i] - q * p;  // in [0, 2p)
    if (t >= p) t -= p;
    std::uint32_t s = y[i] + static_cast<std::uint32_t>(t);
    y[i] = s >= p ? s - p : s;
  }
}

namespace detail {

// Eliminates column `col` from row j using normalized pivot row i (pivot value 1 at `col`),
// touching columns col.. only.
template <class K>
void eliminate_row(const K& F, Mat<K>& M, int i, int j, int col) {
  using elem = typename K::elem;
  elem factor = M.at(j, col);
  if (F.is_zero(factor)) return;
  const int nc = M.cols();
  if constexpr (std::is_same_v<K, Fp>) {
    std::uint32_t c = F.neg(factor);
    fp_axpy(F.modulus(), c, M.row(i) + col, M.row(j) + col, nc - col);
  } else {
    const elem* pi = M.row(i);
    elem* pj = M.row(j);
    for (int k = col; k < nc; ++k)
      pj[k] = F.sub(pj[k], F.mul(factor, pi[k]));
  }
}

}  // namespace detail

// In-place reduced row echelon form.  Returns the pivot column indices in order.
template <class K>
std::vector<int> rref(const K& F, Mat<K>& M) {
  std::vector<int> pivots;
  int r = 0;
  const int nr = M.rows(), nc = M.cols();
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!F.is_zero(M.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    M.swap_rows(r, piv);
    // Normalize pivot row.
    auto d = F.inv(M.at(r, col));
    for (int k = col; k < nc; ++k) M.at(r, k) = F.mul(M.at(r, k), d);
    for (int i = 0; i < nr; ++i)
      if (i != r) detail::eliminate_row(F, M, r, i, col);
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

// Forward-only elimination; cheaper than rref when only the rank is needed.
template <class K>
int rank_destructive(const K& F, Mat<K>& M) {
  int r = 0;
  const int nr = M.rows(), nc = M.cols();
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!F.is_zero(M.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    M.swap_rows(r, piv);
    auto d = F.inv(M.at(r, col));
    for (int k = col; k < nc; ++k) M.at(r, k) = F.mul(M.at(r, k), d);
    for (int i = r + 1; i < nr; ++i) detail::eliminate_row(F, M, r, i, col);
    ++r;
  }
  return r;
}

template <class K>
int rank(const K& F, Mat<K> M) {
  return rank_destructive(F, M);
}

// Kernel of the linear map represented by M: columns of the result form a
// basis of { v : M v = 0 }.
template <class K>
Mat<K> nullspace(const K& F, Mat<K> M) {
  const int nc = M.cols();
  std::vector<int> pivots = rref(F, M);
  std::vector<bool> is_pivot(nc, false);
  for (int c : pivots) is_pivot[c] = true;
  const int k = nc - static_cast<int>(pivots.size());
  Mat<K> ker(nc, k, F);
  int out = 0;
  for (int free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    ker.at(free, out) = F.one();
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      ker.at(pivots[pr], out) = F.neg(M.at(static_cast<int>(pr), free));
    ++out;
  }
  return ker;
}

// Solves A x = b; returns one solution or nullopt.
template <class K>
std::optional<std::vector<typename K::elem>> solve(const K& F, const Mat<K>& A,
                                                   const std::vector<typename K::elem>& b) {
  assert(static_cast<int>(b.size()) == A.rows());
  Mat<K> aug(A.rows(), A.cols() + 1, F);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  std::vector<typename K::elem> x(A.cols(), F.zero());
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), A.cols());
  return x;
}

template <class K>
Mat<K> matmul(const K& F, const Mat<K>& A, const Mat<K>& B) {
  assert(A.cols() == B.rows());
  Mat<K> C(A.rows(), B.cols(), F);
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const auto& a = A.at(i, k);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < B.cols(); ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
    }
  return C;
}

template <class K>
std::optional<Mat<K>> inverse(const K& F, const Mat<K>& A) {
  assert(A.rows() == A.cols());
  const int n = A.rows();
  Mat<K> aug(n, 2 * n, F);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  auto piv = rref(F, aug);
  if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
  Mat<K> inv(n, n, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Incrementally maintained reduced row space.  insert() reduces the vector
// against the stored basis; if a new pivot survives, the basis is extended
// (and kept fully reduced).  reduce() computes the residual without storing.
// This is the membership/quotient workhorse used all over the kernel and
// annihilator computations.
template <class K>
class RowSpace {
public:
  using elem = typename K::elem;

  explicit RowSpace(int ncols, const K& F) : F_(&F), nc_(ncols) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return nc_; }

  // Reduces v in place against the basis.
  void reduce(std::vector<elem>& v) const {
    const K& F = *F_;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const elem& c = v[pivots_[r]];
      if (F.is_zero(c)) continue;
      axpy_neg(v, rows_[r], c);
    }
  }

  // Returns true (and stores) if v is independent of the current basis.
  bool insert(std::vector<elem> v) {
    const K& F = *F_;
    reduce(v);
    int piv = -1;
    for (int j = 0; j < nc_; ++j)
      if (!F.is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    elem d = F.inv(v[piv]);
    for (int j = piv; j < nc_; ++j) v[j] = F.mul(v[j], d);
    // Back-eliminate the new pivot from stored rows to stay fully reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
      const elem& c = rows_[r][piv];
      if (!F.is_zero(c)) axpy_neg(rows_[r], v, c);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<std::vector<elem>>& basis_rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

private:
  void axpy_neg(std::vector<elem>& y, const std::vector<elem>& x, const elem& c) const {
    const K& F = *F_;
    if constexpr (std::is_same_v<K, Fp>) {
      fp_axpy(F.modulus(), F.neg(c), x.data(), y.data(), nc_);
    } else {
      for (int j = 0; j < nc_; ++j) y[j] = F.sub(y[j], F.mul(c, x[j]));
    }
  }

  const K* F_;
  int nc_;
  std::vector<std::vector<elem>> rows_;
  std::vector<int> pivots_;
};

}  // namespace gonalis
