#pragma once

#include <cmath>
#include <vector>

#include "jforge/symexpr/scalar_field.hpp"

namespace jforge {

inline bool is_zero_exact(double v) { return v == 0.0; }
inline bool is_zero_exact(long double v) { return v == 0.0L; }

// Exact Gauss-Jordan elimination over Q or over the rational-function field.

inline std::size_t pivot_cost(const ScalarField& f) { return f.complexity(); }
inline std::size_t pivot_cost(const Rational& r) {
  return mpz_sizeinbase(r.gmp().get_num_mpz_t(), 2) + mpz_sizeinbase(r.gmp().get_den_mpz_t(), 2);
}

template <class S>
struct RowEchelon {
  Mat<S> R;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduces the first `cols` columns (all columns by default).
template <class S>
RowEchelon<S> row_reduce(Mat<S> A, int cols = -1) {
  const int m = static_cast<int>(A.rows()), n = cols < 0 ? static_cast<int>(A.cols()) : cols;
  RowEchelon<S> out;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int r = row; r < m; ++r) {
      if (is_zero_exact(A(r, col))) continue;
      std::size_t c = pivot_cost(A(r, col));
      if (best < 0 || c < best_cost) {
        best = r;
        best_cost = c;
      }
    }
    if (best < 0) continue;
    if (best != row) A.row(best).swap(A.row(row));
    const S inv = S(1) / A(row, col);
    for (int j = 0; j < A.cols(); ++j)
      if (!is_zero_exact(A(row, j))) A(row, j) = A(row, j) * inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || is_zero_exact(A(r, col))) continue;
      const S f = A(r, col);
      for (int j = 0; j < A.cols(); ++j)
        if (!is_zero_exact(A(row, j))) A(r, j) = A(r, j) - f * A(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.R = std::move(A);
  return out;
}

template <class S>
int rank_exact(const Mat<S>& A) {
  return row_reduce(A).rank();
}

template <class S>
struct LinearSolution {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status;
  Vec<S> x;
  bool unique() const { return status == Status::Unique; }
};

template <class S>
LinearSolution<S> solve_exact(const Mat<S>& A, const Vec<S>& b) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Mat<S> aug(m, n + 1);
  aug.leftCols(n) = A;
  aug.col(n) = b;
  RowEchelon<S> e = row_reduce(aug, n);
  for (int r = e.rank(); r < m; ++r)
    if (!is_zero_exact(e.R(r, n))) return {LinearSolution<S>::Status::Inconsistent, {}};
  if (e.rank() < n) return {LinearSolution<S>::Status::Underdetermined, {}};
  Vec<S> x(n);
  for (int r = 0; r < n; ++r) x(e.pivots[static_cast<std::size_t>(r)]) = e.R(r, n);
  return {LinearSolution<S>::Status::Unique, std::move(x)};
}

// Unique solution or SingularSystem.
template <class S>
Vec<S> solve_unique(const Mat<S>& A, const Vec<S>& b, const char* what) {
  LinearSolution<S> s = solve_exact(A, b);
  if (!s.unique())
    throw SingularSystem(std::string(what) +
                         (s.status == LinearSolution<S>::Status::Inconsistent ? ": inconsistent system"
                                                                               : ": system has no unique solution"));
  return s.x;
}

template <class S>
Mat<S> inverse_exact(const Mat<S>& A, const char* what) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n) throw DomainError("inverse of a non-square matrix");
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = A;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aug(i, n + j) = S(i == j ? 1 : 0);
  RowEchelon<S> e = row_reduce(aug, n);
  if (e.rank() < n) throw SingularSystem(std::string(what) + ": matrix is singular");
  return e.R.rightCols(n);
}

// Basis of the kernel as matrix columns.
template <class S>
Mat<S> nullspace_exact(const Mat<S>& A) {
  const int n = static_cast<int>(A.cols());
  RowEchelon<S> e = row_reduce(A);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<S> K(n, n - e.rank());
  int k = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (int i = 0; i < n; ++i) K(i, k) = S(0);
    K(free, k) = S(1);
    for (int r = 0; r < e.rank(); ++r) K(e.pivots[static_cast<std::size_t>(r)], k) = -e.R(r, free);
    ++k;
  }
  return K;
}

// Pfaffian of an antisymmetric matrix by expansion along the first row.
template <class S>
S pfaffian(const Mat<S>& A) {
  const int n = static_cast<int>(A.rows());
  if (n % 2) return S(0);
  if (n == 0) return S(1);
  S acc = S(0);
  for (int j = 1; j < n; ++j) {
    if (is_zero_exact(A(0, j))) continue;
    std::vector<int> keep;
    for (int k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    Mat<S> minor(n - 2, n - 2);
    for (int a = 0; a < n - 2; ++a)
      for (int b = 0; b < n - 2; ++b) minor(a, b) = A(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
    S term = A(0, j) * pfaffian(minor);
    acc = (j % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace jforge
