#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace polycalc {

// Dense linear algebra + a tiny LP solver.  The LPs in this library have at
// most 4 variables (incenter coordinates plus a radius), so enumerating basic
// solutions is both simple and free of simplex degeneracy issues.

namespace detail {

// Solves M x = rhs in place by Gaussian elimination with partial pivoting.
// Returns false when the matrix is numerically singular.
inline bool solve_square(std::vector<std::vector<double>> M, std::vector<double> rhs,
                         std::vector<double>& out) {
  const int k = static_cast<int>(M.size());
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
    double scale = 0.0;
    for (int j = col; j < k; ++j) scale = std::max(scale, std::fabs(M[piv][j]));
    if (std::fabs(M[piv][col]) < 1e-13 * std::max(1.0, scale)) return false;
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < k; ++r) {
      double f = M[r][col] / M[col][col];
      if (f == 0.0) continue;
      for (int j = col; j < k; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  out.assign(static_cast<size_t>(k), 0.0);
  for (int r = k - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int j = r + 1; j < k; ++j) s -= M[r][j] * out[static_cast<size_t>(j)];
    out[static_cast<size_t>(r)] = s / M[r][r];
  }
  return true;
}

inline bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<size_t>(i)] < m - (k - i)) {
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

struct LpSolution {
  bool feasible = false;
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> x;
  std::vector<int> basis;  // indices of the active rows at the optimum
};

// Maximizes c.x subject to A x <= b (x free).  Assumes the feasible set is
// pointed and the objective bounded, which holds for the inradius/Chebyshev
// programs solved here; every optimum is then attained at a basic solution.
inline LpSolution lp_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                              const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int d = static_cast<int>(c.size());
  LpSolution best;
  if (m < d) return best;

  double bscale = 1.0;
  for (double v : b) bscale = std::max(bscale, std::fabs(v));
  const double feas_tol = 1e-9 * bscale;

  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;

  std::vector<std::vector<double>> M(static_cast<size_t>(d));
  std::vector<double> rhs(static_cast<size_t>(d)), x;
  do {
    for (int i = 0; i < d; ++i) {
      M[static_cast<size_t>(i)] = A[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      rhs[static_cast<size_t>(i)] = b[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    }
    if (!detail::solve_square(M, rhs, x)) continue;
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      double lhs = 0.0;
      for (int j = 0; j < d; ++j) lhs += A[static_cast<size_t>(r)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
      if (lhs > b[static_cast<size_t>(r)] + feas_tol) ok = false;
    }
    if (!ok) continue;
    double val = 0.0;
    for (int j = 0; j < d; ++j) val += c[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    if (!best.feasible || val > best.value) {
      best.feasible = true;
      best.value = val;
      best.x = x;
      best.basis = idx;
    }
  } while (detail::next_combination(idx, m));

  return best;
}

}  // namespace polycalc
