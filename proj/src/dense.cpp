// Copyright 2026 The grpcent Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grpcent/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "grpcent/error.hpp"

namespace grpcent {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw NumericalError("matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols_ != x.size()) throw NumericalError("matrix shape mismatch");
  std::vector<double> y(a.rows_, 0.0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto r = a.row(i);
    y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
  }
  return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw NumericalError("matrix shape mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

LuFactorization::LuFactorization(Matrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw NumericalError("LU of a non-square matrix");
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});

  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(lu_(i, j)));
  const double tiny =
      std::max(scale, 1.0) * static_cast<double>(n) *
      std::numeric_limits<double>::epsilon();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    }
    if (best <= tiny)
      throw NumericalError("singular matrix in LU factorization (column " +
                           std::to_string(k) + ")");
    if (p != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
      std::swap(perm_[k], perm_[p]);
    }
    const double pivot = lu_(k, k);
    auto rk = lu_.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto ri = lu_.row(i);
      const double f = ri[k] / pivot;
      ri[k] = f;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw NumericalError("right-hand side size mismatch");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    auto r = lu_.row(i);
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= r[j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    auto r = lu_.row(i);
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= r[j] * x[j];
    x[i] = s / r[i];
  }
  return x;
}

Matrix LuFactorization::inverse() const {
  const std::size_t n = size();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    auto col = solve(e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

namespace {

double max_abs(std::span<const double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Matrix& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, max_abs(a.row(i)));
  return m;
}

constexpr int kMaxRefinements = 4;

}  // namespace

std::vector<double> solve_refined(const Matrix& a, std::span<const double> b,
                                  double tol) {
  LuFactorization lu(a);
  auto x = lu.solve(b);
  const double anorm = max_abs(a);
  const double bnorm = max_abs(b);
  auto residual = [&](std::span<const double> xs, std::vector<double>& r) {
    r = a * xs;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    return max_abs(r) / (anorm * max_abs(xs) + bnorm);
  };
  std::vector<double> r;
  double rel = residual(x, r);
  for (int it = 0; it < kMaxRefinements && rel > tol * 1e-3; ++it) {
    auto dx = lu.solve(r);
    std::vector<double> cand(x);
    for (std::size_t i = 0; i < x.size(); ++i) cand[i] += dx[i];
    std::vector<double> rc;
    double rel_c = residual(cand, rc);
    if (!(rel_c < rel)) break;
    x.swap(cand);
    r.swap(rc);
    rel = rel_c;
  }
  if (!(rel <= tol))
    throw NumericalError("linear solve residual " + std::to_string(rel) +
                         " above threshold");
  return x;
}

Matrix inverse_refined(const Matrix& a, double tol) {
  LuFactorization lu(a);
  Matrix x = lu.inverse();
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(n);
  double res = max_abs_diff(a * x, id);
  for (int it = 0; it < kMaxRefinements && res > tol * 1e-3; ++it) {
    // X <- X + A^{-1}(I - A X), applied column by column.
    Matrix r = a * x;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = id(i, j) - r(i, j);
    Matrix cand = x;
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = r(i, j);
      auto d = lu.solve(col);
      for (std::size_t i = 0; i < n; ++i) cand(i, j) += d[i];
    }
    double res_c = max_abs_diff(a * cand, id);
    if (!(res_c < res)) break;
    x = std::move(cand);
    res = res_c;
  }
  if (!(res < tol))
    throw NumericalError("inverse residual " + std::to_string(res) +
                         " above threshold");
  return x;
}

}  // namespace grpcent
