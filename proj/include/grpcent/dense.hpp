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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace grpcent {

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<double> operator*(const Matrix& a,
                                       std::span<const double> x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// LU factorization with partial (row) pivoting, PA = LU, stored in place.
/// Throws NumericalError when a pivot falls below a relative threshold.
class LuFactorization {
 public:
  explicit LuFactorization(Matrix a);

  std::size_t size() const noexcept { return lu_.rows(); }

  std::vector<double> solve(std::span<const double> b) const;
  Matrix inverse() const;

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

/// Solves Ax = b by LU with iterative refinement until the max-norm
/// residual is below `tol` (or refinement stops improving). Throws
/// NumericalError when the final residual is still above `tol`.
std::vector<double> solve_refined(const Matrix& a, std::span<const double> b,
                                  double tol = 1e-10);

/// Inverse of A refined until max|A·X − I| < tol; throws NumericalError
/// otherwise.
Matrix inverse_refined(const Matrix& a, double tol = 1e-8);

}  // namespace grpcent
