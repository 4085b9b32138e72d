/*
 * Copyright 2026 The sdprob Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Small dense helpers shared by the Toeplitz and matrix-diagnostic modules.

#include <cstddef>
#include <span>
#include <vector>

namespace sdprob {

// Square row-major matrix with value semantics.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const double> data() const { return a_; }

  bool is_symmetric(double tol = 0.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Determinant by Gaussian elimination with partial pivoting.
double determinant(const Matrix& a);

/// Eigenvalues of a symmetric matrix in ascending order (tridiagonalization
/// followed by implicit QR). Throws NotConverged.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Lower Cholesky factor; throws NotPositiveDefinite with the failing order.
Matrix cholesky(const Matrix& a);

}  // namespace sdprob
