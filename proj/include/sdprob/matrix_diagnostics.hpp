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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdprob/bounds.hpp"
#include "sdprob/linalg.hpp"

namespace sdprob {

struct DiagonalDominanceReport {
  bool is_dominant = false;
  std::vector<double> A;  // off-diagonal absolute row sums
  std::vector<double> m;  // |a_ii| - A_i
  std::vector<double> M;  // |a_ii| + A_i
  // max_i A_i / a_ii; only filled when the diagonal is positive.
  std::optional<double> r;
  std::optional<double> tau;  // same quantity, under the name used by the rho_j bound
};

/// Row sums and ratios. `covariance_mode` rejects a nonpositive diagonal.
DiagonalDominanceReport dominance_report(const Matrix& a, bool covariance_mode = false);

struct DeterminantBounds {
  std::optional<double> lower;  // prod m_i, only for dominant input
  double upper = 0.0;           // prod M_i
};

DeterminantBounds price_determinant_bounds(const Matrix& a);

struct Disk {
  double center = 0.0;
  double radius = 0.0;
};

struct CassiniOval {
  std::size_t i = 0;
  std::size_t j = 0;
  double radius_product = 0.0;  // A_i A_j
};

struct SpectralInclusionRegion {
  std::vector<Disk> gershgorin_disks;
  std::vector<CassiniOval> brauer_ovals;
  std::vector<double> eigenvalues;
  bool eigenvalues_contained = false;     // every eigenvalue in the disk union
  bool brauer_condition = false;          // |a_ii||a_kk| > A_i A_k for all i != k
  bool determinant_positive_certified = false;
};

/// Gershgorin disks and Brauer ovals of a symmetric matrix, checked against
/// its computed eigenvalues. `tolerance` absorbs eigensolver rounding.
SpectralInclusionRegion eigenvalue_inclusion(const Matrix& a, double tolerance = 1e-10);

/// sum_j log P{|g| <= z / (sigma_j sqrt(1 - r))}, r < 1.
BoundReport ddp_upper(std::span<const double> sigma_sq, double r, double z);

/// sum_j log P{|g| <= (z_j / sqrt(a_jj)) (1 + tau)^{(j-1)/2}}.
BoundReport kurddp_upper(const Matrix& covariance, std::span<const double> z);

/// Row-sum bracket on x^T A x:
/// sum x_i^2 (a_ii - A_i) <= x^T A x <= sum x_i^2 (a_ii + A_i).
std::pair<double, double> quadratic_form_bracket(const Matrix& a, std::span<const double> x);

/// Smallest eigenvalue of Gamma - diag((1 - r) Gamma_ii): nonnegative whenever
/// the off-diagonal row sums are at most r Gamma_ii.
double comparison_matrix_min_eigenvalue(const Matrix& covariance, double r);

}  // namespace sdprob
