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
#include "sdprob/matrix_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdprob/errors.hpp"
#include "sdprob/gaussian.hpp"

namespace sdprob {

DiagonalDominanceReport dominance_report(const Matrix& a, bool covariance_mode) {
  const std::size_t n = a.size();
  require(n >= 1, "dominance_report: empty matrix");
  DiagonalDominanceReport out;
  out.A.resize(n);
  out.m.resize(n);
  out.M.resize(n);
  bool positive_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s += std::abs(a(i, j));
    out.A[i] = s;
    out.m[i] = std::abs(a(i, i)) - s;
    out.M[i] = std::abs(a(i, i)) + s;
    if (!(a(i, i) > 0.0)) {
      positive_diagonal = false;
      if (covariance_mode) {
        fail(ErrorCode::Domain, "dominance_report: diagonal entry " + std::to_string(i) +
                                    " is not positive, so the matrix is not a covariance");
      }
    }
  }
  out.is_dominant = std::all_of(out.m.begin(), out.m.end(), [](double v) { return v > 0.0; });
  if (positive_diagonal) {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, out.A[i] / a(i, i));
    out.r = r;
    out.tau = r;
  }
  return out;
}

DeterminantBounds price_determinant_bounds(const Matrix& a) {
  const auto d = dominance_report(a);
  DeterminantBounds out;
  out.upper = 1.0;
  for (double v : d.M) out.upper *= v;
  if (d.is_dominant) {
    double lo = 1.0;
    for (double v : d.m) lo *= v;
    out.lower = lo;
  }
  return out;
}

SpectralInclusionRegion eigenvalue_inclusion(const Matrix& a, double tolerance) {
  const auto d = dominance_report(a);
  const std::size_t n = a.size();
  SpectralInclusionRegion out;
  out.gershgorin_disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.gershgorin_disks.push_back({a(i, i), d.A[i]});

  out.brauer_condition = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.brauer_ovals.push_back({i, j, d.A[i] * d.A[j]});
      if (!(std::abs(a(i, i)) * std::abs(a(j, j)) > d.A[i] * d.A[j])) out.brauer_condition = false;
    }
  }
  bool positive_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) positive_diagonal = positive_diagonal && a(i, i) > 0.0;
  // For a symmetric matrix with positive diagonal the ovals cannot reach 0 while
  // the off-diagonal part is scaled from 0 to 1, so every eigenvalue stays positive.
  out.determinant_positive_certified = out.brauer_condition && positive_diagonal;

  out.eigenvalues = symmetric_eigenvalues(a);
  out.eigenvalues_contained = std::all_of(
      out.eigenvalues.begin(), out.eigenvalues.end(), [&](double lambda) {
        return std::any_of(out.gershgorin_disks.begin(), out.gershgorin_disks.end(),
                           [&](const Disk& disk) {
                             return std::abs(lambda - disk.center) <= disk.radius + tolerance;
                           });
      });
  return out;
}

BoundReport ddp_upper(std::span<const double> sigma_sq, double r, double z) {
  require(!sigma_sq.empty(), "ddp_upper: no variances given");
  require(r >= 0.0 && r < 1.0, "ddp_upper: r must lie in [0, 1)", ErrorCode::Domain);
  require(z > 0.0, "ddp_upper: z must be positive");
  const double scale = std::sqrt(1.0 - r);
  double s = 0.0;
  for (double v : sigma_sq) {
    require(v > 0.0, "ddp_upper: variances must be positive");
    s += log_prob_abs_le(z / (std::sqrt(v) * scale));
  }
  return make_bound(BoundMethod::DdpUpper, s,
                    {{"n", static_cast<double>(sigma_sq.size())}, {"r", r}, {"z", z}},
                    {{"r_below_one", true}});
}

BoundReport kurddp_upper(const Matrix& covariance, std::span<const double> z) {
  const std::size_t n = covariance.size();
  require(z.size() == n || z.size() == 1,
          "kurddp_upper: z has " + std::to_string(z.size()) + " entries, expected 1 or " +
              std::to_string(n));
  const auto d = dominance_report(covariance, true);
  require(d.is_dominant && *d.tau < 1.0,
          "kurddp_upper: covariance does not have a dominant diagonal (tau = " +
              std::to_string(*d.tau) + ")",
          ErrorCode::Domain);
  const double tau = *d.tau;
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double zj = z.size() == 1 ? z[0] : z[j];
    require(zj > 0.0, "kurddp_upper: thresholds must be positive");
    const double x = zj / std::sqrt(covariance(j, j)) *
                     std::pow(1.0 + tau, 0.5 * static_cast<double>(j));
    s += log_prob_abs_le(x);
  }
  return make_bound(BoundMethod::KurddpUpper, s, {{"n", static_cast<double>(n)}, {"tau", tau}},
                    {{"dominant_diagonal", true}});
}

std::pair<double, double> quadratic_form_bracket(const Matrix& a, std::span<const double> x) {
  require(x.size() == a.size(), "quadratic_form_bracket: dimension mismatch");
  const auto d = dominance_report(a);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x2 = x[i] * x[i];
    lo += x2 * (a(i, i) - d.A[i]);
    hi += x2 * (a(i, i) + d.A[i]);
  }
  return {lo, hi};
}

double comparison_matrix_min_eigenvalue(const Matrix& covariance, double r) {
  require(r >= 0.0 && r < 1.0, "comparison_matrix_min_eigenvalue: r must lie in [0, 1)");
  Matrix diff = covariance;
  for (std::size_t i = 0; i < diff.size(); ++i) diff(i, i) -= (1.0 - r) * covariance(i, i);
  return symmetric_eigenvalues(diff).front();
}

}  // namespace sdprob
