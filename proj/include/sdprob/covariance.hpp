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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdprob {

enum class CovarianceKind { Ou, PoissonKernelAr1, CustomCoefficients, CustomCallable };

const char* to_string(CovarianceKind kind) noexcept;

// Closed-form spectral density of the integer-lag sequence, when one is known.
struct ClosedFormDensity {
  enum class Family { Constant, PoissonKernel, OuIncrement, BandLimited };
  Family family;
  // level for Constant, r for PoissonKernel, b for OuIncrement, cutoff for BandLimited
  double parameter;
};

// Covariance function gamma(u) of a centered stationary Gaussian process.
// Immutable; copies share the underlying evaluator.
class CovarianceModel {
 public:
  using Function = std::function<double(double)>;

  /// Ornstein-Uhlenbeck: gamma(u) = exp(-|u|/2).
  static CovarianceModel ou();

  /// gamma(u) = r^|u| for 0 < r < 1 (the KMS / AR(1) family).
  static CovarianceModel poisson_kernel_ar1(double r);

  /// Explicit coefficients c_0..c_m at integer lags; zero beyond m.
  /// Non-integer lags are rejected.
  static CovarianceModel from_coefficients(std::vector<double> c);

  /// Arbitrary even function; `integer_lags_only` restricts evaluation to
  /// integer lags (sequences that are not sampled from a continuous process).
  static CovarianceModel from_callable(std::string name, Function gamma,
                                       bool integer_lags_only = false,
                                       std::optional<ClosedFormDensity> density = {});

  double operator()(double u) const;
  double variance() const { return variance_; }
  CovarianceKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool integer_lags_only() const { return integer_lags_only_; }
  const std::optional<ClosedFormDensity>& closed_form_density() const { return density_; }

  // Present for ou and poisson_kernel_ar1: gamma(u) = r^|u| with r = exp(-1/2) for ou.
  std::optional<double> ar1_coefficient() const { return ar1_; }

  const std::vector<double>* coefficients() const {
    return coeffs_ ? coeffs_.get() : nullptr;
  }

 private:
  CovarianceModel() = default;

  CovarianceKind kind_ = CovarianceKind::CustomCallable;
  std::string name_;
  Function gamma_;
  double variance_ = 1.0;
  bool integer_lags_only_ = false;
  std::optional<ClosedFormDensity> density_;
  std::optional<double> ar1_;
  std::shared_ptr<const std::vector<double>> coeffs_;
};

/// Covariance of the increment sequence xi_b(j) = X(jb) - X((j-1)b) at lag u:
/// 2(1 - gamma(b)) for u = 0, 2 gamma(ub) - gamma((u-1)b) - gamma((u+1)b) otherwise.
double increment_covariance(const CovarianceModel& model, double b, long long u);

/// The increment sequence of `base` sampled with step b, as an integer-lag model.
CovarianceModel increment_model(const CovarianceModel& base, double b);

// Named families used by configs and tests.
CovarianceModel gaussian_covariance(double scale = 1.0);         // exp(-u^2/(2 s^2))
CovarianceModel cauchy_covariance(double scale = 1.0);           // 1/(1 + (u/s)^2)
CovarianceModel damped_cosine_covariance(double decay, double frequency);  // e^{-decay|u|} cos(frequency u)
CovarianceModel iid_covariance(double variance = 1.0);

// Unit-variance sequence whose density is pi/w on |t| < w and zero elsewhere:
// c_k = sin(k w) / (k w). Its log-density is not integrable (G = 0).
CovarianceModel bandlimited_covariance(double cutoff);

}  // namespace sdprob
