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

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdprob/covariance.hpp"

namespace sdprob {

// Values of a truncated Fourier series in (-kClipTolerance, 0) are treated as
// truncation noise and replaced by kClipFloor before taking logarithms.
inline constexpr double kClipTolerance = 1e-9;
inline constexpr double kClipFloor = 1e-12;
inline constexpr std::size_t kDefaultTruncation = 512;

/// Poisson kernel (1 - r^2) / (1 - 2 r cos t + r^2), 0 < r < 1.
double poisson_kernel(double r, double t);

/// Spectral density of the OU increment sequence with step b:
/// 2 (1 - r^2)(1 - cos t) / (1 - 2 r cos t + r^2), r = exp(-b/2).
double ou_increment_density(double b, double t);

// Nonnegative function f on [-pi, pi] whose Fourier coefficients
// c_k = (1/2pi) \int e^{-ikt} f(t) dt are the covariances of a stationary
// sequence. Immutable; copies share state.
class SpectralDensity {
 public:
  using Function = std::function<double(double)>;

  static SpectralDensity constant(double level);
  static SpectralDensity poisson(double r);
  static SpectralDensity ou_increment(double b);
  static SpectralDensity from_callable(std::string name, Function f);

  /// f(t) = c_0 + 2 sum_{k>=1} c_k cos(kt), real symmetric coefficients.
  static SpectralDensity fourier_series(std::vector<double> c);

  /// Raw value; a truncated series may dip slightly below zero.
  double raw(double t) const;

  /// Value clipped at zero; records the clip warning when clipping happened.
  double operator()(double t) const;

  const std::string& name() const { return state_->name; }

  /// Exact coefficient c_k when the density knows its covariances in closed
  /// form (stored series, analytic family, or a model it was built from).
  bool has_exact_coefficients() const;
  double exact_coefficient(std::size_t k) const;

  /// Stored coefficients c_0..c_n (empty unless built from a series).
  std::span<const double> coefficients() const { return state_->coefficients; }
  std::size_t truncation_order() const {
    return state_->coefficients.empty() ? 0 : state_->coefficients.size() - 1;
  }

  /// True once any evaluation had to clip a negative value.
  bool clip_warning() const { return state_->clipped.load(std::memory_order_relaxed); }

 private:
  struct State {
    std::string name;
    Function f;
    std::vector<double> coefficients;
    std::function<double(std::size_t)> coefficient_fn;
    mutable std::atomic<bool> clipped{false};
  };
  explicit SpectralDensity(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  static SpectralDensity make(std::string name, Function f, std::vector<double> coefficients,
                              std::function<double(std::size_t)> coefficient_fn);

  friend SpectralDensity density_for(const CovarianceModel&, std::size_t);

  std::shared_ptr<const State> state_;
};

/// Truncated Fourier series of the integer-lag covariances of `model`.
SpectralDensity spectral_from_covariance(const CovarianceModel& model,
                                         std::size_t truncation = kDefaultTruncation);

/// Closed-form density when the model advertises one, otherwise the
/// truncated series.
SpectralDensity density_for(const CovarianceModel& model,
                            std::size_t truncation = kDefaultTruncation);

/// c_0..c_{count-1} by trapezoidal quadrature on `grid` equispaced nodes
/// (exact for trigonometric polynomials of degree < grid/2). grid = 0 picks
/// max(4096, 4 count).
std::vector<double> extract_fourier_coefficients(const SpectralDensity& f, std::size_t count,
                                                 std::size_t grid = 0);

struct GeometricMeanResult {
  double value = 0.0;         // G(f)
  double log_integral = 0.0;  // \int_{-pi}^{pi} log f
  double quadrature_error_estimate = 0.0;
  bool integrable = false;
  std::size_t clipped_nodes = 0;
};

/// G(f) = exp((1/2pi) \int log f). Midpoint panels (an even node count, so the
/// points t = 0 and t = +-pi are never sampled) on N, 2N and 4N nodes with
/// Richardson extrapolation. log f is declared non-integrable, and G = 0, when
/// both doublings decrease the integral and the total drop exceeds 1.
GeometricMeanResult geometric_mean(const SpectralDensity& f, std::size_t quadrature_points = 1024);

/// (1/2pi) \int F(f(t)) dt by the same midpoint/Richardson scheme.
double spectral_average(const SpectralDensity& f, const std::function<double(double)>& F,
                        std::size_t quadrature_points = 1024);

}  // namespace sdprob
