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
#include <span>
#include <utility>
#include <vector>

#include "sdprob/spectral.hpp"

namespace sdprob {

// Reflection coefficients with |k| > 1 - kReflectionGate declare the system
// numerically singular.
inline constexpr double kReflectionGate = 1e-12;

// Real symmetric Toeplitz covariance built from c_0..c_n. Gamma_j denotes the
// leading j x j block (entries c_{|i-k|}), with det Gamma_0 = 1.
class ToeplitzSystem {
 public:
  explicit ToeplitzSystem(std::vector<double> coefficients);

  std::span<const double> coefficients() const { return c_; }
  /// Largest block size available: n + 1 for coefficients c_0..c_n.
  std::size_t order() const { return c_.size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return c_[i > j ? i - j : j - i];
  }

  /// Dense row-major copy of Gamma_size.
  std::vector<double> dense(std::size_t size) const;

 private:
  std::vector<double> c_;
};

// theta_sq[j-1] = det Gamma_j / det Gamma_{j-1}: the one-step prediction error
// variance of X_j given X_1..X_{j-1}. rho[j-1] = 1 / theta_sq[j-1].
struct PredictionErrorSequence {
  std::vector<double> theta_sq;
  std::vector<double> rho;
  std::vector<double> reflection;  // reflection[j-1] links orders j-1 and j; reflection[0] = 0
};

/// Levinson-Durbin recursion for the prediction error variances of
/// Gamma_1..Gamma_size (size defaults to order()). Throws NotPositiveDefinite
/// with the offending order when a reflection coefficient leaves the gate.
PredictionErrorSequence levinson_error_variances(const ToeplitzSystem& system,
                                                 std::size_t size = 0);

enum class WeylFunction { Log, Identity, Square };

struct WeylComparison {
  double eigenvalue_average = 0.0;  // (1/(n+1)) sum F(lambda_i) over Gamma_{n+1}
  double spectral_integral = 0.0;   // (1/2pi) \int F(f)
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

/// Both sides of the Szego/Weyl equidistribution identity for the
/// (n+1) x (n+1) Toeplitz matrix of f. Requires 0 < min f on the grid, n >= 4.
WeylComparison weyl_check(const SpectralDensity& f, std::size_t n, WeylFunction F);

/// det(Gamma_{n+1})^{1/(n+1)} through the Levinson prediction errors.
double determinant_root_limit(const SpectralDensity& f, std::size_t n);

/// Coefficients c_0..c_{count-1} of f: stored ones when available and long
/// enough, otherwise extracted by quadrature.
std::vector<double> toeplitz_coefficients(const SpectralDensity& f, std::size_t count);

}  // namespace sdprob
