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
#include "sdprob/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdprob/errors.hpp"
#include "sdprob/linalg.hpp"

namespace sdprob {

ToeplitzSystem::ToeplitzSystem(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  require(!c_.empty(), "ToeplitzSystem: need at least c_0");
  for (double v : c_) require(std::isfinite(v), "ToeplitzSystem: non-finite coefficient");
}

std::vector<double> ToeplitzSystem::dense(std::size_t size) const {
  require(size <= order(), "ToeplitzSystem::dense: size exceeds order");
  std::vector<double> out(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out[i * size + j] = (*this)(i, j);
  return out;
}

PredictionErrorSequence levinson_error_variances(const ToeplitzSystem& system, std::size_t size) {
  const auto c = system.coefficients();
  const std::size_t n = size ? size : system.order();
  require(n <= system.order(), "levinson: size " + std::to_string(n) + " exceeds order " +
                                   std::to_string(system.order()));
  if (!(c[0] > 0.0)) throw NotPositiveDefinite(1, "levinson: c_0 must be positive");

  PredictionErrorSequence out;
  out.theta_sq.reserve(n);
  out.reflection.reserve(n);
  out.theta_sq.push_back(c[0]);
  out.reflection.push_back(0.0);

  // a holds the forward predictor of the current order: X_m ~ sum a_i X_{m-i}.
  std::vector<double> a, prev;
  double err = c[0];
  for (std::size_t m = 1; m < n; ++m) {
    double acc = c[m];
    for (std::size_t i = 1; i < m; ++i) acc -= a[i - 1] * c[m - i];
    const double k = acc / err;
    if (!(std::abs(k) < 1.0 - kReflectionGate)) {
      throw NotPositiveDefinite(m + 1, "levinson: reflection coefficient " + std::to_string(k) +
                                           " at order " + std::to_string(m + 1) +
                                           " leaves the unit interval");
    }
    prev = a;
    a.resize(m);
    for (std::size_t i = 1; i < m; ++i) a[i - 1] = prev[i - 1] - k * prev[m - i - 1];
    a[m - 1] = k;
    err *= (1.0 - k) * (1.0 + k);
    out.theta_sq.push_back(err);
    out.reflection.push_back(k);
  }
  out.rho.resize(n);
  std::transform(out.theta_sq.begin(), out.theta_sq.end(), out.rho.begin(),
                 [](double t) { return 1.0 / t; });
  return out;
}

std::vector<double> toeplitz_coefficients(const SpectralDensity& f, std::size_t count) {
  require(count >= 1, "toeplitz_coefficients: count must be positive");
  std::vector<double> c(count);
  if (f.has_exact_coefficients()) {
    for (std::size_t k = 0; k < count; ++k) c[k] = f.exact_coefficient(k);
    return c;
  }
  return extract_fourier_coefficients(f, count);
}

WeylComparison weyl_check(const SpectralDensity& f, std::size_t n, WeylFunction F) {
  require(n >= 4, "weyl_check: n must be at least 4");
  const std::size_t size = n + 1;
  const ToeplitzSystem system(toeplitz_coefficients(f, size));
  const auto eig = symmetric_eigenvalues(Matrix(size, system.dense(size)));

  auto apply = [F](double x) {
    switch (F) {
      case WeylFunction::Log: return std::log(x);
      case WeylFunction::Identity: return x;
      case WeylFunction::Square: return x * x;
    }
    return x;
  };

  WeylComparison out;
  out.min_eigenvalue = eig.front();
  out.max_eigenvalue = eig.back();
  if (F == WeylFunction::Log) {
    require(out.min_eigenvalue > 0.0, "weyl_check: Toeplitz matrix is not positive definite",
            ErrorCode::Domain);
  }
  double s = 0.0;
  for (double l : eig) s += apply(l);
  out.eigenvalue_average = s / static_cast<double>(size);

  if (F == WeylFunction::Log) {
    const auto g = geometric_mean(f);
    require(g.integrable, "weyl_check: log f is not integrable", ErrorCode::Domain);
    out.spectral_integral = std::log(g.value);
  } else {
    out.spectral_integral = spectral_average(f, apply);
  }
  return out;
}

double determinant_root_limit(const SpectralDensity& f, std::size_t n) {
  const std::size_t size = n + 1;
  const ToeplitzSystem system(toeplitz_coefficients(f, size));
  const auto pe = levinson_error_variances(system);
  double log_det = 0.0;
  for (double t : pe.theta_sq) log_det += std::log(t);
  return std::exp(log_det / static_cast<double>(size));
}

}  // namespace sdprob
