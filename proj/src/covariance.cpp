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
#include "sdprob/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numbers>
#include <utility>

#include "sdprob/errors.hpp"

namespace sdprob {

const char* to_string(CovarianceKind kind) noexcept {
  switch (kind) {
    case CovarianceKind::Ou: return "ou";
    case CovarianceKind::PoissonKernelAr1: return "poisson-kernel-ar1";
    case CovarianceKind::CustomCoefficients: return "custom-coefficients";
    case CovarianceKind::CustomCallable: return "custom-callable";
  }
  return "unknown";
}

namespace {

long long integer_lag(double u) {
  const double k = std::round(u);
  if (std::abs(u - k) > 1e-9 * std::max(1.0, std::abs(u))) {
    fail(ErrorCode::Domain, "lag " + std::to_string(u) + " is not an integer for an integer-lag model");
  }
  return static_cast<long long>(std::abs(k));
}

}  // namespace

CovarianceModel CovarianceModel::ou() {
  CovarianceModel m;
  m.kind_ = CovarianceKind::Ou;
  m.name_ = "ou";
  m.gamma_ = [](double u) { return std::exp(-0.5 * std::abs(u)); };
  m.variance_ = 1.0;
  m.ar1_ = std::exp(-0.5);
  m.density_ = ClosedFormDensity{ClosedFormDensity::Family::PoissonKernel, *m.ar1_};
  return m;
}

CovarianceModel CovarianceModel::poisson_kernel_ar1(double r) {
  require(r > 0.0 && r < 1.0, "poisson_kernel_ar1: r must lie in (0, 1)");
  CovarianceModel m;
  m.kind_ = CovarianceKind::PoissonKernelAr1;
  m.name_ = "poisson_kernel";
  const double log_r = std::log(r);
  m.gamma_ = [log_r](double u) { return std::exp(log_r * std::abs(u)); };
  m.variance_ = 1.0;
  m.ar1_ = r;
  m.density_ = ClosedFormDensity{ClosedFormDensity::Family::PoissonKernel, r};
  return m;
}

CovarianceModel CovarianceModel::from_coefficients(std::vector<double> c) {
  require(!c.empty(), "from_coefficients: empty coefficient list");
  require(c[0] > 0.0 && std::isfinite(c[0]), "from_coefficients: c_0 must be positive");
  for (double v : c) require(std::isfinite(v), "from_coefficients: non-finite coefficient");
  CovarianceModel m;
  m.kind_ = CovarianceKind::CustomCoefficients;
  m.name_ = "coefficients";
  m.coeffs_ = std::make_shared<const std::vector<double>>(std::move(c));
  m.variance_ = (*m.coeffs_)[0];
  m.integer_lags_only_ = true;
  auto coeffs = m.coeffs_;
  m.gamma_ = [coeffs](double u) {
    const auto k = static_cast<std::size_t>(integer_lag(u));
    return k < coeffs->size() ? (*coeffs)[k] : 0.0;
  };
  if (m.coeffs_->size() == 1) {
    m.density_ = ClosedFormDensity{ClosedFormDensity::Family::Constant, m.variance_};
  }
  return m;
}

CovarianceModel CovarianceModel::from_callable(std::string name, Function gamma,
                                               bool integer_lags_only,
                                               std::optional<ClosedFormDensity> density) {
  require(static_cast<bool>(gamma), "from_callable: empty function");
  CovarianceModel m;
  m.kind_ = CovarianceKind::CustomCallable;
  m.name_ = std::move(name);
  if (integer_lags_only) {
    m.gamma_ = [g = std::move(gamma)](double u) {
      return g(static_cast<double>(integer_lag(u)));
    };
  } else {
    m.gamma_ = [g = std::move(gamma)](double u) { return g(std::abs(u)); };
  }
  m.integer_lags_only_ = integer_lags_only;
  m.density_ = density;
  m.variance_ = m.gamma_(0.0);
  require(m.variance_ > 0.0 && std::isfinite(m.variance_),
          "from_callable: gamma(0) must be positive");
  return m;
}

double CovarianceModel::operator()(double u) const { return gamma_(u); }

double increment_covariance(const CovarianceModel& model, double b, long long u) {
  require(b > 0.0, "increment_covariance: b must be positive");
  require(u >= 0, "increment_covariance: lag must be nonnegative");
  if (u == 0) return 2.0 * (model.variance() - model(b));
  const double ub = static_cast<double>(u) * b;
  return 2.0 * model(ub) - model(ub - b) - model(ub + b);
}

CovarianceModel increment_model(const CovarianceModel& base, double b) {
  require(b > 0.0, "increment_model: b must be positive");
  std::optional<ClosedFormDensity> density;
  if (auto r = base.ar1_coefficient()) {
    // r^|u| = exp(-|u| / 2 * (-2 log r)): an OU process run at speed -2 log r.
    density = ClosedFormDensity{ClosedFormDensity::Family::OuIncrement, -2.0 * std::log(*r) * b};
  }
  auto gamma = [base, b](double u) {
    return increment_covariance(base, b, static_cast<long long>(std::llround(std::abs(u))));
  };
  return CovarianceModel::from_callable("increments(" + base.name() + ")", std::move(gamma),
                                        /*integer_lags_only=*/true, density);
}

CovarianceModel gaussian_covariance(double scale) {
  require(scale > 0.0, "gaussian_covariance: scale must be positive");
  return CovarianceModel::from_callable("gaussian", [scale](double u) {
    const double v = u / scale;
    return std::exp(-0.5 * v * v);
  });
}

CovarianceModel cauchy_covariance(double scale) {
  require(scale > 0.0, "cauchy_covariance: scale must be positive");
  return CovarianceModel::from_callable("cauchy", [scale](double u) {
    const double v = u / scale;
    return 1.0 / (1.0 + v * v);
  });
}

CovarianceModel damped_cosine_covariance(double decay, double frequency) {
  require(decay > 0.0, "damped_cosine_covariance: decay must be positive");
  return CovarianceModel::from_callable("damped_cosine", [decay, frequency](double u) {
    return std::exp(-decay * u) * std::cos(frequency * u);
  });
}

CovarianceModel iid_covariance(double variance) {
  require(variance > 0.0, "iid_covariance: variance must be positive");
  return CovarianceModel::from_coefficients({variance});
}

CovarianceModel bandlimited_covariance(double cutoff) {
  require(cutoff > 0.0 && cutoff < std::numbers::pi, "bandlimited_covariance: cutoff must lie in (0, pi)");
  return CovarianceModel::from_callable(
      "bandlimited",
      [cutoff](double k) { return k == 0.0 ? 1.0 : std::sin(k * cutoff) / (k * cutoff); },
      /*integer_lags_only=*/true,
      ClosedFormDensity{ClosedFormDensity::Family::BandLimited, cutoff});
}

}  // namespace sdprob
