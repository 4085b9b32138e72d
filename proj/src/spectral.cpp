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
#include "sdprob/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "sdprob/errors.hpp"

namespace sdprob {

namespace {

constexpr double kPi = std::numbers::pi;

double ou_increment_r(double b) { return std::exp(-0.5 * b); }

}  // namespace

double poisson_kernel(double r, double t) {
  require(r > 0.0 && r < 1.0, "poisson_kernel: r must lie in (0, 1)");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(t) + r * r);
}

double ou_increment_density(double b, double t) {
  require(b > 0.0, "ou_increment_density: b must be positive");
  const double r = ou_increment_r(b);
  // 1 - cos t written as 2 sin^2(t/2) keeps relative accuracy near t = 0.
  const double s = std::sin(0.5 * t);
  return 2.0 * (1.0 - r * r) * (2.0 * s * s) / (1.0 - 2.0 * r * std::cos(t) + r * r);
}

// ---------------------------------------------------------------------------

SpectralDensity SpectralDensity::make(std::string name, Function f,
                                      std::vector<double> coefficients,
                                      std::function<double(std::size_t)> coefficient_fn) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->f = std::move(f);
  s->coefficients = std::move(coefficients);
  s->coefficient_fn = std::move(coefficient_fn);
  return SpectralDensity(std::move(s));
}

SpectralDensity SpectralDensity::constant(double level) {
  require(level > 0.0, "constant density: level must be positive");
  return make("constant", [level](double) { return level; }, {},
              [level](std::size_t k) { return k == 0 ? level : 0.0; });
}

SpectralDensity SpectralDensity::poisson(double r) {
  require(r > 0.0 && r < 1.0, "poisson density: r must lie in (0, 1)");
  return make("poisson_kernel", [r](double t) { return poisson_kernel(r, t); }, {},
              [r](std::size_t k) { return std::pow(r, static_cast<double>(k)); });
}

SpectralDensity SpectralDensity::ou_increment(double b) {
  require(b > 0.0, "ou increment density: b must be positive");
  const double r = ou_increment_r(b);
  return make("ou_increment", [b](double t) { return ou_increment_density(b, t); }, {},
              [r](std::size_t k) {
                if (k == 0) return 2.0 * (1.0 - r);
                return -(1.0 - r) * (1.0 - r) * std::pow(r, static_cast<double>(k) - 1.0);
              });
}

SpectralDensity SpectralDensity::from_callable(std::string name, Function f) {
  require(static_cast<bool>(f), "from_callable: empty function");
  return make(std::move(name), std::move(f), {}, {});
}

SpectralDensity SpectralDensity::fourier_series(std::vector<double> c) {
  require(!c.empty(), "fourier_series: empty coefficient list");
  auto coeffs = std::make_shared<const std::vector<double>>(c);
  auto f = [coeffs](double t) {
    const auto& a = *coeffs;
    // cos(kt) by rotation; the rounding drift is O(k eps).
    const double ct = std::cos(t), st = std::sin(t);
    double ck = 1.0, sk = 0.0;
    double sum = 0.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
      const double next_c = ck * ct - sk * st;
      sk = sk * ct + ck * st;
      ck = next_c;
      sum += a[k] * ck;
    }
    return a[0] + 2.0 * sum;
  };
  return make("fourier_series", std::move(f), std::move(c), {});
}

double SpectralDensity::raw(double t) const { return state_->f(t); }

double SpectralDensity::operator()(double t) const {
  const double v = state_->f(t);
  if (v < 0.0) {
    state_->clipped.store(true, std::memory_order_relaxed);
    return 0.0;
  }
  return v;
}

bool SpectralDensity::has_exact_coefficients() const {
  return !state_->coefficients.empty() || static_cast<bool>(state_->coefficient_fn);
}

double SpectralDensity::exact_coefficient(std::size_t k) const {
  if (!state_->coefficients.empty()) {
    return k < state_->coefficients.size() ? state_->coefficients[k] : 0.0;
  }
  require(static_cast<bool>(state_->coefficient_fn),
          "density '" + state_->name + "' has no closed-form coefficients");
  return state_->coefficient_fn(k);
}

SpectralDensity spectral_from_covariance(const CovarianceModel& model, std::size_t truncation) {
  require(truncation >= 1, "spectral_from_covariance: truncation must be at least 1");
  std::vector<double> c(truncation + 1);
  for (std::size_t k = 0; k <= truncation; ++k) c[k] = model(static_cast<double>(k));
  return SpectralDensity::fourier_series(std::move(c));
}

SpectralDensity density_for(const CovarianceModel& model, std::size_t truncation) {
  const auto& closed = model.closed_form_density();
  if (!closed) return spectral_from_covariance(model, truncation);

  auto coefficient_fn = [model](std::size_t k) { return model(static_cast<double>(k)); };
  using Family = ClosedFormDensity::Family;
  const double param = closed->parameter;
  switch (closed->family) {
    case Family::Constant:
      return SpectralDensity::make("constant", [param](double) { return param; }, {},
                                   coefficient_fn);
    case Family::PoissonKernel: {
      // Scaled by the model variance so that c_0 matches.
      const double v = model.variance();
      return SpectralDensity::make(
          "poisson_kernel", [param, v](double t) { return v * poisson_kernel(param, t); }, {},
          coefficient_fn);
    }
    case Family::OuIncrement:
      return SpectralDensity::make(
          "ou_increment", [param](double t) { return ou_increment_density(param, t); }, {},
          coefficient_fn);
    case Family::BandLimited:
      return SpectralDensity::make(
          "bandlimited",
          [param](double t) { return std::abs(t) < param ? kPi / param : 0.0; }, {},
          coefficient_fn);
  }
  return spectral_from_covariance(model, truncation);
}

std::vector<double> extract_fourier_coefficients(const SpectralDensity& f, std::size_t count,
                                                 std::size_t grid) {
  require(count >= 1, "extract_fourier_coefficients: count must be positive");
  const std::size_t m = grid ? grid : std::max<std::size_t>(4096, 4 * count);
  require(m > 2 * (count - 1), "extract_fourier_coefficients: grid too coarse for count");
  std::vector<double> values(m);
  for (std::size_t j = 0; j < m; ++j) {
    values[j] = f.raw(-kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m));
  }
  std::vector<double> c(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double t = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
      s += values[j] * std::cos(static_cast<double>(k) * t);
    }
    c[k] = s / static_cast<double>(m);
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

struct MidpointSum {
  double mean = 0.0;  // (1/N) sum F(f(t_k)) = (1/2pi) \int F(f) on the midpoint grid
  std::size_t clipped = 0;
  bool zero_hit = false;
};

// Node count is kept even so that t = 0 and t = +-pi sit between nodes.
MidpointSum midpoint_mean(const SpectralDensity& f, std::size_t n, bool take_log,
                          const std::function<double(double)>* F) {
  MidpointSum out;
  double sum = 0.0;
  const double h = 2.0 * kPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = -kPi + (static_cast<double>(k) + 0.5) * h;
    double v = f.raw(t);
    if (v < -kClipTolerance) {
      fail(ErrorCode::Domain, "density '" + f.name() + "' is negative (" + std::to_string(v) +
                                  ") at t = " + std::to_string(t));
    }
    if (v < 0.0) {
      v = kClipFloor;
      ++out.clipped;
    } else if (v == 0.0 && take_log) {
      out.zero_hit = true;
      continue;
    }
    sum += take_log ? std::log(v) : (*F)(v);
  }
  out.mean = sum / static_cast<double>(n);
  return out;
}

std::size_t even_nodes(std::size_t n) { return n + (n & 1u); }

}  // namespace

GeometricMeanResult geometric_mean(const SpectralDensity& f, std::size_t quadrature_points) {
  require(quadrature_points >= 16, "geometric_mean: quadrature_points must be at least 16");
  const std::size_t n = even_nodes(quadrature_points);
  GeometricMeanResult out;

  const MidpointSum q1 = midpoint_mean(f, n, true, nullptr);
  const MidpointSum q2 = midpoint_mean(f, 2 * n, true, nullptr);
  const MidpointSum q4 = midpoint_mean(f, 4 * n, true, nullptr);
  out.clipped_nodes = q1.clipped + q2.clipped + q4.clipped;

  if (q1.zero_hit || q2.zero_hit || q4.zero_hit) {
    // f vanishes at a node: on a set of positive measure for any density we support.
    out.integrable = false;
    out.value = 0.0;
    out.log_integral = -std::numeric_limits<double>::infinity();
    return out;
  }
  const bool diverging =
      q2.mean < q1.mean && q4.mean < q2.mean && (q1.mean - q4.mean) > 1.0;
  if (diverging) {
    out.integrable = false;
    out.value = 0.0;
    out.log_integral = -std::numeric_limits<double>::infinity();
    out.quadrature_error_estimate = q1.mean - q4.mean;
    return out;
  }
  const double r1 = 2.0 * q2.mean - q1.mean;
  const double r2 = 2.0 * q4.mean - q2.mean;
  out.integrable = true;
  out.log_integral = 2.0 * kPi * r2;
  out.quadrature_error_estimate = 2.0 * kPi * std::abs(r2 - r1);
  out.value = std::exp(r2);
  return out;
}

double spectral_average(const SpectralDensity& f, const std::function<double(double)>& F,
                        std::size_t quadrature_points) {
  require(quadrature_points >= 16, "spectral_average: quadrature_points must be at least 16");
  const std::size_t n = even_nodes(quadrature_points);
  const double q1 = midpoint_mean(f, n, false, &F).mean;
  const double q2 = midpoint_mean(f, 2 * n, false, &F).mean;
  const double q4 = midpoint_mean(f, 4 * n, false, &F).mean;
  (void)q1;
  return 2.0 * q4 - q2;
}

}  // namespace sdprob
