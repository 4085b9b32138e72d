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
#include "sdprob/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "sdprob/errors.hpp"
#include "sdprob/gaussian.hpp"

namespace sdprob {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct MethodName {
  BoundMethod method;
  const char* name;
};

constexpr std::array<MethodName, 10> kMethodNames{{
    {BoundMethod::SidakLower, "sidak_lower"},
    {BoundMethod::SzegoUpper, "szego_upper"},
    {BoundMethod::RhoUpper, "rho_upper"},
    {BoundMethod::DecoUpper, "deco_upper"},
    {BoundMethod::SupdecUpper, "supdec_upper"},
    {BoundMethod::ErgodicMeanUpper, "ergodic_mean_upper"},
    {BoundMethod::DdpUpper, "ddp_upper"},
    {BoundMethod::KurddpUpper, "kurddp_upper"},
    {BoundMethod::OuSupremaLower, "ou_suprema_lower"},
    {BoundMethod::OuSupremaUpper, "ou_suprema_upper"},
}};

}  // namespace

const char* to_string(BoundMethod method) noexcept {
  for (const auto& m : kMethodNames)
    if (m.method == method) return m.name;
  return "unknown";
}

BoundMethod bound_method_from_string(const std::string& name) {
  std::string valid;
  for (const auto& m : kMethodNames) {
    if (name == m.name) return m.method;
    valid += valid.empty() ? "" : ", ";
    valid += m.name;
  }
  fail(ErrorCode::InvalidArgument, "unknown bound method '" + name + "' (expected one of " +
                                       valid + ")");
}

bool is_upper_bound(BoundMethod method) noexcept {
  return method != BoundMethod::SidakLower && method != BoundMethod::OuSupremaLower;
}

bool BoundReport::trusted() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.met; });
}

double BoundReport::value() const { return std::exp(log_value); }

BoundReport make_bound(BoundMethod method, double raw_log_value,
                       std::map<std::string, double> parameters,
                       std::vector<Condition> conditions) {
  BoundReport b;
  b.method = method;
  b.raw_log_value = raw_log_value;
  b.log_value = raw_log_value;
  b.parameters = std::move(parameters);
  b.conditions = std::move(conditions);
  if (std::isnan(raw_log_value)) {
    fail(ErrorCode::Domain, std::string(to_string(method)) + ": bound evaluated to NaN");
  }
  if (raw_log_value >= 0.0) {
    b.log_value = 0.0;
    b.vacuous = true;
  } else if (!is_upper_bound(method) && raw_log_value == -kInf) {
    b.vacuous = true;
  }
  return b;
}

// ---------------------------------------------------------------------------

double mills_ratio_quadrature(double x) {
  require(x >= 0.0 && std::isfinite(x), "mills ratio: x must be finite and nonnegative");
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([x](double s) { return std::exp(-x * s - 0.5 * s * s); });
}

MillsBracket boyd_mills_bounds(double x) {
  require(x >= 0.0 && std::isfinite(x), "boyd_mills_bounds: x must be finite and nonnegative");
  MillsBracket out;
  out.x = x;
  out.lower = kPi / (std::sqrt(x * x + 2.0 * kPi) + (kPi - 1.0) * x);
  out.upper = kPi / (std::sqrt((kPi - 2.0) * (kPi - 2.0) * x * x + 2.0 * kPi) + 2.0 * x);
  out.reference = mills_ratio_quadrature(x);
  return out;
}

double laplace_abs_gaussian(double lambda) {
  require(lambda >= 0.0, "laplace_abs_gaussian: lambda must be nonnegative");
  return std::sqrt(2.0 / kPi) * mills_ratio_quadrature(lambda);
}

double laplace_abs_gaussian_bound(double lambda) {
  require(lambda >= 0.0, "laplace_abs_gaussian_bound: lambda must be nonnegative");
  if (lambda == 0.0) return 1.0;
  return std::min(std::sqrt(2.0) / (lambda * std::sqrt(kPi)), 1.0);
}

// ---------------------------------------------------------------------------

BoundReport sidak_lower(std::span<const double> z, std::span<const double> sigma) {
  require(!z.empty() && z.size() == sigma.size(),
          "sidak_lower: z and sigma must be nonempty and of equal length");
  double s = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    require(z[j] > 0.0 && sigma[j] > 0.0, "sidak_lower: thresholds and sigmas must be positive");
    s += log_prob_abs_le(z[j] / sigma[j]);
  }
  return make_bound(BoundMethod::SidakLower, s, {{"n", static_cast<double>(z.size())}});
}

BoundReport szego_upper(std::size_t n, double z, double geometric_mean) {
  require(n >= 1, "szego_upper: n must be positive");
  require(z > 0.0, "szego_upper: z must be positive");
  std::map<std::string, double> params{
      {"n", static_cast<double>(n)}, {"z", z}, {"G", geometric_mean}};
  if (!(geometric_mean > 0.0)) {
    return make_bound(BoundMethod::SzegoUpper, 0.0, std::move(params),
                      {{"geometric_mean_positive", false}});
  }
  const double v = static_cast<double>(n) * log_prob_abs_le(z / std::sqrt(geometric_mean));
  return make_bound(BoundMethod::SzegoUpper, v, std::move(params),
                    {{"geometric_mean_positive", true}});
}

BoundReport rho_upper(std::span<const double> z, const PredictionErrorSequence& rho) {
  const std::size_t n = rho.rho.size();
  require(n >= 1, "rho_upper: empty prediction error sequence");
  require(z.size() == n || z.size() == 1,
          "rho_upper: z has " + std::to_string(z.size()) + " entries, expected 1 or " +
              std::to_string(n));
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double zj = z.size() == 1 ? z[0] : z[j];
    require(zj > 0.0, "rho_upper: thresholds must be positive");
    s += log_prob_abs_le(zj * std::sqrt(rho.rho[j]));
  }
  return make_bound(BoundMethod::RhoUpper, s, {{"n", static_cast<double>(n)}});
}

// ---------------------------------------------------------------------------

const char* to_string(DecouplingFlavor flavor) noexcept {
  switch (flavor) {
    case DecouplingFlavor::DiscreteP0: return "discrete_p0";
    case DecouplingFlavor::ContinuousP1: return "continuous_p1";
    case DecouplingFlavor::IncrementPb: return "increment_pb";
    case DecouplingFlavor::Cyclic: return "cyclic";
    case DecouplingFlavor::OuIntervals: return "ou_intervals";
  }
  return "unknown";
}

namespace {

// Sums term(j) for j = first.. until a geometric tail estimate drops below
// kTailTolerance (relative to `scale`) or `truncation` terms were taken.
template <class Term>
DecouplingReport sum_series(Term term, std::size_t first, std::size_t truncation, double scale,
                            DecouplingFlavor flavor) {
  DecouplingReport out;
  out.flavor = flavor;
  double sum = 0.0, prev = -1.0;
  std::size_t zero_run = 0;
  std::size_t j = first;
  double tail = kInf;
  for (; j < first + truncation; ++j) {
    const double t = term(j);
    if (!std::isfinite(t)) fail(ErrorCode::Domain, "series term is not finite");
    sum += t;
    zero_run = t == 0.0 ? zero_run + 1 : 0;
    if (zero_run >= 8) {
      tail = 0.0;
      break;
    }
    if (prev > 0.0 && t > 0.0 && t < prev) {
      const double ratio = t / prev;
      tail = t * ratio / (1.0 - ratio);
      if (tail / scale < kTailTolerance && j >= first + 8) break;
    }
    prev = t;
  }
  out.truncation_order = j;
  out.tail_estimate = tail / scale;
  out.p = sum / scale;
  if (!(out.tail_estimate < kTailTolerance)) {
    out.warnings.push_back("series tail estimate " + std::to_string(out.tail_estimate) +
                           " above tolerance after " + std::to_string(j) +
                           " terms; the sum may not converge");
  }
  return out;
}

DeltaResult scan_delta(const CovarianceModel& model, double b, std::size_t horizon) {
  DeltaResult out;
  out.value = kInf;
  out.horizon = horizon;
  out.stabilized = true;
  const std::size_t decade = std::max<std::size_t>(horizon / 10, 1);
  for (std::size_t u = 1; u <= horizon; ++u) {
    const double g = model(static_cast<double>(u) * b);
    const double d = std::sqrt(std::max(0.0, 2.0 * (model.variance() - g)));
    if (d < out.value) {
      out.value = d;
      out.argmin = u;
    }
    if (u > horizon - decade && std::abs(g) >= 1e-12) out.stabilized = false;
  }
  return out;
}

}  // namespace

DeltaResult deco_delta(const CovarianceModel& model, double b, std::size_t search_horizon,
                       bool grow) {
  require(b > 0.0, "deco_delta: b must be positive");
  require(search_horizon >= 1, "deco_delta: search horizon must be at least 1");
  if (model.integer_lags_only()) {
    require(std::abs(b - std::round(b)) < 1e-12,
            "deco_delta: model '" + model.name() + "' only admits integer b", ErrorCode::Domain);
  }
  DeltaResult r = scan_delta(model, b, search_horizon);
  while (grow && !r.stabilized && r.horizon < kMaxDeltaHorizon) {
    r = scan_delta(model, b, std::min(r.horizon * 10, kMaxDeltaHorizon));
  }
  return r;
}

EpsilonResult deco_epsilon(const CovarianceModel& model, double a) {
  require(a > 0.0, "deco_epsilon: a must be positive");
  require(!model.integer_lags_only(),
          "deco_epsilon: model '" + model.name() + "' has no continuous-time covariance",
          ErrorCode::Domain);
  if (a * a > 4.0 * model.variance()) {
    fail(ErrorCode::Unachievable, "deco_epsilon: a = " + std::to_string(a) +
                                      " exceeds the largest possible delta 2 sqrt(gamma(0))");
  }
  // The scan uses a fixed horizon; the final value is re-checked with growth.
  auto delta = [&](double b) { return deco_delta(model, b, kDefaultDeltaHorizon, false).value; };

  double lo = 0.0, hi = 1e-8;
  while (delta(hi) < a) {
    lo = hi;
    hi *= 1.25;
    if (hi > 1e8) {
      fail(ErrorCode::Unachievable,
           "deco_epsilon: delta(b) stays below a = " + std::to_string(a) + " for b up to 1e8");
    }
  }
  while (hi - lo > 1e-10 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi) {
    const double mid = 0.5 * (lo + hi);
    (delta(mid) >= a ? hi : lo) = mid;
  }
  const DeltaResult final_delta = deco_delta(model, hi);
  return {hi, final_delta.value, final_delta.stabilized};
}

DecouplingReport deco_p(const CovarianceModel& model, double b, std::size_t truncation) {
  require(b > 0.0, "deco_p: b must be positive");
  const double denom = 2.0 * (model.variance() - model(b));
  require(denom > 0.0, "deco_p: gamma(b) equals gamma(0); increments are degenerate",
          ErrorCode::Domain);
  auto term = [&](std::size_t j) {
    const double u = static_cast<double>(j) * b;
    return std::abs(2.0 * model(u) - model(u - b) - model(u + b));
  };
  DecouplingReport r = sum_series(term, 2, truncation, denom, DecouplingFlavor::IncrementPb);
  r.p += 1.0;
  return r;
}

BoundReport deco_upper(const CovarianceModel& model, double T, double a) {
  require(T > 0.0, "deco_upper: T must be positive");
  const EpsilonResult eps = deco_epsilon(model, a);
  require(T >= eps.b, "deco_upper: T = " + std::to_string(T) + " is below epsilon(a) = " +
                          std::to_string(eps.b));
  const DecouplingReport p = deco_p(model, eps.b);
  const double v = -kDecouplingK * T / (eps.b * p.p);
  return make_bound(BoundMethod::DecoUpper, v,
                    {{"T", T}, {"a", a}, {"epsilon", eps.b}, {"delta", eps.delta}, {"p", p.p},
                     {"K", kDecouplingK}},
                    {{"delta_stabilized", eps.stabilized},
                     {"p_tail_converged", p.tail_estimate < kTailTolerance}});
}

DecouplingReport decoupling_discrete(const CovarianceModel& model, std::size_t truncation) {
  const double c0 = model.variance();
  require(c0 > 0.0, "decoupling_discrete: gamma(0) must be positive");
  return sum_series([&](std::size_t k) { return std::abs(model(static_cast<double>(k))); }, 1,
                    truncation, c0, DecouplingFlavor::DiscreteP0);
}

DecouplingReport decoupling_continuous(const CovarianceModel& model) {
  require(!model.integer_lags_only(),
          "decoupling_continuous: model '" + model.name() + "' is only defined at integer lags",
          ErrorCode::Domain);
  const double c0 = model.variance();
  require(c0 > 0.0, "decoupling_continuous: gamma(0) must be positive");
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  DecouplingReport out;
  out.flavor = DecouplingFlavor::ContinuousP1;
  try {
    const double half = integrator.integrate([&](double t) { return std::abs(model(t)); },
                                             1e-12, &error, &l1, &levels);
    out.p = 2.0 * half / c0;
    out.tail_estimate = 2.0 * error / c0;
  } catch (const std::exception& e) {
    fail(ErrorCode::NotConverged,
         std::string("decoupling_continuous: |gamma| does not appear integrable: ") + e.what());
  }
  out.truncation_order = levels;
  if (!std::isfinite(out.p)) {
    fail(ErrorCode::NotConverged, "decoupling_continuous: |gamma| does not appear integrable");
  }
  if (!(out.tail_estimate < 1e-8 * std::max(1.0, out.p))) {
    out.warnings.push_back("quadrature error estimate " + std::to_string(out.tail_estimate) +
                           " is large; |gamma| may not be integrable");
  }
  return out;
}

BoundReport supdec_upper(double z, double B_measure, double p) {
  require(z > 0.0 && B_measure > 0.0 && p > 0.0, "supdec_upper: z, |B| and p must be positive");
  const double inner = p + log_prob_abs_le(z);
  return make_bound(BoundMethod::SupdecUpper, (B_measure / p) * inner,
                    {{"z", z}, {"B", B_measure}, {"p", p}},
                    {{"nontrivial", inner < 0.0}});
}

BoundReport ergodic_mean_upper(double theta, double B_measure, double p) {
  require(theta > 0.0 && B_measure > 0.0 && p > 0.0,
          "ergodic_mean_upper: theta, |B| and p must be positive");
  const double base = std::min(std::numbers::e * std::sqrt(2.0 / kPi) * theta, 1.0);
  return make_bound(BoundMethod::ErgodicMeanUpper, (B_measure / p) * std::log(base),
                    {{"theta", theta}, {"B", B_measure}, {"p", p}},
                    {{"nontrivial", base < 1.0}});
}

DecouplingReport ou_suprema_decoupling(std::span<const double> interval_lengths) {
  require(!interval_lengths.empty(), "ou_suprema_decoupling: no intervals given");
  double total = 0.0;
  for (double l : interval_lengths) {
    require(l > 0.0, "ou_suprema_decoupling: interval lengths must be positive");
    total += l;
  }
  DecouplingReport out;
  out.flavor = DecouplingFlavor::OuIntervals;
  out.p = (1.0 + std::exp(-total)) / -std::expm1(-total);
  return out;
}

BoundReport ou_suprema_lower(std::span<const double> log_single_probabilities) {
  require(!log_single_probabilities.empty(), "ou_suprema_lower: no probabilities given");
  double s = 0.0;
  for (double l : log_single_probabilities) {
    require(l <= 0.0, "ou_suprema_lower: log-probabilities must be nonpositive");
    s += l;
  }
  return make_bound(BoundMethod::OuSupremaLower, s,
                    {{"J", static_cast<double>(log_single_probabilities.size())}});
}

BoundReport ou_suprema_upper(std::span<const double> log_single_probabilities,
                             std::span<const double> interval_lengths) {
  require(log_single_probabilities.size() == interval_lengths.size(),
          "ou_suprema_upper: one probability per interval required");
  const double p = ou_suprema_decoupling(interval_lengths).p;
  double s = 0.0;
  for (double l : log_single_probabilities) {
    require(l <= 0.0, "ou_suprema_upper: log-probabilities must be nonpositive");
    s += l;
  }
  return make_bound(BoundMethod::OuSupremaUpper, s / p,
                    {{"J", static_cast<double>(interval_lengths.size())}, {"p", p}});
}

// ---------------------------------------------------------------------------

namespace {

// \int_0^1 g over `panels` equal panels, 10-point Gauss-Legendre each.
// |trig polynomial| has kinks at its zeros, so panels are kept well below
// the shortest period.
template <class F>
double integrate_unit_interval(F g, std::size_t panels) {
  const double h = 1.0 / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    const double a = static_cast<double>(k) * h;
    total += boost::math::quadrature::gauss<double, 10>::integrate(g, a, a + h);
  }
  return total;
}

std::size_t panels_for_degree(double degree) {
  return static_cast<std::size_t>(std::clamp(256.0 * degree, 4096.0, 1.0e6));
}

}  // namespace

DecouplingReport cyclic_decoupling(std::span<const double> amplitudes) {
  double norm = 0.0;
  for (double a : amplitudes) norm += a * a;
  require(norm > 0.0, "cyclic_decoupling: amplitudes are all zero");
  auto g = [&](double t) {
    double s = 0.0;
    for (std::size_t n = 0; n < amplitudes.size(); ++n) {
      s += amplitudes[n] * amplitudes[n] * std::cos(2.0 * kPi * static_cast<double>(n + 1) * t);
    }
    return std::abs(s);
  };
  const std::size_t panels = panels_for_degree(static_cast<double>(amplitudes.size()));
  DecouplingReport out;
  out.flavor = DecouplingFlavor::Cyclic;
  const double fine = integrate_unit_interval(g, panels);
  out.tail_estimate = std::abs(fine - integrate_unit_interval(g, panels / 2)) / norm;
  out.p = fine / norm;
  out.truncation_order = amplitudes.size();
  return out;
}

double lebesgue_constant(std::span<const long long> frequencies) {
  require(!frequencies.empty(), "lebesgue_constant: no frequencies given");
  std::vector<long long> sorted(frequencies.begin(), frequencies.end());
  std::sort(sorted.begin(), sorted.end());
  require(sorted.front() > 0, "lebesgue_constant: frequencies must be positive");
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "lebesgue_constant: frequencies must be distinct");
  auto g = [&](double t) {
    double re = 0.0, im = 0.0;
    for (long long n : sorted) {
      const double phase = 2.0 * kPi * std::fmod(static_cast<double>(n) * t, 1.0);
      re += std::cos(phase);
      im += std::sin(phase);
    }
    return std::hypot(re, im);
  };
  return integrate_unit_interval(g, panels_for_degree(static_cast<double>(sorted.back())));
}

double littlewood_lower(std::size_t N, double z, double B_measure, double sup_probability) {
  require(N >= 1, "littlewood_lower: N must be positive");
  require(z > 0.0, "littlewood_lower: z must be positive");
  require(B_measure > 0.0 && B_measure <= 1.0, "littlewood_lower: |B| must lie in (0, 1]");
  require(sup_probability > 0.0 && sup_probability <= 1.0,
          "littlewood_lower: sup probability must lie in (0, 1]", ErrorCode::Domain);
  const double numerator = -log_prob_abs_le(z);
  const double denominator = B_measure - std::log(sup_probability);
  return static_cast<double>(N) * B_measure * numerator / denominator;
}

}  // namespace sdprob
