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

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sdprob/covariance.hpp"
#include "sdprob/toeplitz.hpp"

namespace sdprob {

enum class BoundMethod {
  SidakLower,
  SzegoUpper,
  RhoUpper,
  DecoUpper,
  SupdecUpper,
  ErgodicMeanUpper,
  DdpUpper,
  KurddpUpper,
  OuSupremaLower,
  OuSupremaUpper,
};

const char* to_string(BoundMethod method) noexcept;
BoundMethod bound_method_from_string(const std::string& name);
bool is_upper_bound(BoundMethod method) noexcept;

struct Condition {
  std::string name;
  bool met = false;
  bool operator==(const Condition&) const = default;
};

// A probability bound in log space. Upper bounds above 1 are clamped to 1
// (log_value = 0) and flagged vacuous; raw_log_value keeps the formula value.
struct BoundReport {
  BoundMethod method = BoundMethod::SidakLower;
  double log_value = 0.0;
  double raw_log_value = 0.0;
  bool vacuous = false;
  std::map<std::string, double> parameters;
  std::vector<Condition> conditions;
  std::string event;  // tag of the probability event the bound is about

  bool trusted() const;
  double value() const;
  bool operator==(const BoundReport&) const = default;
};

BoundReport make_bound(BoundMethod method, double raw_log_value,
                       std::map<std::string, double> parameters = {},
                       std::vector<Condition> conditions = {});

// ---------------------------------------------------------------------------
// Gaussian basics

struct MillsBracket {
  double x = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double reference = 0.0;  // R(x) by quadrature
};

/// R(x) = e^{x^2/2} \int_x^inf e^{-t^2/2} dt, computed by quadrature of
/// \int_0^inf e^{-xs - s^2/2} ds.
double mills_ratio_quadrature(double x);

/// Boyd's two-sided rational bounds on the Mills ratio, plus the quadrature value.
MillsBracket boyd_mills_bounds(double x);

/// E exp(-lambda |g|) = sqrt(2/pi) R(lambda).
double laplace_abs_gaussian(double lambda);

/// min(sqrt(2) / (lambda sqrt(pi)), 1).
double laplace_abs_gaussian_bound(double lambda);

// ---------------------------------------------------------------------------
// Stationary-sequence bounds

/// sum_j log P{|g| <= z_j / sigma_j}.
BoundReport sidak_lower(std::span<const double> z, std::span<const double> sigma);

/// n log P{|g| <= z / sqrt(G)} for a sequence whose spectral density has
/// geometric mean G. G <= 0 yields the trivial bound 1 with a failed condition.
BoundReport szego_upper(std::size_t n, double z, double geometric_mean);

/// sum_j log P{|g| <= z_j sqrt(rho_j)}.
BoundReport rho_upper(std::span<const double> z, const PredictionErrorSequence& rho);

// ---------------------------------------------------------------------------
// Decoupling coefficients

enum class DecouplingFlavor { DiscreteP0, ContinuousP1, IncrementPb, Cyclic, OuIntervals };

const char* to_string(DecouplingFlavor flavor) noexcept;

struct DecouplingReport {
  double p = 0.0;
  std::size_t truncation_order = 0;
  double tail_estimate = 0.0;
  DecouplingFlavor flavor = DecouplingFlavor::DiscreteP0;
  std::vector<std::string> warnings;
};

inline constexpr double kTailTolerance = 1e-10;
inline constexpr std::size_t kDefaultDeltaHorizon = 10'000;
inline constexpr std::size_t kMaxDeltaHorizon = 1'000'000;
inline constexpr std::size_t kDefaultIncrementTruncation = 1'000'000;

/// K = (1/4) log(pi/2).
inline const double kDecouplingK = 0.25 * std::log(std::numbers::pi / 2.0);

struct DeltaResult {
  double value = 0.0;       // min_{1<=u<=horizon} sqrt(2(1 - gamma(ub)))
  std::size_t argmin = 0;   // minimizing lag u
  std::size_t horizon = 0;  // last lag scanned
  bool stabilized = false;  // |gamma(ub)| < 1e-12 over the last decade of lags
};

/// delta(b). The horizon grows tenfold (up to kMaxDeltaHorizon) until the
/// tail stabilizes when `grow` is set.
DeltaResult deco_delta(const CovarianceModel& model, double b,
                       std::size_t search_horizon = kDefaultDeltaHorizon, bool grow = true);

struct EpsilonResult {
  double b = 0.0;      // epsilon(a)
  double delta = 0.0;  // delta(epsilon(a))
  bool stabilized = false;
};

/// epsilon(a) = smallest b > 0 with delta(b) >= a: geometric scan from 1e-8
/// for the first crossing, then bisection to 1e-10 in b. Throws Unachievable.
EpsilonResult deco_epsilon(const CovarianceModel& model, double a);

/// p(b) = 1 + sum_{j>=2} |2 gamma(jb) - gamma((j-1)b) - gamma((j+1)b)| / (2(1 - gamma(b))).
DecouplingReport deco_p(const CovarianceModel& model, double b,
                        std::size_t truncation = kDefaultIncrementTruncation);

/// log bound -K T / (epsilon(a) p(epsilon(a))) on P{sup_{s,t<=T} |X(s)-X(t)| <= a}.
BoundReport deco_upper(const CovarianceModel& model, double T, double a);

/// p = sum_{k>=1} |gamma(k)| / gamma(0).
DecouplingReport decoupling_discrete(const CovarianceModel& model,
                                     std::size_t truncation = kDefaultIncrementTruncation);

/// p = \int_R |gamma(t)| dt / gamma(0).
DecouplingReport decoupling_continuous(const CovarianceModel& model);

/// (|B|/p) (p + log P{|g| < z}).
BoundReport supdec_upper(double z, double B_measure, double p);

/// (|B|/p) log min(e sqrt(2/pi) theta, 1).
BoundReport ergodic_mean_upper(double theta, double B_measure, double p);

/// (1 + e^{-L}) / (1 - e^{-L}) with L the total length.
DecouplingReport ou_suprema_decoupling(std::span<const double> interval_lengths);

/// sum_j log P(C_j): lower bound on the joint OU suprema event.
BoundReport ou_suprema_lower(std::span<const double> log_single_probabilities);

/// (1/p) sum_j log P(C_j) with p from ou_suprema_decoupling.
BoundReport ou_suprema_upper(std::span<const double> log_single_probabilities,
                             std::span<const double> interval_lengths);

/// \int_0^1 |sum a_n^2 cos 2 pi n t| dt / sum a_n^2.
DecouplingReport cyclic_decoupling(std::span<const double> amplitudes);

/// \int_0^1 |sum_k exp(2 pi i n_k t)| dt for distinct positive n_k.
double lebesgue_constant(std::span<const long long> frequencies);

/// N |B| log(1/P{|g|<z}) / log(e^{|B|} / P_sup): lower bound on the Lebesgue
/// constant given the probability that the normalized random trigonometric
/// sum stays below z on B.
double littlewood_lower(std::size_t N, double z, double B_measure, double sup_probability);

}  // namespace sdprob
