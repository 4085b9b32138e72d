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
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sdprob/bounds.hpp"
#include "sdprob/linalg.hpp"

namespace sdprob {

// Samples are processed in fixed-size chunks; chunk c draws from a stream
// seeded by (seed, c) only, so estimates do not depend on the worker count.
inline constexpr std::size_t kChunkSize = 4096;

/// Random stream for chunk `chunk` of a run seeded with `seed`.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t chunk);

enum class SamplerKind { CholeskyGeneral, Ar1Exact, CirculantEmbedding, TrigPolynomial };

const char* to_string(SamplerKind kind) noexcept;

struct CholeskyParams {
  Matrix covariance;
};

// X_1 = g, X_{j+1} = r X_j + sqrt(1 - r^2) g'. With `increments`, the draw is
// the difference sequence X_{j+1} - X_j of a path with length + 1 points.
struct Ar1Params {
  double r = 0.5;
  std::size_t length = 1;
  bool increments = false;
};

struct CirculantParams {
  std::vector<double> coefficients;  // c_0..c_{n-1}
  bool allow_clipping = false;
};

// Y_t = sum a_k (g1_k cos 2 pi n_k t + g2_k sin 2 pi n_k t) on `grid` + 1
// equispaced points of [t_lo, t_hi].
struct TrigParams {
  std::vector<double> amplitudes;
  std::vector<long long> frequencies;
  double t_lo = 0.0;
  double t_hi = 1.0;
  std::size_t grid = 256;
};

struct SamplerSpec {
  std::variant<CholeskyParams, Ar1Params, CirculantParams, TrigParams> params;
  std::uint64_t seed = 0;

  SamplerKind kind() const;
};

// Prepared sampler: factorizations and tables are computed once.
class GaussianSampler {
 public:
  explicit GaussianSampler(const SamplerSpec& spec);

  std::size_t dimension() const { return dim_; }
  SamplerKind kind() const { return kind_; }

  /// One exact draw into `out` (size dimension()).
  void draw(std::mt19937_64& rng, std::span<double> out) const;

  /// Largest negative circulant eigenvalue that was clipped (0 if none).
  double max_clip() const { return max_clip_; }

 private:
  SamplerKind kind_;
  std::size_t dim_ = 0;
  SamplerSpec spec_;
  Matrix factor_;                    // Cholesky factor
  std::vector<double> sqrt_eig_;     // circulant: sqrt(lambda_k / m)
  std::vector<double> cos_table_;    // trig: amplitudes folded in
  std::vector<double> sin_table_;
  double max_clip_ = 0.0;
};

/// A single draw using stream (seed, 0).
std::vector<double> sample_gaussian_vector(const SamplerSpec& spec);

struct MonteCarloEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::size_t n_samples = 0;
  std::size_t successes = 0;
  std::uint64_t seed = 0;
  std::string event_description;

  bool operator==(const MonteCarloEstimate&) const = default;
};

/// Exact (Clopper-Pearson) two-sided interval for `successes` out of `n`.
std::pair<double, double> clopper_pearson(std::size_t successes, std::size_t n,
                                          double confidence = 0.95);

using EventPredicate = std::function<bool(std::span<const double>)>;

/// Fraction of draws satisfying `event`, with a 95% Clopper-Pearson interval.
/// workers = 0 uses the hardware concurrency.
MonteCarloEstimate estimate_event_probability(const GaussianSampler& sampler,
                                              const EventPredicate& event, std::size_t n_samples,
                                              std::uint64_t seed, std::string description,
                                              std::size_t workers = 0);

/// P{max_j |X_j| <= threshold}. Requires n_samples >= 1000.
MonteCarloEstimate estimate_sup_probability(const SamplerSpec& spec, double threshold,
                                            std::size_t n_samples, std::size_t workers = 0);

/// P{max_j |X_j| / z_j <= 1} with per-coordinate thresholds.
MonteCarloEstimate estimate_scaled_sup_probability(const SamplerSpec& spec,
                                                   std::span<const double> thresholds,
                                                   std::size_t n_samples, std::size_t workers = 0);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Grid estimate of P{sup_{t in B} |Y_t| <= threshold} for a random
/// trigonometric sum. The grid maximum never exceeds the true supremum, so
/// p_hat over-estimates the continuous probability.
MonteCarloEstimate estimate_trig_sup_probability(std::span<const double> amplitudes,
                                                 std::span<const long long> frequencies,
                                                 Interval interval, std::size_t grid,
                                                 double threshold, std::size_t n_samples,
                                                 std::uint64_t seed, std::size_t workers = 0);

/// Joint grid probability P{sup_{t in I_j} |U(t)| <= z_j for all j} for the
/// stationary OU process sampled exactly on the grid l / grid_per_unit.
MonteCarloEstimate estimate_joint_intervals_ou(std::span<const Interval> intervals,
                                               std::span<const double> thresholds,
                                               std::size_t grid_per_unit, std::size_t n_samples,
                                               std::uint64_t seed, std::size_t workers = 0);

enum class Verdict { Pass, Inconclusive, Fail };

const char* to_string(Verdict verdict) noexcept;
Verdict verdict_from_string(const std::string& name);

// How a bound is compared with an interval estimate.
//  Consistency: PASS unless the 95% interval contradicts the bound
//               (upper bound < ci_low, or lower bound > ci_high).
//  Dominance:   PASS only when the whole interval is on the right side of the
//               bound; INCONCLUSIVE when the interval straddles it.
//  GridSup:     as Consistency, but the estimate comes from a grid that can
//               only over-estimate a continuous-supremum probability, so a
//               contradicted upper bound is INCONCLUSIVE rather than FAIL.
enum class VerifyMode { Consistency, Dominance, GridSup };

const char* to_string(VerifyMode mode) noexcept;
VerifyMode verify_mode_from_string(const std::string& name);

/// Compares a bound with an estimate of the same event. Throws when both
/// carry event tags and they differ.
Verdict verify_bound(const BoundReport& report, const MonteCarloEstimate& estimate,
                     VerifyMode mode = VerifyMode::Consistency);

}  // namespace sdprob
