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
#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include <boost/math/distributions/binomial.hpp>

#include "sdprob/errors.hpp"
#include "sdprob/monte_carlo.hpp"

namespace sdprob {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::pair<double, double> clopper_pearson(std::size_t successes, std::size_t n, double confidence) {
  require(n >= 1, "clopper_pearson: n must be positive");
  require(successes <= n, "clopper_pearson: more successes than trials");
  require(confidence > 0.0 && confidence < 1.0, "clopper_pearson: confidence must lie in (0, 1)");
  using boost::math::binomial_distribution;
  const double alpha = 0.5 * (1.0 - confidence);
  const auto trials = static_cast<double>(n);
  const auto k = static_cast<double>(successes);
  const double lo = successes == 0 ? 0.0
                                   : binomial_distribution<>::find_lower_bound_on_p(
                                         trials, k, alpha, binomial_distribution<>::clopper_pearson_exact_interval);
  const double hi = successes == n ? 1.0
                                   : binomial_distribution<>::find_upper_bound_on_p(
                                         trials, k, alpha, binomial_distribution<>::clopper_pearson_exact_interval);
  return {lo, hi};
}

MonteCarloEstimate estimate_event_probability(const GaussianSampler& sampler,
                                              const EventPredicate& event, std::size_t n_samples,
                                              std::uint64_t seed, std::string description,
                                              std::size_t workers) {
  require(n_samples >= 1, "estimate_event_probability: n_samples must be positive");
  const std::size_t chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<std::size_t> hits(chunks, 0);

  auto run_chunk = [&](std::size_t c) {
    auto rng = make_stream(seed, c);
    std::vector<double> x(sampler.dimension());
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(n_samples, begin + kChunkSize);
    std::size_t count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      sampler.draw(rng, x);
      if (event(x)) ++count;
    }
    hits[c] = count;
  };

  std::size_t w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  w = std::min(w, chunks);
  if (w <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (std::size_t t = 0; t < w; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t c = t; c < chunks; c += w) run_chunk(c);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  MonteCarloEstimate out;
  for (std::size_t h : hits) out.successes += h;
  out.n_samples = n_samples;
  out.seed = seed;
  out.p_hat = static_cast<double>(out.successes) / static_cast<double>(n_samples);
  std::tie(out.ci_low, out.ci_high) = clopper_pearson(out.successes, n_samples);
  out.event_description = std::move(description);
  return out;
}

namespace {

void require_sample_count(std::size_t n) {
  require(n >= 1000, "Monte Carlo estimates need at least 1000 samples, got " + std::to_string(n));
}

}  // namespace

MonteCarloEstimate estimate_sup_probability(const SamplerSpec& spec, double threshold,
                                            std::size_t n_samples, std::size_t workers) {
  require(threshold > 0.0, "estimate_sup_probability: threshold must be positive");
  require_sample_count(n_samples);
  const GaussianSampler sampler(spec);
  auto event = [threshold](std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [threshold](double v) { return std::abs(v) <= threshold; });
  };
  return estimate_event_probability(
      sampler, event, n_samples, spec.seed,
      std::string("max_j |X_j| <= ") + fmt(threshold) + " [" + to_string(spec.kind()) +
          ", n=" + std::to_string(sampler.dimension()) + "]",
      workers);
}

MonteCarloEstimate estimate_scaled_sup_probability(const SamplerSpec& spec,
                                                   std::span<const double> thresholds,
                                                   std::size_t n_samples, std::size_t workers) {
  require_sample_count(n_samples);
  const GaussianSampler sampler(spec);
  require(thresholds.size() == sampler.dimension(),
          "estimate_scaled_sup_probability: one threshold per coordinate required");
  for (double z : thresholds) require(z > 0.0, "thresholds must be positive");
  std::vector<double> z(thresholds.begin(), thresholds.end());
  auto event = [z](std::span<const double> x) {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (std::abs(x[j]) > z[j]) return false;
    return true;
  };
  return estimate_event_probability(
      sampler, event, n_samples, spec.seed,
      std::string("|X_j| <= z_j for all j [") + to_string(spec.kind()) +
          ", n=" + std::to_string(sampler.dimension()) + "]",
      workers);
}

MonteCarloEstimate estimate_trig_sup_probability(std::span<const double> amplitudes,
                                                 std::span<const long long> frequencies,
                                                 Interval interval, std::size_t grid,
                                                 double threshold, std::size_t n_samples,
                                                 std::uint64_t seed, std::size_t workers) {
  require(grid >= 256, "estimate_trig_sup_probability: grid must be at least 256");
  require(interval.lo >= 0.0 && interval.hi <= 1.0 && interval.lo < interval.hi,
          "estimate_trig_sup_probability: interval must be a sub-interval of [0, 1]");
  require(threshold > 0.0, "estimate_trig_sup_probability: threshold must be positive");
  require_sample_count(n_samples);
  SamplerSpec spec;
  spec.params = TrigParams{std::vector<double>(amplitudes.begin(), amplitudes.end()),
                           std::vector<long long>(frequencies.begin(), frequencies.end()),
                           interval.lo, interval.hi, grid};
  spec.seed = seed;
  const GaussianSampler sampler(spec);
  auto event = [threshold](std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [threshold](double v) { return std::abs(v) <= threshold; });
  };
  return estimate_event_probability(
      sampler, event, n_samples, seed,
      "grid sup_{t in [" + fmt(interval.lo) + ", " + fmt(interval.hi) + "]} |Y_t| <= " +
          fmt(threshold) + " [grid=" + std::to_string(grid) +
          "; grid sup under-estimates the continuous sup]",
      workers);
}

MonteCarloEstimate estimate_joint_intervals_ou(std::span<const Interval> intervals,
                                               std::span<const double> thresholds,
                                               std::size_t grid_per_unit, std::size_t n_samples,
                                               std::uint64_t seed, std::size_t workers) {
  require(!intervals.empty(), "estimate_joint_intervals_ou: no intervals given");
  require(thresholds.size() == intervals.size() || thresholds.size() == 1,
          "estimate_joint_intervals_ou: one threshold per interval required");
  require(grid_per_unit >= 64, "estimate_joint_intervals_ou: grid_per_unit must be at least 64");
  require_sample_count(n_samples);

  std::vector<std::size_t> order(intervals.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return intervals[a].lo < intervals[b].lo; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& I = intervals[order[k]];
    require(I.hi > I.lo, "estimate_joint_intervals_ou: empty interval");
    if (k > 0) {
      require(intervals[order[k - 1]].hi < I.lo,
              "estimate_joint_intervals_ou: intervals overlap or touch");
    }
  }

  const double g = static_cast<double>(grid_per_unit);
  const double origin = intervals[order.front()].lo;
  struct Window {
    std::size_t first, last;
    double z;
  };
  std::vector<Window> windows;
  std::size_t total = 0;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    const auto first = static_cast<std::size_t>(std::ceil((intervals[j].lo - origin) * g - 1e-9));
    const auto last = static_cast<std::size_t>(std::floor((intervals[j].hi - origin) * g + 1e-9));
    const double z = thresholds.size() == 1 ? thresholds[0] : thresholds[j];
    require(z > 0.0, "estimate_joint_intervals_ou: thresholds must be positive");
    windows.push_back({first, last, z});
    total = std::max(total, last + 1);
  }

  SamplerSpec spec;
  spec.params = Ar1Params{std::exp(-0.5 / g), total, false};
  spec.seed = seed;
  const GaussianSampler sampler(spec);
  auto event = [windows](std::span<const double> x) {
    for (const auto& w : windows)
      for (std::size_t i = w.first; i <= w.last; ++i)
        if (std::abs(x[i]) > w.z) return false;
    return true;
  };
  std::string desc = "OU grid sup over";
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    desc += " [" + fmt(intervals[j].lo) + ", " + fmt(intervals[j].hi) + "]<=" + fmt(windows[j].z);
  }
  desc += " [grid_per_unit=" + std::to_string(grid_per_unit) + "]";
  return estimate_event_probability(sampler, event, n_samples, seed, std::move(desc), workers);
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Fail: return "FAIL";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& name) {
  if (name == "PASS") return Verdict::Pass;
  if (name == "INCONCLUSIVE") return Verdict::Inconclusive;
  if (name == "FAIL") return Verdict::Fail;
  fail(ErrorCode::InvalidArgument, "unknown verdict '" + name + "'");
}

const char* to_string(VerifyMode mode) noexcept {
  switch (mode) {
    case VerifyMode::Consistency: return "consistency";
    case VerifyMode::Dominance: return "dominance";
    case VerifyMode::GridSup: return "grid_sup";
  }
  return "unknown";
}

VerifyMode verify_mode_from_string(const std::string& name) {
  if (name == "consistency") return VerifyMode::Consistency;
  if (name == "dominance") return VerifyMode::Dominance;
  if (name == "grid_sup") return VerifyMode::GridSup;
  fail(ErrorCode::InvalidArgument,
       "unknown verify mode '" + name + "' (expected consistency, dominance or grid_sup)");
}

Verdict verify_bound(const BoundReport& report, const MonteCarloEstimate& estimate,
                     VerifyMode mode) {
  if (!report.event.empty() && !estimate.event_description.empty() &&
      report.event != estimate.event_description) {
    fail(ErrorCode::InvalidArgument, "verify_bound: bound is about '" + report.event +
                                         "' but the estimate is of '" +
                                         estimate.event_description + "'");
  }
  const double v = report.value();
  if (is_upper_bound(report.method)) {
    switch (mode) {
      case VerifyMode::Consistency: return v >= estimate.ci_low ? Verdict::Pass : Verdict::Fail;
      case VerifyMode::GridSup:
        return v >= estimate.ci_low ? Verdict::Pass : Verdict::Inconclusive;
      case VerifyMode::Dominance:
        if (estimate.ci_high <= v) return Verdict::Pass;
        return v >= estimate.ci_low ? Verdict::Inconclusive : Verdict::Fail;
    }
  } else {
    switch (mode) {
      case VerifyMode::Consistency:
      case VerifyMode::GridSup: return v <= estimate.ci_high ? Verdict::Pass : Verdict::Fail;
      case VerifyMode::Dominance:
        if (v <= estimate.ci_low) return Verdict::Pass;
        return v <= estimate.ci_high ? Verdict::Inconclusive : Verdict::Fail;
    }
  }
  return Verdict::Fail;
}

}  // namespace sdprob
