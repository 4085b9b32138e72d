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
#include "sdprob/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sdprob/errors.hpp"

namespace sdprob {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::NotPositiveDefinite: return "not positive definite";
    case ErrorCode::NotConverged: return "not converged";
    case ErrorCode::Unachievable: return "unachievable";
    case ErrorCode::Config: return "config error";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double prob_abs_le(double x) {
  if (!(x > 0.0)) return 0.0;
  return std::erf(x / std::numbers::sqrt2);
}

double log_prob_abs_le(double x) {
  if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
  if (std::isinf(x)) return 0.0;
  const double u = x / std::numbers::sqrt2;
  const double p = std::erf(u);
  if (p < 0.5) return std::log(p);
  return std::log1p(-std::erfc(u));
}

double sum_log_prob_abs_le(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += log_prob_abs_le(v);
  return s;
}

}  // namespace sdprob
