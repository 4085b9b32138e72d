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

#include <span>

namespace sdprob {

/// Standard normal cumulative distribution function.
double normal_cdf(double x);

/// P{|g| <= x} for a standard Gaussian g; zero for x <= 0.
double prob_abs_le(double x);

/// log P{|g| <= x}, accurate in both tails (small x and large x).
/// Returns -infinity for x <= 0.
double log_prob_abs_le(double x);

/// Sum of log P{|g| <= x_i}.
double sum_log_prob_abs_le(std::span<const double> x);

}  // namespace sdprob
