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
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sdprob/bounds.hpp"
#include "sdprob/errors.hpp"
#include "sdprob/gaussian.hpp"

using namespace sdprob;

namespace {
constexpr double kPi = std::numbers::pi;

double mills_oracle(double x) {
  // R(x) = sqrt(pi/2) e^{x^2/2} erfc(x/sqrt2); fine for moderate x.
  return std::sqrt(kPi / 2) * std::exp(0.5 * x * x) * std::erfc(x / std::sqrt(2.0));
}
}  // namespace

TEST_CASE("Boyd bracket") {
  const auto zero = boyd_mills_bounds(0.0);
  CHECK(zero.lower == doctest::Approx(std::sqrt(kPi / 2)));
  CHECK(zero.upper == doctest::Approx(std::sqrt(kPi / 2)));
  CHECK(zero.reference == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-14));

  for (double x : {0.1, 1.0, 2.5, 5.0}) {
    const auto m = boyd_mills_bounds(x);
    CHECK(m.reference == doctest::Approx(mills_oracle(x)).epsilon(1e-12));
    CHECK(m.lower <= m.reference);
    CHECK(m.reference <= m.upper);
  }
  const auto ten = boyd_mills_bounds(10.0);
  CHECK(std::abs(ten.reference * 10.0 - 1.0) < 0.02);
  CHECK(ten.lower <= ten.reference);
  CHECK(ten.reference <= ten.upper);
  CHECK_THROWS_AS(boyd_mills_bounds(-1.0), Error);
}

TEST_CASE("Laplace transform of |g|") {
  CHECK(laplace_abs_gaussian(0.0) == doctest::Approx(1.0));
  for (double l : {0.1, 1.0, 3.0, 30.0}) {
    CHECK(laplace_abs_gaussian(l) <= laplace_abs_gaussian_bound(l));
  }
  const double big = 1e3;
  CHECK(laplace_abs_gaussian(big) * big / std::sqrt(2 / kPi) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("Sidak lower bound") {
  const double z[] = {1.959963984540054};
  const double s[] = {1.0};
  CHECK(sidak_lower(z, s).log_value == doctest::Approx(std::log(0.95)).epsilon(1e-3));
  const std::vector<double> zs(7, 2.0), sig(7, 2.0);
  CHECK(sidak_lower(zs, sig).log_value == doctest::Approx(7 * log_prob_abs_le(1.0)));
  const double bad[] = {-1.0};
  CHECK_THROWS_AS(sidak_lower(bad, s), Error);
}

TEST_CASE("Szego upper bound") {
  CHECK(szego_upper(10, 0.7, 1.0).log_value == doctest::Approx(10 * log_prob_abs_le(0.7)));
  const double G = 1 - std::exp(-1.0);
  CHECK(szego_upper(30, 0.5, G).log_value ==
        doctest::Approx(30 * log_prob_abs_le(0.5 / std::sqrt(G))));
  const auto trivial = szego_upper(30, 0.5, 0.0);
  CHECK(trivial.log_value == 0.0);
  CHECK(trivial.vacuous);
  CHECK_FALSE(trivial.trusted());
}

TEST_CASE("rho bound identities") {
  PredictionErrorSequence iid{{1, 1, 1}, {1, 1, 1}, {0, 0, 0}};
  const double z[] = {0.8};
  const std::vector<double> zs(3, 0.8), sig(3, 1.0);
  CHECK(rho_upper(z, iid).log_value == doctest::Approx(sidak_lower(zs, sig).log_value));

  // Replacing every theta_j^2 by G reproduces the Szego bound.
  const double G = 0.75;
  PredictionErrorSequence flat{{G, G, G, G}, {1 / G, 1 / G, 1 / G, 1 / G}, {0, 0, 0, 0}};
  CHECK(rho_upper(z, flat).log_value == doctest::Approx(szego_upper(4, 0.8, G).log_value));

  // KMS r = 0.5: theta_j^2 >= G so the rho bound is below Szego.
  const auto pe = levinson_error_variances(ToeplitzSystem({1, 0.5, 0.25, 0.125, 0.0625, 1.0 / 32, 1.0 / 64, 1.0 / 128}));
  const double one[] = {1.0};
  CHECK(rho_upper(one, pe).log_value <= szego_upper(8, 1.0, 0.75).log_value);
}

TEST_CASE("vacuous upper bounds are clamped and flagged") {
  const auto b = supdec_upper(3.0, 1.0, 4.0);
  CHECK(b.raw_log_value > 0.0);
  CHECK(b.log_value == 0.0);
  CHECK(b.vacuous);
}

TEST_CASE("supdec and ergodic mean bounds") {
  // 4 + log P{|g| < 0.1} > 0: the formula value exceeds 1 and is clamped.
  CHECK(supdec_upper(0.1, 100.0, 4.0).raw_log_value ==
        doctest::Approx(25.0 * (4.0 + log_prob_abs_le(0.1))));
  CHECK(supdec_upper(0.1, 100.0, 4.0).vacuous);
  CHECK(supdec_upper(0.1, 200.0, 4.0).raw_log_value ==
        doctest::Approx(2.0 * supdec_upper(0.1, 100.0, 4.0).raw_log_value));
  CHECK(supdec_upper(0.1, 200.0, 1.0).log_value ==
        doctest::Approx(2.0 * supdec_upper(0.1, 100.0, 1.0).log_value));
  // Boundary p + log P = 0 gives bound 1.
  const double p0 = -log_prob_abs_le(0.5);
  CHECK(supdec_upper(0.5, 3.0, p0).log_value == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(ergodic_mean_upper(0.1, 100.0, 4.0).log_value ==
        doctest::Approx(25.0 * std::log(0.1 * std::numbers::e * std::sqrt(2 / kPi))));
  CHECK(std::abs(ergodic_mean_upper(std::sqrt(kPi / 2) / std::numbers::e, 10.0, 1.0).log_value) < 1e-12);
  CHECK(ergodic_mean_upper(0.1, 1e6, 1.0).value() == 0.0);
  CHECK_THROWS_AS(ergodic_mean_upper(0.0, 1.0, 1.0), Error);
}

TEST_CASE("bound method names round trip") {
  for (auto m : {BoundMethod::SidakLower, BoundMethod::SzegoUpper, BoundMethod::RhoUpper,
                 BoundMethod::DecoUpper, BoundMethod::SupdecUpper, BoundMethod::ErgodicMeanUpper,
                 BoundMethod::DdpUpper, BoundMethod::KurddpUpper, BoundMethod::OuSupremaLower,
                 BoundMethod::OuSupremaUpper}) {
    CHECK(bound_method_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(bound_method_from_string("nope"), Error);
  CHECK_FALSE(is_upper_bound(BoundMethod::SidakLower));
  CHECK(is_upper_bound(BoundMethod::DecoUpper));
}
