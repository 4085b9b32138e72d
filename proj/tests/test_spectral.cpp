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
#include "sdprob/errors.hpp"
#include "sdprob/spectral.hpp"

using namespace sdprob;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed-form densities") {
  CHECK(poisson_kernel(0.5, 0.0) == doctest::Approx(3.0));
  CHECK(poisson_kernel(0.5, kPi) == doctest::Approx(1.0 / 3.0));
  CHECK(ou_increment_density(1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(poisson_kernel(1.2, 0.0), Error);
  CHECK_THROWS_AS(ou_increment_density(-1.0, 0.0), Error);
}

TEST_CASE("analytic coefficients agree with quadrature") {
  for (const auto& f : {SpectralDensity::poisson(0.6), SpectralDensity::ou_increment(0.8)}) {
    REQUIRE(f.has_exact_coefficients());
    const auto c = extract_fourier_coefficients(f, 12, 1 << 14);
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(c[k] == doctest::Approx(f.exact_coefficient(k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("fourier series round trip") {
  const std::vector<double> c{1.0, 0.3, -0.2, 0.05};
  const auto f = SpectralDensity::fourier_series(c);
  CHECK(f(0.0) == doctest::Approx(1.0 + 2.0 * (0.3 - 0.2 + 0.05)));
  const auto back = extract_fourier_coefficients(f, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(back[k] == doctest::Approx(k < c.size() ? c[k] : 0.0).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("geometric mean of closed forms") {
  for (double b : {0.5, 1.0, 2.0}) {
    const auto g = geometric_mean(SpectralDensity::ou_increment(b));
    CHECK(g.integrable);
    CHECK(g.value == doctest::Approx(1.0 - std::exp(-b)).epsilon(1e-8));
  }
  for (double r : {0.3, 0.5, 0.9}) {
    CHECK(geometric_mean(SpectralDensity::poisson(r)).value ==
          doctest::Approx(1.0 - r * r).epsilon(1e-8));
  }
  CHECK(geometric_mean(SpectralDensity::constant(2.5)).value == doctest::Approx(2.5));
}

TEST_CASE("geometric mean properties") {
  const auto f = SpectralDensity::poisson(0.4);
  const double g = geometric_mean(f).value;
  // Scaling: G(cf) = c G(f).
  const auto scaled = SpectralDensity::from_callable("scaled", [&](double t) { return 3.0 * f(t); });
  CHECK(geometric_mean(scaled).value == doctest::Approx(3.0 * g).epsilon(1e-10));
  // Jensen: G(f) <= c_0.
  CHECK(g <= f.exact_coefficient(0));
}

TEST_CASE("vanishing density on an interval is not log-integrable") {
  const auto bl = density_for(bandlimited_covariance(1.0));
  const auto g = geometric_mean(bl);
  CHECK_FALSE(g.integrable);
  CHECK(g.value == 0.0);
}

TEST_CASE("non-integrable log singularity is detected") {
  // exp(-1/|t|) vanishes to infinite order at 0: log f = -1/|t| is not integrable.
  const auto f = SpectralDensity::from_callable("flat", [](double t) { return std::exp(-1.0 / std::abs(t)); });
  CHECK_FALSE(geometric_mean(f).integrable);
}

TEST_CASE("clipping of truncated series") {
  const auto neg = SpectralDensity::fourier_series({1.0, 0.5 + 1e-11});
  CHECK(neg.raw(kPi) < 0.0);
  CHECK(neg(kPi) == 0.0);
  CHECK(neg.clip_warning());
  const auto g = geometric_mean(neg, 1024);
  CHECK(g.integrable);

  const auto bad = SpectralDensity::fourier_series({1.0, 0.6});
  CHECK_THROWS_AS(geometric_mean(bad), Error);
}

TEST_CASE("density_for prefers closed forms") {
  const auto ou = density_for(CovarianceModel::ou());
  CHECK(ou.name() == "poisson_kernel");
  CHECK(ou(0.3) == doctest::Approx(poisson_kernel(std::exp(-0.5), 0.3)));
  const auto damped = density_for(damped_cosine_covariance(0.5, 1.0), 256);
  CHECK(damped.truncation_order() == 256);
}
