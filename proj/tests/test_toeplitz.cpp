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
#include <random>

#include "doctest.h"
#include "sdprob/errors.hpp"
#include "sdprob/linalg.hpp"
#include "sdprob/toeplitz.hpp"

using namespace sdprob;

namespace {

std::vector<double> kms(double r, std::size_t n) {
  std::vector<double> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = std::pow(r, double(k));
  return c;
}

// Cosine mixture plus ridge: SPD for every size.
std::vector<double> random_spd(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c(n, 0.0);
  for (int m = 0; m < 3; ++m) {
    const double w = u(rng), om = 3.0 * u(rng);
    for (std::size_t k = 0; k < n; ++k) c[k] += w * std::cos(om * double(k));
  }
  c[0] += 0.05 + u(rng);
  return c;
}

}  // namespace

TEST_CASE("KMS prediction errors") {
  const auto pe = levinson_error_variances(ToeplitzSystem(kms(0.5, 10)));
  CHECK(pe.theta_sq[0] == doctest::Approx(1.0));
  for (std::size_t j = 1; j < 10; ++j) CHECK(std::abs(pe.theta_sq[j] - 0.75) < 1e-14);
  CHECK(pe.reflection[1] == doctest::Approx(0.5));
  CHECK(pe.rho[3] == doctest::Approx(1.0 / 0.75));
}

TEST_CASE("identity system") {
  const auto pe = levinson_error_variances(ToeplitzSystem({1.0, 0.0, 0.0, 0.0}));
  for (double t : pe.theta_sq) CHECK(t == 1.0);
}

TEST_CASE("Levinson against dense determinants and Cholesky") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const ToeplitzSystem sys(random_spd(rng, n));
    const auto pe = levinson_error_variances(sys);
    const Matrix l = cholesky(Matrix(n, sys.dense(n)));
    double prev = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const ToeplitzSystem lead({sys.coefficients().begin(), sys.coefficients().begin() + j});
      const double det = determinant(Matrix(j, lead.dense(j)));
      CHECK(pe.theta_sq[j - 1] == doctest::Approx(det / prev).epsilon(1e-10));
      CHECK(pe.theta_sq[j - 1] == doctest::Approx(l(j - 1, j - 1) * l(j - 1, j - 1)).epsilon(1e-10));
      prev = det;
    }
  }
}

TEST_CASE("prediction errors are nonincreasing") {
  std::mt19937_64 rng(11);
  const auto pe = levinson_error_variances(ToeplitzSystem(random_spd(rng, 12)));
  for (std::size_t j = 1; j < pe.theta_sq.size(); ++j) {
    CHECK(pe.theta_sq[j] <= pe.theta_sq[j - 1] * (1 + 1e-14));
  }
}

TEST_CASE("singular and indefinite systems are reported with their order") {
  try {
    levinson_error_variances(ToeplitzSystem({1.0, 1.0, 1.0}));
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.order() == 2);
  }
  try {
    levinson_error_variances(ToeplitzSystem({1.0, 0.9, 0.0}));
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.order() == 3);
  }
  CHECK_THROWS_AS(levinson_error_variances(ToeplitzSystem({0.0})), NotPositiveDefinite);
}

TEST_CASE("determinant root limit for the Poisson kernel") {
  const auto f = SpectralDensity::poisson(0.5);
  for (std::size_t n : {4, 16, 64}) {
    // det Gamma_{n+1} = 0.75^n for KMS.
    CHECK(determinant_root_limit(f, n) ==
          doctest::Approx(std::pow(std::pow(0.75, double(n)), 1.0 / double(n + 1))).epsilon(1e-12));
  }
}

TEST_CASE("Weyl comparison") {
  const auto f = SpectralDensity::poisson(0.5);
  double prev = 1.0;
  for (std::size_t n : {32, 64, 128}) {
    const auto w = weyl_check(f, n, WeylFunction::Log);
    CHECK(w.spectral_integral == doctest::Approx(std::log(0.75)).epsilon(1e-9));
    const double diff = std::abs(w.eigenvalue_average - w.spectral_integral);
    CHECK(diff < prev);
    prev = diff;
  }
  // F = identity: average eigenvalue is the trace c_0 exactly.
  const auto id = weyl_check(f, 16, WeylFunction::Identity);
  CHECK(id.eigenvalue_average == doctest::Approx(1.0));
  CHECK(id.spectral_integral == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(weyl_check(f, 2, WeylFunction::Log), Error);
}

TEST_CASE("dense linear algebra helpers") {
  const Matrix a(2, {2.0, 1.0, 1.0, 2.0});
  CHECK(determinant(a) == doctest::Approx(3.0));
  const auto ev = symmetric_eigenvalues(a);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
  CHECK_THROWS_AS(symmetric_eigenvalues(Matrix(2, {1.0, 2.0, 0.0, 1.0})), Error);
  try {
    cholesky(Matrix(2, {1.0, 2.0, 2.0, 1.0}));
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.order() == 2);
  }
}
