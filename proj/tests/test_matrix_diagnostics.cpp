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
#include "sdprob/gaussian.hpp"
#include "sdprob/matrix_diagnostics.hpp"

using namespace sdprob;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

Matrix random_dominant(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      a(i, j) = u(rng);
      s += std::abs(a(i, j));
    }
    a(i, i) = (u(rng) < 0 ? -1.0 : 1.0) * (s + 0.01 + std::abs(u(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("dominance report") {
  const auto id = dominance_report(Matrix::identity(4));
  CHECK(id.is_dominant);
  CHECK(*id.r == 0.0);

  const auto d = dominance_report(Matrix(2, {2.0, 1.0, 1.0, 2.0}));
  CHECK(d.is_dominant);
  CHECK(d.A == std::vector<double>{1.0, 1.0});
  CHECK(d.m == std::vector<double>{1.0, 1.0});
  CHECK(d.M == std::vector<double>{3.0, 3.0});
  CHECK(*d.r == doctest::Approx(0.5));

  Matrix kms(5);
  double max_row = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
      kms(i, j) = std::pow(0.5, std::abs(double(i) - double(j)));
      if (i != j) s += kms(i, j);
    }
    max_row = std::max(max_row, s);
  }
  const auto k = dominance_report(kms);
  CHECK(k.is_dominant == (max_row < 1.0));
  CHECK(*k.r == doctest::Approx(max_row));

  CHECK_THROWS_AS(dominance_report(Matrix(2, {-1.0, 0.0, 0.0, 1.0}), true), Error);
}

TEST_CASE("Price determinant bounds") {
  const auto p = price_determinant_bounds(Matrix(2, {2.0, 1.0, 1.0, 2.0}));
  CHECK(*p.lower == doctest::Approx(1.0));
  CHECK(p.upper == doctest::Approx(9.0));
  const auto diag = price_determinant_bounds(Matrix(3, {2, 0, 0, 0, -3, 0, 0, 0, 0.5}));
  CHECK(*diag.lower == doctest::Approx(3.0));
  CHECK(diag.upper == doctest::Approx(3.0));
  CHECK_FALSE(price_determinant_bounds(Matrix(2, {1.0, 2.0, 2.0, 1.0})).lower.has_value());

  std::mt19937_64 rng(3);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_dominant(rng, 1 + t % 8);
    const auto b = price_determinant_bounds(a);
    const double det = std::abs(determinant(a));
    if (!(*b.lower <= det * (1 + 1e-12) && det <= b.upper * (1 + 1e-12))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("Gershgorin and Brauer regions") {
  const auto diag = eigenvalue_inclusion(Matrix(3, {1, 0, 0, 0, 2, 0, 0, 0, 5}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(diag.gershgorin_disks[i].radius == 0.0);
  CHECK(diag.eigenvalues == std::vector<double>{1.0, 2.0, 5.0});
  CHECK(diag.eigenvalues_contained);

  const auto two = eigenvalue_inclusion(Matrix(2, {2.0, 1.0, 1.0, 2.0}));
  CHECK(two.gershgorin_disks[0].center == 2.0);
  CHECK(two.gershgorin_disks[0].radius == 1.0);
  CHECK(two.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(two.eigenvalues[1] == doctest::Approx(3.0));
  CHECK(two.eigenvalues_contained);
  CHECK(two.brauer_condition);
  CHECK(two.determinant_positive_certified);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) CHECK(eigenvalue_inclusion(random_symmetric(rng, 10)).eigenvalues_contained);
}

TEST_CASE("ddp and kurddp bounds") {
  const std::vector<double> s(10, 1.0);
  CHECK(ddp_upper(s, 0.0, 1.0).log_value == doctest::Approx(10 * log_prob_abs_le(1.0)));
  CHECK(ddp_upper(s, 0.5, 1.0).log_value == doctest::Approx(10 * log_prob_abs_le(std::sqrt(2.0))));
  CHECK_THROWS_AS(ddp_upper(s, 1.0, 1.0), Error);

  const double z[] = {0.7};
  CHECK(kurddp_upper(Matrix::identity(6), z).log_value ==
        doctest::Approx(6 * log_prob_abs_le(0.7)));
  Matrix tri = Matrix::identity(4);
  for (std::size_t i = 0; i + 1 < 4; ++i) tri(i, i + 1) = tri(i + 1, i) = 0.25;
  double expect = 0.0;
  for (int j = 0; j < 4; ++j) expect += log_prob_abs_le(0.7 * std::pow(1.5, j / 2.0));
  CHECK(kurddp_upper(tri, z).log_value == doctest::Approx(expect));
}

TEST_CASE("quadratic form bracket") {
  const double zero[] = {0.0, 0.0};
  const auto q0 = quadratic_form_bracket(Matrix(2, {2.0, 1.0, 1.0, 2.0}), zero);
  CHECK(q0.first == 0.0);
  CHECK(q0.second == 0.0);
  const double x[] = {1.0, -2.0, 3.0};
  const auto qi = quadratic_form_bracket(Matrix::identity(3), x);
  CHECK(qi.first == 14.0);
  CHECK(qi.second == 14.0);

  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 8;
    const Matrix a = random_symmetric(rng, n);
    std::vector<double> v(n);
    for (auto& e : v) e = g(rng);
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * a(i, j) * v[j];
    const auto [lo, hi] = quadratic_form_bracket(a, v);
    const double tol = 1e-12 * (1 + std::abs(q));
    if (q < lo - tol || q > hi + tol) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("comparison matrix is PSD under row-sum dominance") {
  Matrix tri = Matrix::identity(10);
  for (std::size_t i = 0; i + 1 < 10; ++i) tri(i, i + 1) = tri(i + 1, i) = 0.25;
  CHECK(comparison_matrix_min_eigenvalue(tri, 0.5) >= -1e-10);
}
