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
// Invariant suites behind the `selftest` command. Each suite counts trials
// and violations of one property that must hold exactly (up to rounding).

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "sdprob/errors.hpp"
#include "sdprob/experiments.hpp"
#include "sdprob/matrix_diagnostics.hpp"
#include "sdprob/spectral.hpp"
#include "sdprob/toeplitz.hpp"

namespace sdprob {

namespace {

struct Tally {
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst = 0.0;

  void record(bool ok, double measure = 0.0) {
    ++trials;
    if (!ok) ++violations;
    worst = std::max(worst, measure);
  }
};

CheckRecord make_check(std::string name, const Tally& t, const std::string& measure_name = "") {
  if (measure_name.empty()) return {std::move(name), t.violations == 0, t.trials, t.violations, ""};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", t.worst);
  return {std::move(name), t.violations == 0, t.trials, t.violations, measure_name + " " + buf};
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

// Symmetric with |a_ii| above the off-diagonal row sum by a random margin.
Matrix random_dominant(std::mt19937_64& rng, std::size_t n, bool positive_diagonal) {
  std::uniform_real_distribution<double> margin(0.05, 2.0);
  std::bernoulli_distribution coin;
  Matrix a = random_symmetric(rng, n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s += std::abs(a(i, j));
    const double d = s + margin(rng);
    a(i, i) = (positive_diagonal || coin(rng)) ? d : -d;
  }
  return a;
}

// Mixture of cosines plus a ridge: a positive spectral measure, so SPD.
std::vector<double> random_toeplitz(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.0, 1.0), omega(0.0, 3.14159);
  std::uniform_int_distribution<int> terms(1, 4);
  const int m = terms(rng);
  std::vector<double> weights(m), freqs(m);
  for (int i = 0; i < m; ++i) {
    weights[i] = w(rng);
    freqs[i] = omega(rng);
  }
  const double ridge = 0.1 + w(rng);
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) c[k] += weights[i] * std::cos(static_cast<double>(k) * freqs[i]);
  }
  c[0] += ridge;
  return c;
}

}  // namespace

ReportDocument run_selftest(const ExperimentConfig& cfg) {
  ReportDocument doc;
  doc.library_version = library_version();
  doc.command = "selftest";
  doc.seed = cfg.seed;
  doc.config = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"workers", cfg.workers}};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> small_n(2, 8);

  {
    Tally t;
    for (int i = 0; i < 1000; ++i) {
      const auto m = boyd_mills_bounds(10.0 * i / 999.0);
      // At x = 0 both bounds equal R(0) exactly, so allow a few ulps.
      const double slack = 8.0 * std::numeric_limits<double>::epsilon() * m.reference;
      const double excess = std::max(m.lower - m.reference, m.reference - m.upper);
      t.record(excess <= slack, std::max(0.0, excess));
    }
    doc.checks.push_back(make_check("mills_ratio_bracket", t, "max excess"));
  }
  {
    Tally t;
    std::uniform_int_distribution<std::size_t> n(2, 10);
    for (int i = 0; i < 100; ++i) {
      t.record(eigenvalue_inclusion(random_symmetric(rng, n(rng))).eigenvalues_contained);
    }
    doc.checks.push_back(make_check("gershgorin_containment", t));
  }
  {
    Tally t;
    for (int i = 0; i < 100; ++i) {
      const Matrix a = random_dominant(rng, small_n(rng), false);
      const auto pb = price_determinant_bounds(a);
      const double det = std::abs(determinant(a));
      const double tol = 1e-12 * pb.upper;
      t.record(pb.lower && *pb.lower <= det + tol && det <= pb.upper + tol);
    }
    doc.checks.push_back(make_check("price_determinant_bounds", t));
  }
  {
    Tally t;
    std::normal_distribution<double> g;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = small_n(rng);
      const Matrix a = random_symmetric(rng, n);
      std::vector<double> x(n);
      for (auto& v : x) v = g(rng);
      double q = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) q += x[r] * a(r, c) * x[c];
      const auto [lo, hi] = quadratic_form_bracket(a, x);
      const double tol = 1e-12 * (1.0 + std::abs(hi) + std::abs(lo));
      t.record(lo <= q + tol && q <= hi + tol);
    }
    doc.checks.push_back(make_check("quadratic_form_bracket", t));
  }
  {
    Tally t;
    for (int i = 0; i < 100; ++i) {
      const Matrix a = random_dominant(rng, small_n(rng), true);
      const double r = *dominance_report(a, true).r;
      const double lam = comparison_matrix_min_eigenvalue(a, r);
      t.record(lam >= -1e-10, std::max(0.0, -lam));
    }
    doc.checks.push_back(make_check("comparison_matrix_psd", t, "most negative eigenvalue"));
  }
  {
    Tally t;
    std::uniform_int_distribution<std::size_t> n(1, 12);
    for (int i = 0; i < 100; ++i) {
      const std::size_t size = n(rng);
      const ToeplitzSystem sys(random_toeplitz(rng, size));
      const auto pe = levinson_error_variances(sys);
      const Matrix full(size, sys.dense(size));
      const Matrix l = cholesky(full);
      double prev_det = 1.0, worst = 0.0;
      for (std::size_t j = 1; j <= size; ++j) {
        const double det = determinant(Matrix(j, ToeplitzSystem({sys.coefficients().begin(),
                                                                 sys.coefficients().begin() + j})
                                                     .dense(j)));
        const double th = pe.theta_sq[j - 1];
        worst = std::max({worst, std::abs(th - det / prev_det) / th,
                          std::abs(th - l(j - 1, j - 1) * l(j - 1, j - 1)) / th});
        prev_det = det;
      }
      t.record(worst <= 1e-10, worst);
    }
    doc.checks.push_back(make_check("levinson_vs_dense", t, "max relative error"));
  }
  {
    Tally t;
    for (double b : {0.5, 1.0, 2.0}) {
      const double g = geometric_mean(SpectralDensity::ou_increment(b)).value;
      const double err = std::abs(g / -std::expm1(-b) - 1.0);
      t.record(err <= 1e-8, err);
    }
    for (double r : {0.3, 0.5, 0.9}) {
      const double g = geometric_mean(SpectralDensity::poisson(r)).value;
      const double err = std::abs(g / (1.0 - r * r) - 1.0);
      t.record(err <= 1e-8, err);
    }
    doc.checks.push_back(make_check("geometric_mean_closed_forms", t, "max relative error"));
  }
  {
    Tally t;
    const std::vector<CovarianceModel> models{
        CovarianceModel::ou(), CovarianceModel::poisson_kernel_ar1(0.3),
        CovarianceModel::poisson_kernel_ar1(0.9), damped_cosine_covariance(0.5, 1.0),
        gaussian_covariance(0.7)};
    for (const auto& m : models) {
      const auto gm = geometric_mean(density_for(m), 1024);
      const double G = gm.integrable ? gm.value : 0.0;
      for (std::size_t n : {1, 5, 30}) {
        for (double z : {0.25, 0.5, 1.0, 2.0}) {
          const std::vector<double> zs(n, z), sig(n, 1.0);
          const double lo = sidak_lower(zs, sig).log_value;
          const double hi = szego_upper(n, z, G).log_value;
          t.record(lo <= hi + 1e-12, std::max(0.0, lo - hi));
        }
      }
    }
    doc.checks.push_back(make_check("sidak_below_szego", t, "max excess"));
  }
  {
    Tally t;
    const auto ou = CovarianceModel::ou();
    const auto pe = levinson_error_variances(ToeplitzSystem({1.0, 0.5, 0.25, 0.125, 0.0625}));
    for (double z : {0.25, 0.5, 1.0}) {
      double prev_sz = 1.0, prev_rho = 1.0;
      for (std::size_t n = 1; n <= 5; ++n) {
        const double sz = szego_upper(n, z, 0.75).log_value;
        PredictionErrorSequence part{{pe.theta_sq.begin(), pe.theta_sq.begin() + n},
                                     {pe.rho.begin(), pe.rho.begin() + n},
                                     {pe.reflection.begin(), pe.reflection.begin() + n}};
        const double zs[] = {z};
        const double rh = rho_upper(zs, part).log_value;
        t.record(sz <= prev_sz && rh <= prev_rho);
        t.record(sz <= szego_upper(n, 1.5 * z, 0.75).log_value);
        prev_sz = sz;
        prev_rho = rh;
      }
    }
    const double d20 = deco_upper(ou, 20.0, 0.5).log_value;
    const double d40 = deco_upper(ou, 40.0, 0.5).log_value;
    t.record(d40 <= d20 && std::abs(d40 - 2.0 * d20) <= 1e-9 * std::abs(d40));
    double prev_sd = 1.0, prev_em = 1.0;
    for (double B : {10.0, 20.0, 40.0}) {
      const double sd = supdec_upper(0.1, B, 4.0).log_value;
      const double em = ergodic_mean_upper(0.1, B, 4.0).log_value;
      t.record(sd <= prev_sd && em <= prev_em);
      prev_sd = sd;
      prev_em = em;
    }
    doc.checks.push_back(make_check("bound_monotonicity", t));
  }
  {
    Tally t;
    SamplerSpec spec;
    spec.params = Ar1Params{std::exp(-0.5), 20, false};
    spec.seed = cfg.seed;
    const auto a = estimate_sup_probability(spec, 1.5, 20'000, 1);
    const auto b = estimate_sup_probability(spec, 1.5, 20'000, 3);
    t.record(a == b);
    doc.checks.push_back(make_check("monte_carlo_worker_independence", t));
  }
  {
    Tally t;
    const std::vector<nlohmann::json> models{
        {{"kind", "ou"}}, {{"kind", "poisson_kernel"}, {"r", 0.5}},
        {{"kind", "ou_increments"}, {"b", 1.0}}, {{"kind", "iid"}}};
    for (std::size_t m = 0; m < models.size(); ++m) {
      ExperimentConfig sub = cfg;
      sub.model = models[m];
      sub.bounds.clear();
      for (const char* method : {"sidak_lower", "szego_upper", "rho_upper"}) {
        sub.bounds.push_back({bound_method_from_string(method), {{"n", 10}, {"z", 1.0}}, {}});
      }
      sub.inject_broken_bound = false;
      const auto rep = run_verify(sub);
      for (const auto& v : rep.verdicts) t.record(v.verdict != Verdict::Fail);
    }
    doc.checks.push_back(make_check("bound_direction_soundness", t));
  }
  return doc;
}

}  // namespace sdprob
