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
// Acceptance suite: one PASS/FAIL line per criterion. `acceptance --only K`
// runs criterion K alone; the exit status is nonzero when any selected
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdprob/bounds.hpp"
#include "sdprob/experiments.hpp"
#include "sdprob/gaussian.hpp"
#include "sdprob/linalg.hpp"
#include "sdprob/matrix_diagnostics.hpp"
#include "sdprob/monte_carlo.hpp"
#include "sdprob/spectral.hpp"
#include "sdprob/toeplitz.hpp"

using namespace sdprob;
using nlohmann::json;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Result()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Dense determinant by elimination with partial pivoting; independent oracle.
double oracle_det(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    if (a[p * n + k] == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

std::string verdict_summary(const ReportDocument& doc) {
  std::ostringstream os;
  for (const auto& v : doc.verdicts) {
    const auto& b = doc.bounds[v.bound_index];
    const auto& e = doc.estimates[v.estimate_index];
    os << " [" << to_string(b.method) << " bound=" << fmt(b.value()) << " ci=(" << fmt(e.ci_low)
       << "," << fmt(e.ci_high) << ") " << to_string(v.verdict) << "]";
  }
  return os.str();
}

bool all_pass(const ReportDocument& doc) {
  if (doc.verdicts.empty()) return false;
  for (const auto& v : doc.verdicts)
    if (v.verdict != Verdict::Pass) return false;
  return true;
}

Result geometric_mean_ou_increment() {
  double worst = 0.0;
  for (double b : {0.5, 1.0, 2.0}) {
    const auto g = geometric_mean(SpectralDensity::ou_increment(b));
    worst = std::max(worst, g.integrable ? rel(g.value, 1 - std::exp(-b)) : INFINITY);
  }
  return {worst < 1e-8, "max rel err " + fmt(worst)};
}

Result geometric_mean_poisson() {
  double worst = 0.0;
  for (double r : {0.3, 0.5, 0.9}) {
    const auto g = geometric_mean(SpectralDensity::poisson(r));
    worst = std::max(worst, g.integrable ? rel(g.value, 1 - r * r) : INFINITY);
  }
  return {worst < 1e-8, "max rel err " + fmt(worst)};
}

Result levinson_oracles() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    std::vector<double> c(n, 0.0);
    for (int m = 0; m < 3; ++m) {
      const double w = u(rng), om = 3.0 * u(rng);
      for (std::size_t k = 0; k < n; ++k) c[k] += w * std::cos(om * double(k));
    }
    c[0] += 0.05 + u(rng);
    const ToeplitzSystem sys(c);
    const auto pe = levinson_error_variances(sys);
    const Matrix l = cholesky(Matrix(n, sys.dense(n)));
    double prev = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double det = oracle_det(ToeplitzSystem({c.begin(), c.begin() + j}).dense(j), j);
      worst = std::max(worst, rel(pe.theta_sq[j - 1], det / prev));
      worst = std::max(worst, rel(pe.theta_sq[j - 1], l(j - 1, j - 1) * l(j - 1, j - 1)));
      prev = det;
    }
  }
  std::vector<double> kms(12);
  for (std::size_t k = 0; k < kms.size(); ++k) kms[k] = std::pow(0.5, double(k));
  const auto pe = levinson_error_variances(ToeplitzSystem(kms));
  double kms_err = 0.0;
  for (std::size_t j = 1; j < pe.theta_sq.size(); ++j) kms_err = std::max(kms_err, std::abs(pe.theta_sq[j] - 0.75));
  return {worst < 1e-10 && kms_err < 1e-10, "max rel err " + fmt(worst) + ", KMS err " + fmt(kms_err)};
}

Result deco_p_limit() {
  const double p = deco_p(CovarianceModel::ou(), 1e-3).p;
  return {p >= 1.499 && p <= 1.501, "p(1e-3) = " + fmt(p)};
}

Result ou_increment_sandwich() {
  const auto cfg = parse_config({{"model", {{"kind", "ou_increments"}, {"b", 1.0}}},
                                 {"samples", 100000},
                                 {"seed", 5},
                                 {"bounds",
                                  {{{"method", "sidak_lower"}, {"n", 30}, {"z", {0.5, 1.0, 2.0}}},
                                   {{"method", "szego_upper"}, {"n", 30}, {"z", {0.5, 1.0, 2.0}}}}}});
  const auto doc = run_verify(cfg);
  // Independent closed forms for the bound values.
  const double sigma = std::sqrt(2 * (1 - std::exp(-0.5))), G = 1 - std::exp(-1.0);
  const double zs[] = {0.5, 1.0, 2.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, rel(doc.bounds[i].log_value, 30 * log_prob_abs_le(zs[i] / sigma)));
    worst = std::max(worst, rel(doc.bounds[3 + i].log_value, 30 * log_prob_abs_le(zs[i] / std::sqrt(G))));
  }
  return {all_pass(doc) && doc.verdicts.size() == 6 && worst < 1e-8,
          "bound rel err " + fmt(worst) + verdict_summary(doc)};
}

Result deco_grid() {
  const auto cfg = parse_config({{"model", {{"kind", "ou"}}},
                                 {"samples", 100000},
                                 {"seed", 6},
                                 {"bounds", {{{"method", "deco_upper"}, {"T", {20.0, 50.0}}, {"a", {0.3, 0.5}}}}}});
  const auto doc = run_verify(cfg);
  return {all_pass(doc) && doc.verdicts.size() == 4, verdict_summary(doc)};
}

Result boyd_bracket() {
  // The quadrature reference carries a few ulps of rounding; at x = 0 both
  // bounds equal R(0) exactly, so the comparison allows 8 ulps.
  std::size_t violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 10.0 * i / 999.0;
    const auto m = boyd_mills_bounds(x);
    const double slack = 8 * std::numeric_limits<double>::epsilon() * m.reference;
    if (m.lower > m.reference + slack || m.reference > m.upper + slack) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 1000 points"};
}

Result matrix_suites() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::size_t ger = 0, price = 0, quad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 9;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
    const auto region = eigenvalue_inclusion(a);
    for (double lam : region.eigenvalues) {
      bool inside = false;
      for (const auto& d : region.gershgorin_disks) inside |= std::abs(lam - d.center) <= d.radius + 1e-10;
      if (!inside) ++ger;
    }
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 8;
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
    const auto b = price_determinant_bounds(a);
    const double det = std::abs(oracle_det({a.data().begin(), a.data().end()}, n));
    if (!b.lower || *b.lower > det * (1 + 1e-12) || det > b.upper * (1 + 1e-12)) ++price;
  }
  std::normal_distribution<double> g;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 8;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
    std::vector<double> x(n);
    for (auto& v : x) v = g(rng);
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += x[i] * a(i, j) * x[j];
    const auto [lo, hi] = quadratic_form_bracket(a, x);
    const double tol = 1e-12 * (1 + std::abs(q));
    if (q < lo - tol || q > hi + tol) ++quad;
  }
  return {ger + price + quad == 0, "violations: gershgorin " + std::to_string(ger) + ", price " +
                                       std::to_string(price) + ", quadratic form " + std::to_string(quad)};
}

Result ddp_soundness() {
  const std::size_t n = 10;
  Matrix cov = Matrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) cov(i, i + 1) = cov(i + 1, i) = 0.25;
  const auto dom = dominance_report(cov, true);
  const double r = *dom.r;
  const std::vector<double> var(n, 1.0);
  const auto bound = ddp_upper(var, r, 1.0);
  SamplerSpec spec;
  spec.params = CholeskyParams{cov};
  spec.seed = 9;
  const auto est = estimate_sup_probability(spec, 1.0, 100000);
  const double lam = comparison_matrix_min_eigenvalue(cov, r);
  return {std::abs(r - 0.5) < 1e-15 && est.ci_low <= bound.value() && lam >= -1e-10,
          "r = " + fmt(r) + ", bound " + fmt(bound.value()) + ", ci = (" + fmt(est.ci_low) + ", " +
              fmt(est.ci_high) + "), comparison min eigenvalue " + fmt(lam)};
}

Result weyl_convergence() {
  const auto f = SpectralDensity::poisson(0.5);
  std::vector<double> diffs;
  for (std::size_t n : {32, 64, 128, 256}) {
    const auto w = weyl_check(f, n, WeylFunction::Log);
    diffs.push_back(std::abs(w.eigenvalue_average - std::log(0.75)));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < diffs.size(); ++i) decreasing &= diffs[i] < diffs[i - 1];
  std::string d;
  for (double v : diffs) d += (d.empty() ? "" : ", ") + fmt(v);
  return {decreasing && diffs.back() < 0.02, "differences " + d};
}

Result ou_suprema_sandwich() {
  const auto cfg = parse_config({{"model", {{"kind", "ou"}}},
                                 {"samples", 100000},
                                 {"seed", 11},
                                 {"bounds",
                                  {{{"method", "ou_suprema_lower"}, {"intervals", {{0.0, 1.0}, {2.0, 3.0}}},
                                    {"z", 1.0}, {"grid_per_unit", 64}},
                                   {{"method", "ou_suprema_upper"}, {"intervals", {{0.0, 1.0}, {2.0, 3.0}}},
                                    {"z", 1.0}, {"grid_per_unit", 64}}}}});
  const auto doc = run_verify(cfg);
  const double p_expect = (1 + std::exp(-2.0)) / (1 - std::exp(-2.0));
  const double p = doc.bounds.at(1).parameters.at("p");
  return {all_pass(doc) && doc.verdicts.size() == 2 && rel(p, p_expect) < 1e-14,
          "p = " + fmt(p) + verdict_summary(doc)};
}

Result littlewood_consistency() {
  const std::size_t N = 16;
  std::vector<double> amp(N, 1.0 / std::sqrt(double(N)));
  std::vector<long long> freq(N);
  for (std::size_t k = 0; k < N; ++k) freq[k] = static_cast<long long>(k + 1);
  const auto est = estimate_trig_sup_probability(amp, freq, {0.0, 1.0}, 1024, 1.0, 100000, 12);
  const double P = est.p_hat > 0 ? est.p_hat : est.ci_high;
  const double theta = lebesgue_constant(freq);
  const double lower = littlewood_lower(N, 1.0, 1.0, P);
  return {theta >= lower, "theta_16 = " + fmt(theta) + ", lower = " + fmt(lower) + " (P_sup " + fmt(P) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria = {
      {1, "geometric mean of the OU increment density", 1, geometric_mean_ou_increment},
      {2, "geometric mean of the Poisson kernel", 1, geometric_mean_poisson},
      {3, "Levinson against determinant and Cholesky oracles", 5, levinson_oracles},
      {4, "increment decoupling coefficient near b = 0", 1, deco_p_limit},
      {5, "Sidak / Szego sandwich for OU increments", 30, ou_increment_sandwich},
      {6, "deco bound grid-level soundness", 60, deco_grid},
      {7, "Boyd Mills-ratio bracket", 1, boyd_bracket},
      {8, "Gershgorin, Price and quadratic-form suites", 10, matrix_suites},
      {9, "ddp bound soundness and comparison matrix", 10, ddp_soundness},
      {10, "Weyl equidistribution convergence", 30, weyl_convergence},
      {11, "OU disjoint-interval sandwich", 60, ou_suprema_sandwich},
      {12, "Lebesgue constant against the Littlewood lower bound", 60, littlewood_consistency},
  };
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < c.budget_seconds;
    const bool ok = r.pass && in_time;
    failures += !ok;
    std::printf("%s criterion %2d: %s (%.2fs of %.0fs%s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, dt,
                c.budget_seconds, in_time ? "" : ", over budget", r.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion selected\n");
    return 2;
  }
  std::printf("%d of %d criteria passed\n", ran - failures, ran);
  return failures ? 1 : 0;
}
