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
#include "sdprob/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "sdprob/errors.hpp"
#include "sdprob/matrix_diagnostics.hpp"
#include "sdprob/spectral.hpp"
#include "sdprob/toeplitz.hpp"

namespace sdprob {

using nlohmann::json;

namespace {

// Keys whose array values span a grid axis; other array-valued keys
// (intervals, matrix) are single list-valued parameters.
const std::set<std::string> kAxisKeys = {"n", "z", "T", "a", "B", "p", "theta", "r", "G",
                                         "grid_per_unit"};

const std::set<std::string> kSpecialSweeps = {"deco_p", "deco_epsilon", "lebesgue_constant",
                                              "determinant_root_limit", "geometric_mean"};

constexpr std::size_t kCholeskyLimit = 1024;

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::Config, what); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  return splitmix(splitmix(splitmix(seed + a) + b) + c);
}

std::vector<json> expand_grid(const json& params) {
  std::vector<json> points{json::object()};
  for (const auto& [k, v] : params.items()) {
    const bool axis = v.is_array() && kAxisKeys.count(k);
    std::vector<json> next;
    for (const auto& p : points) {
      if (axis) {
        for (const auto& x : v) {
          json q = p;
          q[k] = x;
          next.push_back(std::move(q));
        }
      } else {
        json q = p;
        q[k] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

double number(const json& point, const std::string& key, const std::string& where) {
  if (!point.contains(key)) config_error(where + ": missing parameter '" + key + "'");
  const auto& v = point.at(key);
  if (!v.is_number()) config_error(where + ": parameter '" + key + "' must be a number");
  return v.get<double>();
}

std::optional<double> maybe_number(const json& point, const std::string& key,
                                   const std::string& where) {
  if (!point.contains(key)) return std::nullopt;
  return number(point, key, where);
}

std::size_t count(const json& point, const std::string& key, const std::string& where,
                  std::optional<std::size_t> fallback = std::nullopt) {
  if (!point.contains(key)) {
    if (fallback) return *fallback;
    config_error(where + ": missing parameter '" + key + "'");
  }
  const double v = number(point, key, where);
  if (!(v >= 1.0) || v != std::floor(v)) {
    config_error(where + ": parameter '" + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Context {
  const ExperimentConfig& cfg;
  CovarianceModel model;
  std::optional<GeometricMeanResult> gm;

  explicit Context(const ExperimentConfig& c) : cfg(c), model(model_from_json(c.model)) {}

  double geometric_mean_value() {
    if (!gm) gm = geometric_mean(density_for(model, cfg.truncation), cfg.quadrature_points);
    return gm->integrable ? gm->value : 0.0;
  }
};

// Stationary sequence model(k * step), k = 0..n-1.
SamplerSpec sequence_spec(const CovarianceModel& model, std::size_t n, double step,
                          std::uint64_t seed) {
  SamplerSpec spec;
  spec.seed = seed;
  const auto& closed = model.closed_form_density();
  if (auto r = model.ar1_coefficient(); r && model.variance() == 1.0) {
    spec.params = Ar1Params{std::pow(*r, step), n, false};
  } else if (closed && closed->family == ClosedFormDensity::Family::OuIncrement && step == 1.0) {
    spec.params = Ar1Params{std::exp(-0.5 * closed->parameter), n, true};
  } else {
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = model(static_cast<double>(k) * step);
    if (n <= kCholeskyLimit) {
      spec.params = CholeskyParams{Matrix(n, ToeplitzSystem(c).dense(n))};
    } else {
      spec.params = CirculantParams{std::move(c), false};
    }
  }
  return spec;
}

// Increment sequence xi_b(j), j = 1..n, of a continuous-time model.
SamplerSpec increment_spec(const CovarianceModel& model, double b, std::size_t n,
                           std::uint64_t seed) {
  SamplerSpec spec;
  spec.seed = seed;
  if (auto r = model.ar1_coefficient(); r && model.variance() == 1.0) {
    spec.params = Ar1Params{std::pow(*r, b), n, true};
    return spec;
  }
  std::vector<double> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = increment_covariance(model, b, static_cast<long long>(k));
  if (n <= kCholeskyLimit) {
    spec.params = CholeskyParams{Matrix(n, ToeplitzSystem(c).dense(n))};
  } else {
    spec.params = CirculantParams{std::move(c), false};
  }
  return spec;
}

Matrix matrix_param(const json& point, Context& ctx, const std::string& where) {
  if (point.contains("matrix")) {
    const auto& m = point.at("matrix");
    if (!m.is_array() || m.empty()) config_error(where + ": 'matrix' must be a nonempty array of rows");
    const std::size_t n = m.size();
    std::vector<double> data;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != n) config_error(where + ": 'matrix' must be square");
      for (const auto& v : row) data.push_back(v.get<double>());
    }
    return Matrix(n, std::move(data));
  }
  const std::size_t n = count(point, "n", where);
  std::vector<double> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = ctx.model(static_cast<double>(k));
  return Matrix(n, ToeplitzSystem(c).dense(n));
}

struct Outcome {
  BoundReport bound;
  std::optional<MonteCarloEstimate> estimate;
  std::vector<MonteCarloEstimate> auxiliary;
  VerifyMode mode = VerifyMode::Consistency;
};

MonteCarloEstimate sup_estimate(const SamplerSpec& spec, double z, const ExperimentConfig& cfg,
                                const std::string& tag) {
  auto e = estimate_sup_probability(spec, z, cfg.samples, cfg.workers);
  e.event_description = tag;
  return e;
}

Outcome evaluate(BoundMethod method, const json& point, Context& ctx, bool sample,
                 std::uint64_t seed) {
  const std::string where = std::string(to_string(method)) + " " + point.dump();
  const auto& cfg = ctx.cfg;
  const auto& model = ctx.model;
  Outcome out;
  try {
    switch (method) {
      case BoundMethod::SidakLower:
      case BoundMethod::SzegoUpper:
      case BoundMethod::RhoUpper: {
        const std::size_t n = count(point, "n", where);
        const double z = number(point, "z", where);
        if (method == BoundMethod::SidakLower) {
          const std::vector<double> zs(n, z), sig(n, std::sqrt(model.variance()));
          out.bound = sidak_lower(zs, sig);
        } else if (method == BoundMethod::SzegoUpper) {
          const double G = maybe_number(point, "G", where).value_or(ctx.geometric_mean_value());
          out.bound = szego_upper(n, z, G);
        } else {
          std::vector<double> c(n);
          for (std::size_t k = 0; k < n; ++k) c[k] = model(static_cast<double>(k));
          const double zs[] = {z};
          out.bound = rho_upper(zs, levinson_error_variances(ToeplitzSystem(std::move(c))));
        }
        out.bound.parameters["z"] = z;
        out.bound.event = "max_{j<=" + std::to_string(n) + "} |X_j| <= " + fmt(z);
        if (sample) out.estimate = sup_estimate(sequence_spec(model, n, 1.0, seed), z, cfg, out.bound.event);
        break;
      }
      case BoundMethod::DecoUpper: {
        const double T = number(point, "T", where);
        const double a = number(point, "a", where);
        out.bound = deco_upper(model, T, a);
        const double eps = out.bound.parameters.at("epsilon");
        const auto n = static_cast<std::size_t>(std::floor(T / eps));
        out.bound.parameters["n"] = static_cast<double>(n);
        out.bound.event = "max_{j<=" + std::to_string(n) + "} |xi_b(j)| <= " + fmt(a) +
                          " at b = epsilon(a) = " + fmt(eps);
        out.mode = VerifyMode::Dominance;
        if (sample) out.estimate = sup_estimate(increment_spec(model, eps, n, seed), a, cfg, out.bound.event);
        break;
      }
      case BoundMethod::SupdecUpper:
      case BoundMethod::ErgodicMeanUpper: {
        const double B = number(point, "B", where);
        const std::size_t g = count(point, "grid_per_unit", where, 64);
        std::optional<double> p = maybe_number(point, "p", where);
        if (!p) {
          if (model.integer_lags_only()) {
            config_error(where + ": model '" + model.name() +
                         "' is a sequence; give the decoupling coefficient 'p' explicitly");
          }
          p = decoupling_continuous(model).p;
        }
        const double sigma = std::sqrt(model.variance());
        const bool supdec = method == BoundMethod::SupdecUpper;
        const double level = number(point, supdec ? "z" : "theta", where);
        out.bound = supdec ? supdec_upper(level / sigma, B, *p)
                           : ergodic_mean_upper(level / sigma, B, *p);
        out.bound.parameters[supdec ? "z" : "theta"] = level;
        out.bound.parameters["grid_per_unit"] = static_cast<double>(g);
        out.bound.event = supdec ? "sup_{t in [0," + fmt(B) + "]} |X_t| < " + fmt(level)
                                 : "(1/|B|) int_0^" + fmt(B) + " |X_t| dt <= " + fmt(level);
        out.bound.event += " (grid " + std::to_string(g) + "/unit)";
        out.mode = VerifyMode::GridSup;
        if (sample) {
          if (model.integer_lags_only()) {
            config_error(where + ": sampling a continuous-time event needs a continuous model");
          }
          const auto points = static_cast<std::size_t>(std::llround(B * static_cast<double>(g))) + 1;
          const auto spec = sequence_spec(model, points, 1.0 / static_cast<double>(g), seed);
          if (supdec) {
            out.estimate = sup_estimate(spec, level, cfg, out.bound.event);
          } else {
            const GaussianSampler sampler(spec);
            auto event = [level](std::span<const double> x) {
              double s = 0.0;
              for (double v : x) s += std::abs(v);
              s -= 0.5 * (std::abs(x.front()) + std::abs(x.back()));
              return s / static_cast<double>(x.size() - 1) <= level;
            };
            out.estimate = estimate_event_probability(sampler, event, cfg.samples, seed,
                                                      out.bound.event, cfg.workers);
          }
        }
        break;
      }
      case BoundMethod::DdpUpper:
      case BoundMethod::KurddpUpper: {
        const Matrix cov = matrix_param(point, ctx, where);
        const double z = number(point, "z", where);
        const auto dom = dominance_report(cov, true);
        const std::size_t n = cov.size();
        if (method == BoundMethod::DdpUpper) {
          const double r = maybe_number(point, "r", where).value_or(*dom.r);
          if (r < *dom.r - 1e-15) {
            config_error(where + ": r = " + fmt(r) + " is below the measured row ratio " + fmt(*dom.r));
          }
          std::vector<double> var(n);
          for (std::size_t i = 0; i < n; ++i) var[i] = cov(i, i);
          out.bound = ddp_upper(var, r, z);
          const double lam = comparison_matrix_min_eigenvalue(cov, r);
          out.bound.parameters["comparison_min_eigenvalue"] = lam;
          out.bound.conditions.push_back({"comparison_matrix_psd", lam >= -1e-10});
        } else {
          const double zs[] = {z};
          out.bound = kurddp_upper(cov, zs);
        }
        out.bound.event = "max_{j<=" + std::to_string(n) + "} |X_j| <= " + fmt(z);
        if (sample) {
          SamplerSpec spec;
          spec.params = CholeskyParams{cov};
          spec.seed = seed;
          out.estimate = sup_estimate(spec, z, cfg, out.bound.event);
        }
        break;
      }
      case BoundMethod::OuSupremaLower:
      case BoundMethod::OuSupremaUpper: {
        if (model.kind() != CovarianceKind::Ou) {
          config_error(where + ": ou_suprema bounds apply to the OU model only");
        }
        if (!sample) {
          config_error(where + ": ou_suprema bounds are built from Monte Carlo estimates of the "
                               "single-interval probabilities; run the 'verify' command");
        }
        if (!point.contains("intervals") || !point.at("intervals").is_array() ||
            point.at("intervals").empty()) {
          config_error(where + ": 'intervals' must be a nonempty array of [lo, hi] pairs");
        }
        std::vector<Interval> intervals;
        std::vector<double> lengths;
        for (const auto& iv : point.at("intervals")) {
          if (!iv.is_array() || iv.size() != 2) config_error(where + ": each interval is [lo, hi]");
          intervals.push_back({iv[0].get<double>(), iv[1].get<double>()});
          lengths.push_back(intervals.back().length());
        }
        const double z = number(point, "z", where);
        const std::size_t g = count(point, "grid_per_unit", where, 64);
        const double zs[] = {z};
        std::vector<double> logs;
        for (std::size_t j = 0; j < intervals.size(); ++j) {
          auto single = estimate_joint_intervals_ou({&intervals[j], 1}, zs, g, cfg.samples,
                                                    derive_seed(seed, 1, j), cfg.workers);
          logs.push_back(std::log(single.p_hat));
          out.auxiliary.push_back(std::move(single));
        }
        out.bound = method == BoundMethod::OuSupremaLower ? ou_suprema_lower(logs)
                                                          : ou_suprema_upper(logs, lengths);
        out.bound.parameters["z"] = z;
        out.bound.parameters["grid_per_unit"] = static_cast<double>(g);
        out.bound.parameters["p"] = ou_suprema_decoupling(lengths).p;
        auto joint = estimate_joint_intervals_ou(intervals, zs, g, cfg.samples, seed, cfg.workers);
        out.bound.event = joint.event_description;
        out.estimate = std::move(joint);
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
  return out;
}

json config_echo(const ExperimentConfig& c) {
  json j;
  j["model"] = c.model;
  j["bounds"] = json::array();
  for (const auto& b : c.bounds) {
    json item = b.params;
    item["method"] = to_string(b.method);
    if (b.verify_mode) item["verify_mode"] = to_string(*b.verify_mode);
    j["bounds"].push_back(item);
  }
  if (c.sweep) {
    j["sweep"] = {{"quantity", c.sweep->quantity}, {"parameter", c.sweep->parameter},
                  {"values", c.sweep->values},     {"fixed", c.sweep->fixed},
                  {"with_estimates", c.sweep->with_estimates}};
  }
  if (c.eigen) j["eigen"] = {{"n", c.eigen->n}, {"function", c.eigen->function}};
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["seed_source"] = c.seed_defaulted ? "default" : "explicit";
  j["format"] = c.format;
  j["out"] = c.output_path;
  j["workers"] = c.workers;
  j["truncation"] = c.truncation;
  j["quadrature_points"] = c.quadrature_points;
  j["inject_broken_bound"] = c.inject_broken_bound;
  return j;
}

ReportDocument new_document(const std::string& command, const ExperimentConfig& cfg) {
  ReportDocument doc;
  doc.library_version = library_version();
  doc.command = command;
  doc.config = config_echo(cfg);
  doc.seed = cfg.seed;
  return doc;
}

void require_bounds(const ExperimentConfig& cfg, const std::string& command) {
  if (cfg.bounds.empty()) {
    config_error(command + ": the config has no 'bounds' list; add e.g. "
                           "{\"method\": \"szego_upper\", \"n\": 30, \"z\": [0.5, 1]}");
  }
}

void note_vacuous(ReportDocument& doc, const BoundReport& b, std::size_t index) {
  if (b.vacuous && is_upper_bound(b.method)) {
    doc.notes.push_back("bound " + std::to_string(index) + " (" + to_string(b.method) +
                        ") is vacuous: formula value " + fmt(b.raw_log_value) +
                        " in log space was clamped to probability 1");
  }
}

// Appends an outcome and, when it carries an estimate, its verdict.
void append(ReportDocument& doc, Outcome&& o, std::optional<VerifyMode> mode) {
  const std::size_t bi = doc.bounds.size();
  note_vacuous(doc, o.bound, bi);
  doc.bounds.push_back(o.bound);
  for (auto& a : o.auxiliary) doc.estimates.push_back(std::move(a));
  if (o.estimate) {
    const std::size_t ei = doc.estimates.size();
    doc.estimates.push_back(*o.estimate);
    const VerifyMode m = mode.value_or(o.mode);
    doc.verdicts.push_back({bi, ei, verify_bound(o.bound, *o.estimate, m), m});
  }
}

void inject_broken(ReportDocument& doc, const ExperimentConfig& cfg) {
  SamplerSpec spec;
  spec.params = CholeskyParams{Matrix::identity(1)};
  spec.seed = derive_seed(cfg.seed, 0xb0b, 0);
  auto e = estimate_sup_probability(spec, 1.0, cfg.samples, cfg.workers);
  e.event_description = "|g| <= 1 (injected test event)";
  auto b = make_bound(BoundMethod::SzegoUpper, -std::numeric_limits<double>::infinity(),
                      {{"injected", 1.0}});
  b.event = e.event_description;
  doc.notes.push_back("inject_broken_bound: appended an upper bound of 0 for a nondegenerate event");
  append(doc, Outcome{b, e, {}, VerifyMode::Consistency}, std::nullopt);
}

}  // namespace

ReportDocument run_bound(const ExperimentConfig& cfg) {
  require_bounds(cfg, "bound");
  Context ctx(cfg);
  auto doc = new_document("bound", cfg);
  for (std::size_t r = 0; r < cfg.bounds.size(); ++r) {
    const auto& req = cfg.bounds[r];
    for (const auto& point : expand_grid(req.params)) {
      append(doc, evaluate(req.method, point, ctx, false, 0), std::nullopt);
    }
  }
  return doc;
}

ReportDocument run_verify(const ExperimentConfig& cfg) {
  require_bounds(cfg, "verify");
  Context ctx(cfg);
  auto doc = new_document("verify", cfg);
  for (std::size_t r = 0; r < cfg.bounds.size(); ++r) {
    const auto& req = cfg.bounds[r];
    const auto points = expand_grid(req.params);
    for (std::size_t i = 0; i < points.size(); ++i) {
      append(doc, evaluate(req.method, points[i], ctx, true, derive_seed(cfg.seed, r, i)),
             req.verify_mode);
    }
  }
  if (cfg.inject_broken_bound) inject_broken(doc, cfg);
  return doc;
}

ReportDocument run_sweep(const ExperimentConfig& cfg) {
  if (!cfg.sweep) config_error("sweep: the config has no 'sweep' section");
  const auto& sw = *cfg.sweep;
  Context ctx(cfg);
  auto doc = new_document("sweep", cfg);
  const std::string where = "sweep '" + sw.quantity + "'";

  if (kSpecialSweeps.count(sw.quantity)) {
    auto as_count = [&](double v) {
      if (!(v >= 1.0) || v != std::floor(v)) {
        config_error(where + ": values of '" + sw.parameter + "' must be positive integers");
      }
      return static_cast<std::size_t>(v);
    };
    auto expect_parameter = [&](const char* name) {
      if (sw.parameter != name) {
        config_error(where + ": sweeps over '" + name + "', got parameter '" + sw.parameter + "'");
      }
    };
    if (sw.quantity == "deco_p") {
      expect_parameter("b");
      doc.columns = {"b", "p", "tail_estimate", "truncation_order"};
      for (double b : sw.values) {
        const auto p = deco_p(ctx.model, b);
        doc.rows.push_back({b, p.p, p.tail_estimate, static_cast<double>(p.truncation_order)});
      }
    } else if (sw.quantity == "deco_epsilon") {
      expect_parameter("a");
      doc.columns = {"a", "epsilon", "delta"};
      for (double a : sw.values) {
        const auto e = deco_epsilon(ctx.model, a);
        doc.rows.push_back({a, e.b, e.delta});
      }
    } else if (sw.quantity == "lebesgue_constant") {
      expect_parameter("N");
      doc.columns = {"N", "lebesgue_constant", "log_N"};
      for (double v : sw.values) {
        const std::size_t N = as_count(v);
        std::vector<long long> freq(N);
        for (std::size_t k = 0; k < N; ++k) freq[k] = static_cast<long long>(k + 1);
        doc.rows.push_back({v, lebesgue_constant(freq), std::log(v)});
      }
    } else if (sw.quantity == "determinant_root_limit") {
      expect_parameter("n");
      const auto f = density_for(ctx.model, cfg.truncation);
      const double G = ctx.geometric_mean_value();
      doc.columns = {"n", "determinant_root", "geometric_mean"};
      for (double v : sw.values) doc.rows.push_back({v, determinant_root_limit(f, as_count(v)), G});
    } else {
      expect_parameter("quadrature_points");
      const auto f = density_for(ctx.model, cfg.truncation);
      doc.columns = {"quadrature_points", "geometric_mean", "quadrature_error_estimate"};
      for (double v : sw.values) {
        const auto g = geometric_mean(f, as_count(v));
        doc.rows.push_back({v, g.integrable ? g.value : 0.0, g.quadrature_error_estimate});
      }
    }
    return doc;
  }

  BoundMethod method;
  try {
    method = bound_method_from_string(sw.quantity);
  } catch (const Error& e) {
    std::string special;
    for (const auto& s : kSpecialSweeps) special += ", " + s;
    config_error(where + ": unknown quantity (expected a bound method" + special + ")");
  }
  doc.columns = {sw.parameter, "log_value", "value"};
  if (sw.with_estimates) {
    doc.columns.insert(doc.columns.end(), {"p_hat", "ci_low", "ci_high", "verdict"});
  }
  for (std::size_t i = 0; i < sw.values.size(); ++i) {
    json point = sw.fixed;
    point[sw.parameter] = sw.values[i];
    auto o = evaluate(method, point, ctx, sw.with_estimates, derive_seed(cfg.seed, 0x5eed, i));
    std::vector<double> row{sw.values[i], o.bound.log_value, o.bound.value()};
    const bool has_estimate = o.estimate.has_value();
    append(doc, std::move(o), std::nullopt);
    if (has_estimate) {
      const auto& e = doc.estimates.back();
      row.insert(row.end(), {e.p_hat, e.ci_low, e.ci_high,
                             static_cast<double>(static_cast<int>(doc.verdicts.back().verdict))});
    }
    doc.rows.push_back(std::move(row));
  }
  if (sw.with_estimates) doc.notes.push_back("verdict column: 0 = PASS, 1 = INCONCLUSIVE, 2 = FAIL");
  return doc;
}

ReportDocument run_eigen(const ExperimentConfig& cfg) {
  if (!cfg.eigen) config_error("eigen: the config has no 'eigen' section");
  Context ctx(cfg);
  auto doc = new_document("eigen", cfg);
  const auto f = density_for(ctx.model, cfg.truncation);
  const WeylFunction F = cfg.eigen->function == "log"        ? WeylFunction::Log
                         : cfg.eigen->function == "identity" ? WeylFunction::Identity
                                                             : WeylFunction::Square;
  doc.columns = {"n", "eigenvalue_average", "spectral_integral", "abs_difference",
                 "min_eigenvalue", "max_eigenvalue"};
  for (std::size_t n : cfg.eigen->n) {
    const auto w = weyl_check(f, n, F);
    doc.rows.push_back({static_cast<double>(n), w.eigenvalue_average, w.spectral_integral,
                        std::abs(w.eigenvalue_average - w.spectral_integral), w.min_eigenvalue,
                        w.max_eigenvalue});
  }
  doc.notes.push_back("matrix size is n + 1; spectral density '" + f.name() + "'");
  return doc;
}

ReportDocument run_command(const std::string& command, const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  if (command == "bound") {
    doc = run_bound(config);
  } else if (command == "verify") {
    doc = run_verify(config);
  } else if (command == "sweep") {
    doc = run_sweep(config);
  } else if (command == "eigen") {
    doc = run_eigen(config);
  } else if (command == "selftest") {
    doc = run_selftest(config);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown command '" + command +
                                         "' (expected bound, verify, sweep, eigen or selftest)");
  }
  doc.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

}  // namespace sdprob
