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
#include "sdprob/sdprob.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sdprob/bounds.hpp"
#include "sdprob/errors.hpp"
#include "sdprob/experiments.hpp"
#include "sdprob/spectral.hpp"
#include "sdprob/toeplitz.hpp"

struct sdprob_model {
  sdprob::CovarianceModel model;
};

struct sdprob_density {
  sdprob::SpectralDensity density;
};

struct sdprob_report {
  sdprob::ReportDocument doc;
  std::string format;
  std::string output_path;
};

namespace {

thread_local std::string g_last_error;

sdprob_status set_error(sdprob_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
sdprob_status guarded(F&& body) {
  try {
    body();
    return SDPROB_OK;
  } catch (const sdprob::Error& e) {
    return set_error(static_cast<sdprob_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(SDPROB_ERR_CONFIG, std::string("invalid JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SDPROB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SDPROB_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SDPROB_ERR_INTERNAL, "unknown error");
  }
}

#define SDPROB_REQUIRE_PTR(p)                                                  \
  do {                                                                         \
    if (!(p)) return set_error(SDPROB_ERR_INVALID_ARGUMENT, #p " is NULL");   \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sdprob_version(void) { return sdprob::library_version(); }

const char* sdprob_status_string(sdprob_status status) {
  switch (status) {
    case SDPROB_OK: return "ok";
    case SDPROB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SDPROB_ERR_DOMAIN: return "domain error";
    case SDPROB_ERR_NOT_POSITIVE_DEFINITE: return "not positive definite";
    case SDPROB_ERR_NOT_CONVERGED: return "not converged";
    case SDPROB_ERR_UNACHIEVABLE: return "unachievable";
    case SDPROB_ERR_CONFIG: return "configuration error";
    case SDPROB_ERR_IO: return "i/o error";
    case SDPROB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sdprob_last_error(void) { return g_last_error.c_str(); }

sdprob_status sdprob_model_create_ou(sdprob_model** out) {
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = new sdprob_model{sdprob::CovarianceModel::ou()}; });
}

sdprob_status sdprob_model_create_from_json(const char* spec_json, sdprob_model** out) {
  SDPROB_REQUIRE_PTR(spec_json);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] {
    *out = new sdprob_model{sdprob::model_from_json(nlohmann::json::parse(spec_json))};
  });
}

sdprob_status sdprob_model_gamma(const sdprob_model* model, double lag, double* out) {
  SDPROB_REQUIRE_PTR(model);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = model->model(lag); });
}

void sdprob_model_free(sdprob_model* model) { delete model; }

sdprob_status sdprob_density_create_poisson(double r, sdprob_density** out) {
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = new sdprob_density{sdprob::SpectralDensity::poisson(r)}; });
}

sdprob_status sdprob_density_create_ou_increment(double b, sdprob_density** out) {
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = new sdprob_density{sdprob::SpectralDensity::ou_increment(b)}; });
}

sdprob_status sdprob_density_create_from_model(const sdprob_model* model, size_t truncation,
                                               sdprob_density** out) {
  SDPROB_REQUIRE_PTR(model);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] {
    *out = new sdprob_density{sdprob::density_for(
        model->model, truncation ? truncation : sdprob::kDefaultTruncation)};
  });
}

sdprob_status sdprob_density_eval(const sdprob_density* density, double t, double* out) {
  SDPROB_REQUIRE_PTR(density);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = density->density(t); });
}

sdprob_status sdprob_geometric_mean(const sdprob_density* density, size_t quadrature_points,
                                    double* value, int* integrable) {
  SDPROB_REQUIRE_PTR(density);
  SDPROB_REQUIRE_PTR(value);
  return guarded([&] {
    const auto g = sdprob::geometric_mean(density->density,
                                          quadrature_points ? quadrature_points : 1024);
    *value = g.integrable ? g.value : 0.0;
    if (integrable) *integrable = g.integrable ? 1 : 0;
  });
}

void sdprob_density_free(sdprob_density* density) { delete density; }

sdprob_status sdprob_levinson(const double* coefficients, size_t count, double* theta_sq_out,
                              size_t* failed_order) {
  SDPROB_REQUIRE_PTR(coefficients);
  SDPROB_REQUIRE_PTR(theta_sq_out);
  if (failed_order) *failed_order = 0;
  try {
    const sdprob::ToeplitzSystem sys({coefficients, coefficients + count});
    const auto pe = sdprob::levinson_error_variances(sys);
    std::copy(pe.theta_sq.begin(), pe.theta_sq.end(), theta_sq_out);
    return SDPROB_OK;
  } catch (const sdprob::NotPositiveDefinite& e) {
    if (failed_order) *failed_order = e.order();
    return set_error(SDPROB_ERR_NOT_POSITIVE_DEFINITE, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

sdprob_status sdprob_mills_bounds(double x, double* lower, double* reference, double* upper) {
  return guarded([&] {
    const auto m = sdprob::boyd_mills_bounds(x);
    if (lower) *lower = m.lower;
    if (reference) *reference = m.reference;
    if (upper) *upper = m.upper;
  });
}

sdprob_status sdprob_szego_upper(size_t n, double z, double geometric_mean, double* log_bound) {
  SDPROB_REQUIRE_PTR(log_bound);
  return guarded([&] { *log_bound = sdprob::szego_upper(n, z, geometric_mean).log_value; });
}

sdprob_status sdprob_deco_p(const sdprob_model* model, double b, double* p) {
  SDPROB_REQUIRE_PTR(model);
  SDPROB_REQUIRE_PTR(p);
  return guarded([&] { *p = sdprob::deco_p(model->model, b).p; });
}

sdprob_status sdprob_deco_epsilon(const sdprob_model* model, double a, double* b) {
  SDPROB_REQUIRE_PTR(model);
  SDPROB_REQUIRE_PTR(b);
  return guarded([&] { *b = sdprob::deco_epsilon(model->model, a).b; });
}

sdprob_status sdprob_deco_upper(const sdprob_model* model, double T, double a, double* log_bound) {
  SDPROB_REQUIRE_PTR(model);
  SDPROB_REQUIRE_PTR(log_bound);
  return guarded([&] { *log_bound = sdprob::deco_upper(model->model, T, a).log_value; });
}

sdprob_status sdprob_lebesgue_constant(const long long* frequencies, size_t count, double* out) {
  SDPROB_REQUIRE_PTR(frequencies);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] { *out = sdprob::lebesgue_constant({frequencies, count}); });
}

sdprob_status sdprob_estimate_ar1_sup(double r, size_t length, int increments, double threshold,
                                      size_t n_samples, uint64_t seed, sdprob_estimate* out) {
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] {
    sdprob::SamplerSpec spec;
    spec.params = sdprob::Ar1Params{r, length, increments != 0};
    spec.seed = seed;
    const auto e = sdprob::estimate_sup_probability(spec, threshold, n_samples);
    *out = {e.p_hat, e.ci_low, e.ci_high, e.n_samples, e.successes, e.seed};
  });
}

void sdprob_run_options_init(sdprob_run_options* options) {
  if (options) *options = sdprob_run_options{0, 0, 0, 0, nullptr};
}

sdprob_status sdprob_run(const char* command, const char* config_json,
                         const sdprob_run_options* options, sdprob_report** out) {
  SDPROB_REQUIRE_PTR(command);
  SDPROB_REQUIRE_PTR(config_json);
  SDPROB_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::parse_error& e) {
      sdprob::fail(sdprob::ErrorCode::Config, std::string("config is not valid JSON: ") + e.what());
    }
    sdprob::RunOverrides ov;
    if (options) {
      if (options->has_seed) ov.seed = options->seed;
      if (options->has_samples) ov.samples = static_cast<std::size_t>(options->samples);
      if (options->format) ov.format = std::string(options->format);
    }
    const auto cfg = sdprob::parse_config(doc, ov);
    auto report = std::make_unique<sdprob_report>();
    report->doc = sdprob::run_command(command, cfg);
    report->format = cfg.format;
    report->output_path = cfg.output_path;
    *out = report.release();
  });
}

sdprob_status sdprob_report_serialize(const sdprob_report* report, const char* format, char** out) {
  SDPROB_REQUIRE_PTR(report);
  SDPROB_REQUIRE_PTR(out);
  return guarded([&] {
    const auto fmt = sdprob::output_format_from_string(format ? format : report->format);
    *out = duplicate(sdprob::serialize(report->doc, fmt));
  });
}

const char* sdprob_report_output_path(const sdprob_report* report) {
  return report ? report->output_path.c_str() : "";
}

int sdprob_report_exit_code(const sdprob_report* report) {
  return report ? report->doc.exit_code() : 1;
}

size_t sdprob_report_verdict_count(const sdprob_report* report, const char* verdict) {
  if (!report || !verdict) return 0;
  size_t n = 0;
  for (const auto& v : report->doc.verdicts)
    if (std::strcmp(sdprob::to_string(v.verdict), verdict) == 0) ++n;
  return n;
}

void sdprob_report_free(sdprob_report* report) { delete report; }

void sdprob_string_free(char* text) { std::free(text); }

}  // extern "C"
