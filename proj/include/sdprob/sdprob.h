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
#ifndef SDPROB_SDPROB_H
#define SDPROB_SDPROB_H

/*
 * C interface to the sdprob library.
 *
 * Objects are opaque handles created by sdprob_*_create / sdprob_run and
 * released by the matching *_free function. Every fallible call returns an
 * sdprob_status; on failure a message for the calling thread is available
 * from sdprob_last_error() until the next failing call on that thread.
 * Probabilities are exchanged in log space unless the name says otherwise.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SDPROB_BUILDING_LIBRARY)
#    define SDPROB_API __declspec(dllexport)
#  else
#    define SDPROB_API __declspec(dllimport)
#  endif
#else
#  define SDPROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdprob_status {
  SDPROB_OK = 0,
  SDPROB_ERR_INVALID_ARGUMENT = 1,
  SDPROB_ERR_DOMAIN = 2,
  SDPROB_ERR_NOT_POSITIVE_DEFINITE = 3,
  SDPROB_ERR_NOT_CONVERGED = 4,
  SDPROB_ERR_UNACHIEVABLE = 5,
  SDPROB_ERR_CONFIG = 6,
  SDPROB_ERR_IO = 7,
  SDPROB_ERR_INTERNAL = 99
} sdprob_status;

typedef struct sdprob_model sdprob_model;
typedef struct sdprob_density sdprob_density;
typedef struct sdprob_report sdprob_report;

SDPROB_API const char* sdprob_version(void);
SDPROB_API const char* sdprob_status_string(sdprob_status status);
SDPROB_API const char* sdprob_last_error(void);

/* Covariance models ------------------------------------------------------ */

SDPROB_API sdprob_status sdprob_model_create_ou(sdprob_model** out);
/* `spec_json` is a model spec such as {"kind": "poisson_kernel", "r": 0.5}. */
SDPROB_API sdprob_status sdprob_model_create_from_json(const char* spec_json, sdprob_model** out);
SDPROB_API sdprob_status sdprob_model_gamma(const sdprob_model* model, double lag, double* out);
SDPROB_API void sdprob_model_free(sdprob_model* model);

/* Spectral densities ----------------------------------------------------- */

SDPROB_API sdprob_status sdprob_density_create_poisson(double r, sdprob_density** out);
SDPROB_API sdprob_status sdprob_density_create_ou_increment(double b, sdprob_density** out);
SDPROB_API sdprob_status sdprob_density_create_from_model(const sdprob_model* model,
                                                          size_t truncation,
                                                          sdprob_density** out);
SDPROB_API sdprob_status sdprob_density_eval(const sdprob_density* density, double t, double* out);
SDPROB_API sdprob_status sdprob_geometric_mean(const sdprob_density* density,
                                               size_t quadrature_points, double* value,
                                               int* integrable);
SDPROB_API void sdprob_density_free(sdprob_density* density);

/* Toeplitz ---------------------------------------------------------------- */

/* theta_sq_out must hold `count` values: det Gamma_j / det Gamma_{j-1}, j = 1..count.
 * On SDPROB_ERR_NOT_POSITIVE_DEFINITE, *failed_order (if non-null) is set. */
SDPROB_API sdprob_status sdprob_levinson(const double* coefficients, size_t count,
                                         double* theta_sq_out, size_t* failed_order);

/* Bounds ------------------------------------------------------------------ */

SDPROB_API sdprob_status sdprob_mills_bounds(double x, double* lower, double* reference,
                                             double* upper);
SDPROB_API sdprob_status sdprob_szego_upper(size_t n, double z, double geometric_mean,
                                            double* log_bound);
SDPROB_API sdprob_status sdprob_deco_p(const sdprob_model* model, double b, double* p);
SDPROB_API sdprob_status sdprob_deco_epsilon(const sdprob_model* model, double a, double* b);
SDPROB_API sdprob_status sdprob_deco_upper(const sdprob_model* model, double T, double a,
                                           double* log_bound);
SDPROB_API sdprob_status sdprob_lebesgue_constant(const long long* frequencies, size_t count,
                                                  double* out);

/* Monte Carlo ------------------------------------------------------------- */

typedef struct sdprob_estimate {
  double p_hat;
  double ci_low;
  double ci_high;
  uint64_t n_samples;
  uint64_t successes;
  uint64_t seed;
} sdprob_estimate;

/* P{max_j |X_j| <= threshold} for the first `length` values of the AR(1)
 * sequence with coefficient r (increments != 0: its difference sequence). */
SDPROB_API sdprob_status sdprob_estimate_ar1_sup(double r, size_t length, int increments,
                                                 double threshold, size_t n_samples,
                                                 uint64_t seed, sdprob_estimate* out);

/* Experiments -------------------------------------------------------------- */

typedef struct sdprob_run_options {
  int has_seed;
  uint64_t seed;
  int has_samples;
  uint64_t samples;
  const char* format; /* "json", "csv" or NULL for the config value */
} sdprob_run_options;

SDPROB_API void sdprob_run_options_init(sdprob_run_options* options);

/* command: "bound", "verify", "sweep", "eigen" or "selftest". */
SDPROB_API sdprob_status sdprob_run(const char* command, const char* config_json,
                                    const sdprob_run_options* options, sdprob_report** out);
/* format NULL uses the format recorded in the config. Free with sdprob_string_free. */
SDPROB_API sdprob_status sdprob_report_serialize(const sdprob_report* report, const char* format,
                                                 char** out);
SDPROB_API const char* sdprob_report_output_path(const sdprob_report* report);
SDPROB_API int sdprob_report_exit_code(const sdprob_report* report);
SDPROB_API size_t sdprob_report_verdict_count(const sdprob_report* report, const char* verdict);
SDPROB_API void sdprob_report_free(sdprob_report* report);
SDPROB_API void sdprob_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SDPROB_SDPROB_H */
