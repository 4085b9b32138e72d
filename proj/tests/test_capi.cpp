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
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "sdprob/sdprob.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(sdprob_version()) == "0.1.0");
  CHECK(std::string(sdprob_status_string(SDPROB_ERR_CONFIG)).size() > 0);
}

TEST_CASE("models and densities") {
  sdprob_model* m = nullptr;
  REQUIRE(sdprob_model_create_ou(&m) == SDPROB_OK);
  double g = 0.0;
  CHECK(sdprob_model_gamma(m, 2.0, &g) == SDPROB_OK);
  CHECK(g == doctest::Approx(std::exp(-1.0)));

  double p = 0.0;
  CHECK(sdprob_deco_p(m, 1e-3, &p) == SDPROB_OK);
  CHECK(p == doctest::Approx(1.5).epsilon(1e-3));
  double eps = 0.0;
  CHECK(sdprob_deco_epsilon(m, 3.0, &eps) == SDPROB_ERR_UNACHIEVABLE);
  CHECK(std::string(sdprob_last_error()).size() > 0);
  double lb = 0.0;
  CHECK(sdprob_deco_upper(m, 20.0, 0.5, &lb) == SDPROB_OK);
  CHECK(lb < 0.0);
  sdprob_model_free(m);

  sdprob_model* bad = nullptr;
  CHECK(sdprob_model_create_from_json("{\"kind\": \"nope\"}", &bad) == SDPROB_ERR_CONFIG);
  CHECK(bad == nullptr);
  CHECK(sdprob_model_create_from_json("{not json", &bad) == SDPROB_ERR_CONFIG);

  sdprob_density* d = nullptr;
  REQUIRE(sdprob_density_create_poisson(0.5, &d) == SDPROB_OK);
  double v = 0.0;
  CHECK(sdprob_density_eval(d, 0.0, &v) == SDPROB_OK);
  CHECK(v == doctest::Approx(3.0));
  int integrable = 0;
  CHECK(sdprob_geometric_mean(d, 1024, &v, &integrable) == SDPROB_OK);
  CHECK(integrable == 1);
  CHECK(v == doctest::Approx(0.75).epsilon(1e-10));
  sdprob_density_free(d);
  CHECK(sdprob_density_create_poisson(1.5, &d) != SDPROB_OK);
}

TEST_CASE("Levinson and bounds") {
  const double c[] = {1.0, 0.5, 0.25, 0.125};
  double t[4];
  CHECK(sdprob_levinson(c, 4, t, nullptr) == SDPROB_OK);
  CHECK(t[3] == doctest::Approx(0.75));
  const double s[] = {1.0, 1.0, 1.0};
  std::size_t order = 0;
  CHECK(sdprob_levinson(s, 3, t, &order) == SDPROB_ERR_NOT_POSITIVE_DEFINITE);
  CHECK(order == 2);

  double lo, ref, hi;
  CHECK(sdprob_mills_bounds(1.0, &lo, &ref, &hi) == SDPROB_OK);
  CHECK(lo <= ref);
  CHECK(ref <= hi);
  CHECK(sdprob_mills_bounds(-1.0, &lo, &ref, &hi) == SDPROB_ERR_INVALID_ARGUMENT);

  double lb = 0.0;
  CHECK(sdprob_szego_upper(10, 1.0, 1.0, &lb) == SDPROB_OK);
  CHECK(lb < 0.0);
  const long long f[] = {1, 2};
  double leb = 0.0;
  CHECK(sdprob_lebesgue_constant(f, 2, &leb) == SDPROB_OK);
  CHECK(leb == doctest::Approx(4.0 / 3.141592653589793));
}

TEST_CASE("Monte Carlo estimate") {
  sdprob_estimate e{};
  CHECK(sdprob_estimate_ar1_sup(0.0, 1, 0, 1.959963984540054, 20000, 3, &e) == SDPROB_OK);
  CHECK(e.ci_low <= 0.95);
  CHECK(0.95 <= e.ci_high);
  CHECK(e.n_samples == 20000);
  CHECK(sdprob_estimate_ar1_sup(0.0, 1, 0, 1.0, 10, 3, &e) != SDPROB_OK);
}

TEST_CASE("run and serialize") {
  sdprob_run_options opt;
  sdprob_run_options_init(&opt);
  opt.has_seed = 1;
  opt.seed = 11;
  sdprob_report* r = nullptr;
  const char* cfg =
      "{\"model\": {\"kind\": \"ou_increments\", \"b\": 1},"
      " \"samples\": 5000,"
      " \"bounds\": [{\"method\": \"sidak_lower\", \"n\": 30, \"z\": [0.5, 1]},"
      "              {\"method\": \"szego_upper\", \"n\": 30, \"z\": [0.5, 1]}]}";
  REQUIRE(sdprob_run("verify", cfg, &opt, &r) == SDPROB_OK);
  CHECK(sdprob_report_exit_code(r) == 0);
  CHECK(sdprob_report_verdict_count(r, "PASS") == 4);
  char* text = nullptr;
  REQUIRE(sdprob_report_serialize(r, "json", &text) == SDPROB_OK);
  CHECK(std::string(text).find("\"seed\": 11") != std::string::npos);
  sdprob_string_free(text);
  CHECK(sdprob_report_serialize(r, "xml", &text) != SDPROB_OK);
  sdprob_report_free(r);

  CHECK(sdprob_run("verify", "{\"bounds\": []}", nullptr, &r) == SDPROB_ERR_CONFIG);
  CHECK(sdprob_run("explode", "{}", nullptr, &r) == SDPROB_ERR_INVALID_ARGUMENT);
}
