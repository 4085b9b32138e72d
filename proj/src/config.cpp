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
#include <set>
#include <string>

#include "sdprob/errors.hpp"
#include "sdprob/experiments.hpp"

namespace sdprob {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::Config, what); }

double get_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) config_error(where + ": missing required key '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) config_error(where + ": key '" + key + "' must be a number");
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& key, double fallback,
                     const std::string& where) {
  return obj.contains(key) ? get_number(obj, key, where) : fallback;
}

std::size_t get_count(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    config_error("'" + what + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      config_error(where + ": unknown key '" + k + "' (allowed: " + list + ")");
    }
  }
}

std::uint64_t parse_seed_text(const std::string& text, const std::string& origin) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(text, &pos, 10);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    config_error(origin + ": '" + text + "' is not an unsigned 64-bit seed");
  }
}

std::vector<double> parse_values(const json& sweep) {
  std::vector<double> values;
  if (sweep.contains("values")) {
    const auto& v = sweep.at("values");
    if (!v.is_array()) config_error("sweep: 'values' must be an array of numbers");
    for (const auto& x : v) {
      if (!x.is_number()) config_error("sweep: 'values' must be an array of numbers");
      values.push_back(x.get<double>());
    }
  } else if (sweep.contains("logspace") || sweep.contains("linspace")) {
    const bool log = sweep.contains("logspace");
    const auto& s = sweep.at(log ? "logspace" : "linspace");
    const std::string where = log ? "sweep.logspace" : "sweep.linspace";
    check_keys(s, {"start", "stop", "num"}, where);
    const double start = get_number(s, "start", where);
    const double stop = get_number(s, "stop", where);
    if (!s.contains("num")) config_error(where + ": missing required key 'num'");
    const std::size_t num = get_count(s.at("num"), where + ".num");
    for (std::size_t i = 0; i < num; ++i) {
      const double t = num == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(num - 1);
      const double x = start + t * (stop - start);
      values.push_back(log ? std::pow(10.0, x) : x);
    }
  } else {
    config_error("sweep: give 'values', 'logspace' or 'linspace'");
  }
  if (values.empty()) config_error("sweep: the value grid is empty");
  return values;
}

}  // namespace

CovarianceModel model_from_json(const json& spec) {
  if (!spec.is_object()) config_error("model: expected an object such as {\"kind\": \"ou\"}");
  if (!spec.contains("kind") || !spec.at("kind").is_string()) {
    config_error("model: missing string key 'kind'");
  }
  const auto kind = spec.at("kind").get<std::string>();
  const std::string where = "model '" + kind + "'";
  try {
    if (kind == "ou") {
      check_keys(spec, {"kind"}, where);
      return CovarianceModel::ou();
    }
    if (kind == "poisson_kernel") {
      check_keys(spec, {"kind", "r"}, where);
      return CovarianceModel::poisson_kernel_ar1(get_number(spec, "r", where));
    }
    if (kind == "coefficients") {
      check_keys(spec, {"kind", "c"}, where);
      if (!spec.contains("c") || !spec.at("c").is_array()) {
        config_error(where + ": 'c' must be an array of numbers");
      }
      return CovarianceModel::from_coefficients(spec.at("c").get<std::vector<double>>());
    }
    if (kind == "iid") {
      check_keys(spec, {"kind", "variance"}, where);
      return iid_covariance(get_number_or(spec, "variance", 1.0, where));
    }
    if (kind == "gaussian") {
      check_keys(spec, {"kind", "scale"}, where);
      return gaussian_covariance(get_number_or(spec, "scale", 1.0, where));
    }
    if (kind == "cauchy") {
      check_keys(spec, {"kind", "scale"}, where);
      return cauchy_covariance(get_number_or(spec, "scale", 1.0, where));
    }
    if (kind == "damped_cosine") {
      check_keys(spec, {"kind", "decay", "frequency"}, where);
      return damped_cosine_covariance(get_number(spec, "decay", where),
                                      get_number(spec, "frequency", where));
    }
    if (kind == "bandlimited") {
      check_keys(spec, {"kind", "cutoff"}, where);
      return bandlimited_covariance(get_number(spec, "cutoff", where));
    }
    if (kind == "increments") {
      check_keys(spec, {"kind", "base", "b"}, where);
      if (!spec.contains("base")) config_error(where + ": missing required key 'base'");
      return increment_model(model_from_json(spec.at("base")), get_number(spec, "b", where));
    }
    if (kind == "ou_increments") {
      check_keys(spec, {"kind", "b"}, where);
      return increment_model(CovarianceModel::ou(), get_number(spec, "b", where));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    config_error(where + ": " + e.what());
  }
  config_error("unknown model kind '" + kind +
               "' (expected ou, poisson_kernel, coefficients, iid, gaussian, cauchy, "
               "damped_cosine, bandlimited, increments, ou_increments)");
}

ExperimentConfig parse_config(const json& doc, const RunOverrides& overrides) {
  if (!doc.is_object()) config_error("config: top level must be an object");
  check_keys(doc,
             {"model", "bounds", "sweep", "eigen", "samples", "seed", "format", "out", "workers",
              "truncation", "quadrature_points", "inject_broken_bound"},
             "config");
  ExperimentConfig c;
  c.model = doc.value("model", json{{"kind", "ou"}});
  model_from_json(c.model);  // validate early

  if (doc.contains("bounds")) {
    const auto& list = doc.at("bounds");
    if (!list.is_array()) config_error("bounds: expected an array of bound requests");
    if (list.empty()) config_error("bounds: the bound list is empty");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& item = list[i];
      const std::string where = "bounds[" + std::to_string(i) + "]";
      if (!item.is_object() || !item.contains("method") || !item.at("method").is_string()) {
        config_error(where + ": expected an object with a string 'method'");
      }
      BoundRequest req;
      try {
        req.method = bound_method_from_string(item.at("method").get<std::string>());
      } catch (const Error& e) {
        config_error(where + ": " + e.what());
      }
      for (const auto& [k, v] : item.items()) {
        if (k == "method") continue;
        if (k == "verify_mode") {
          try {
            req.verify_mode = verify_mode_from_string(v.get<std::string>());
          } catch (const std::exception& e) {
            config_error(where + ": " + e.what());
          }
          continue;
        }
        if (v.is_array() && v.empty()) config_error(where + ": parameter '" + k + "' has an empty grid");
        req.params[k] = v;
      }
      c.bounds.push_back(std::move(req));
    }
  }

  if (doc.contains("sweep")) {
    const auto& s = doc.at("sweep");
    check_keys(s, {"quantity", "parameter", "values", "logspace", "linspace", "fixed", "with_estimates"},
               "sweep");
    SweepRequest req;
    if (!s.contains("quantity") || !s.at("quantity").is_string()) {
      config_error("sweep: missing string key 'quantity'");
    }
    if (!s.contains("parameter") || !s.at("parameter").is_string()) {
      config_error("sweep: missing string key 'parameter'");
    }
    req.quantity = s.at("quantity").get<std::string>();
    req.parameter = s.at("parameter").get<std::string>();
    req.values = parse_values(s);
    req.fixed = s.value("fixed", json::object());
    if (!req.fixed.is_object()) config_error("sweep: 'fixed' must be an object");
    req.with_estimates = s.value("with_estimates", false);
    c.sweep = std::move(req);
  }

  if (doc.contains("eigen")) {
    const auto& e = doc.at("eigen");
    check_keys(e, {"n", "function"}, "eigen");
    EigenRequest req;
    if (!e.contains("n") || !e.at("n").is_array() || e.at("n").empty()) {
      config_error("eigen: 'n' must be a nonempty array of sizes");
    }
    for (const auto& v : e.at("n")) req.n.push_back(get_count(v, "eigen.n"));
    req.function = e.value("function", "log");
    if (req.function != "log" && req.function != "identity" && req.function != "square") {
      config_error("eigen: function must be log, identity or square");
    }
    c.eigen = std::move(req);
  }

  if (doc.contains("samples")) c.samples = get_count(doc.at("samples"), "samples");
  if (doc.contains("workers")) c.workers = get_count(doc.at("workers"), "workers");
  if (doc.contains("truncation")) c.truncation = get_count(doc.at("truncation"), "truncation");
  if (doc.contains("quadrature_points")) {
    c.quadrature_points = get_count(doc.at("quadrature_points"), "quadrature_points");
  }
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) config_error("format must be \"json\" or \"csv\"");
    c.format = doc.at("format").get<std::string>();
  }
  if (doc.contains("out")) {
    if (!doc.at("out").is_string()) config_error("out must be a path string");
    c.output_path = doc.at("out").get<std::string>();
  }
  if (doc.contains("inject_broken_bound")) {
    if (!doc.at("inject_broken_bound").is_boolean()) config_error("inject_broken_bound must be a boolean");
    c.inject_broken_bound = doc.at("inject_broken_bound").get<bool>();
  }

  // Seed precedence: explicit override, config file, SDPROB_SEED, built-in default.
  if (overrides.seed) {
    c.seed = *overrides.seed;
    c.seed_defaulted = false;
  } else if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    if (s.is_number_unsigned() || (s.is_number_integer() && s.get<long long>() >= 0)) {
      c.seed = s.get<std::uint64_t>();
    } else if (s.is_string()) {
      c.seed = parse_seed_text(s.get<std::string>(), "seed");
    } else {
      config_error("seed must be an unsigned integer");
    }
    c.seed_defaulted = false;
  } else if (const char* env = std::getenv("SDPROB_SEED"); env && *env) {
    c.seed = parse_seed_text(env, "SDPROB_SEED");
    c.seed_defaulted = false;
  }
  if (overrides.samples) c.samples = *overrides.samples;
  if (overrides.format) c.format = *overrides.format;
  if (overrides.workers) c.workers = *overrides.workers;

  if (c.format != "json" && c.format != "csv") {
    config_error("format must be \"json\" or \"csv\", got \"" + c.format + "\"");
  }
  if (c.samples < 1000) config_error("samples must be at least 1000");
  if (c.truncation < 1) config_error("truncation must be positive");
  if (c.quadrature_points < 16) config_error("quadrature_points must be at least 16");
  return c;
}

}  // namespace sdprob
