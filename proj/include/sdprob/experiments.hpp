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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdprob/covariance.hpp"
#include "sdprob/report.hpp"

namespace sdprob {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr std::size_t kDefaultSamples = 100'000;

// Command-line overrides applied on top of the config document.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<std::string> format;
  std::optional<std::size_t> workers;
};

// One requested bound. Every parameter holding an array spans a grid axis;
// the grid is the cartesian product in key order.
struct BoundRequest {
  BoundMethod method = BoundMethod::SidakLower;
  nlohmann::json params = nlohmann::json::object();
  std::optional<VerifyMode> verify_mode;
};

struct SweepRequest {
  std::string quantity;
  std::string parameter;
  std::vector<double> values;
  nlohmann::json fixed = nlohmann::json::object();
  bool with_estimates = false;
};

struct EigenRequest {
  std::vector<std::size_t> n;
  std::string function = "log";
};

struct ExperimentConfig {
  nlohmann::json model = nlohmann::json::object();
  std::vector<BoundRequest> bounds;
  std::optional<SweepRequest> sweep;
  std::optional<EigenRequest> eigen;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  bool seed_defaulted = true;
  std::string format = "json";
  std::string output_path;
  std::size_t workers = 0;
  std::size_t truncation = kDefaultTruncation;
  std::size_t quadrature_points = 1024;
  bool inject_broken_bound = false;  // test hook: adds an upper bound of 0
};

/// Parses and validates a config document; throws Error(Config) with a
/// message naming the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc, const RunOverrides& overrides = {});

/// Builds a covariance model from a model spec such as {"kind": "ou"}.
CovarianceModel model_from_json(const nlohmann::json& spec);

ReportDocument run_bound(const ExperimentConfig& config);
ReportDocument run_verify(const ExperimentConfig& config);
ReportDocument run_sweep(const ExperimentConfig& config);
ReportDocument run_eigen(const ExperimentConfig& config);
ReportDocument run_selftest(const ExperimentConfig& config);

/// Dispatch by subcommand name: bound, verify, sweep, eigen, selftest.
ReportDocument run_command(const std::string& command, const ExperimentConfig& config);

}  // namespace sdprob
