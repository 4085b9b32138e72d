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
#include <string>
#include <vector>

#include "json.hpp"
#include "sdprob/bounds.hpp"
#include "sdprob/monte_carlo.hpp"

namespace sdprob {

inline constexpr int kSchemaVersion = 1;

const char* library_version() noexcept;

struct VerdictRecord {
  std::size_t bound_index = 0;
  std::size_t estimate_index = 0;
  Verdict verdict = Verdict::Pass;
  VerifyMode mode = VerifyMode::Consistency;
  bool operator==(const VerdictRecord&) const = default;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::string detail;
  bool operator==(const CheckRecord&) const = default;
};

enum class OutputFormat { Json, Csv };

OutputFormat output_format_from_string(const std::string& name);

struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string library_version;
  std::string command;
  nlohmann::json config;  // normalized config echo
  std::uint64_t seed = 0;
  std::vector<BoundReport> bounds;
  std::vector<MonteCarloEstimate> estimates;
  std::vector<VerdictRecord> verdicts;
  std::vector<CheckRecord> checks;
  std::vector<std::string> columns;  // sweep / eigen tables
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  /// 0 when no verdict is FAIL and no check failed, 1 otherwise.
  int exit_code() const;

  bool operator==(const ReportDocument&) const = default;
};

// Non-finite numbers are written as the strings "inf", "-inf" and "nan" so the
// JSON form round-trips.
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& bound);
BoundReport bound_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MonteCarloEstimate& estimate);
MonteCarloEstimate estimate_from_json(const nlohmann::json& j);

/// Numbers formatted with 17 significant digits.
std::string to_csv(const ReportDocument& doc);

std::string serialize(const ReportDocument& doc, OutputFormat format);

}  // namespace sdprob
