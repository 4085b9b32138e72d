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
#include "sdprob/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "sdprob/errors.hpp"

namespace sdprob {

using nlohmann::json;

const char* library_version() noexcept { return "0.1.0"; }

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  fail(ErrorCode::Config, "unknown output format '" + name + "' (expected json or csv)");
}

int ReportDocument::exit_code() const {
  for (const auto& v : verdicts)
    if (v.verdict == Verdict::Fail) return 1;
  for (const auto& c : checks)
    if (!c.passed) return 1;
  return 0;
}

namespace {

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    fail(ErrorCode::Config, "expected a number, got string '" + s + "'");
  }
  return j.get<double>();
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const BoundReport& b) {
  json params = json::object();
  for (const auto& [k, v] : b.parameters) params[k] = number(v);
  json conds = json::array();
  for (const auto& c : b.conditions) conds.push_back({{"name", c.name}, {"met", c.met}});
  return {{"method", to_string(b.method)},
          {"log_value", number(b.log_value)},
          {"raw_log_value", number(b.raw_log_value)},
          {"value", number(b.value())},
          {"vacuous", b.vacuous},
          {"trusted", b.trusted()},
          {"parameters", params},
          {"conditions_met", conds},
          {"event", b.event}};
}

BoundReport bound_from_json(const json& j) {
  BoundReport b;
  b.method = bound_method_from_string(j.at("method").get<std::string>());
  b.log_value = read_number(j.at("log_value"));
  b.raw_log_value = read_number(j.at("raw_log_value"));
  b.vacuous = j.at("vacuous").get<bool>();
  for (const auto& [k, v] : j.at("parameters").items()) b.parameters[k] = read_number(v);
  for (const auto& c : j.at("conditions_met")) {
    b.conditions.push_back({c.at("name").get<std::string>(), c.at("met").get<bool>()});
  }
  b.event = j.value("event", "");
  return b;
}

json to_json(const MonteCarloEstimate& e) {
  return {{"p_hat", number(e.p_hat)},       {"ci_low", number(e.ci_low)},
          {"ci_high", number(e.ci_high)},   {"n_samples", e.n_samples},
          {"successes", e.successes},       {"seed", e.seed},
          {"event", e.event_description}};
}

MonteCarloEstimate estimate_from_json(const json& j) {
  MonteCarloEstimate e;
  e.p_hat = read_number(j.at("p_hat"));
  e.ci_low = read_number(j.at("ci_low"));
  e.ci_high = read_number(j.at("ci_high"));
  e.n_samples = j.at("n_samples").get<std::size_t>();
  e.successes = j.at("successes").get<std::size_t>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.event_description = j.value("event", "");
  return e;
}

json to_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["library_version"] = doc.library_version;
  j["command"] = doc.command;
  j["seed"] = doc.seed;
  j["config"] = doc.config;
  j["bounds"] = json::array();
  for (const auto& b : doc.bounds) j["bounds"].push_back(to_json(b));
  j["estimates"] = json::array();
  for (const auto& e : doc.estimates) j["estimates"].push_back(to_json(e));
  j["verdicts"] = json::array();
  for (const auto& v : doc.verdicts) {
    j["verdicts"].push_back({{"bound", v.bound_index},
                             {"estimate", v.estimate_index},
                             {"verdict", to_string(v.verdict)},
                             {"mode", to_string(v.mode)}});
  }
  j["checks"] = json::array();
  for (const auto& c : doc.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"trials", c.trials},
                           {"violations", c.violations},
                           {"detail", c.detail}});
  }
  json rows = json::array();
  for (const auto& r : doc.rows) {
    json row = json::array();
    for (double v : r) row.push_back(number(v));
    rows.push_back(row);
  }
  j["table"] = {{"columns", doc.columns}, {"rows", rows}};
  j["notes"] = doc.notes;
  j["elapsed_seconds"] = number(doc.elapsed_seconds);
  return j;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion) {
    fail(ErrorCode::Config, "report schema_version " + std::to_string(doc.schema_version) +
                                " is not supported (expected " + std::to_string(kSchemaVersion) +
                                ")");
  }
  doc.library_version = j.at("library_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  doc.config = j.at("config");
  for (const auto& b : j.at("bounds")) doc.bounds.push_back(bound_from_json(b));
  for (const auto& e : j.at("estimates")) doc.estimates.push_back(estimate_from_json(e));
  for (const auto& v : j.at("verdicts")) {
    doc.verdicts.push_back({v.at("bound").get<std::size_t>(), v.at("estimate").get<std::size_t>(),
                            verdict_from_string(v.at("verdict").get<std::string>()),
                            verify_mode_from_string(v.at("mode").get<std::string>())});
  }
  for (const auto& c : j.at("checks")) {
    doc.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("trials").get<std::size_t>(), c.at("violations").get<std::size_t>(),
                          c.at("detail").get<std::string>()});
  }
  const auto& table = j.at("table");
  doc.columns = table.at("columns").get<std::vector<std::string>>();
  for (const auto& r : table.at("rows")) {
    std::vector<double> row;
    for (const auto& v : r) row.push_back(read_number(v));
    doc.rows.push_back(std::move(row));
  }
  doc.notes = j.at("notes").get<std::vector<std::string>>();
  doc.elapsed_seconds = read_number(j.at("elapsed_seconds"));
  return doc;
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# schema_version=" << doc.schema_version << ",library_version=" << doc.library_version
     << ",command=" << doc.command << ",seed=" << doc.seed << "\n";
  if (!doc.bounds.empty()) {
    os << "# bounds\nindex,method,log_value,raw_log_value,value,vacuous,trusted,parameters,event\n";
    for (std::size_t i = 0; i < doc.bounds.size(); ++i) {
      const auto& b = doc.bounds[i];
      std::string params;
      for (const auto& [k, v] : b.parameters) params += (params.empty() ? "" : ";") + k + "=" + fmt(v);
      os << i << ',' << to_string(b.method) << ',' << fmt(b.log_value) << ','
         << fmt(b.raw_log_value) << ',' << fmt(b.value()) << ',' << (b.vacuous ? 1 : 0) << ','
         << (b.trusted() ? 1 : 0) << ',' << csv_quote(params) << ',' << csv_quote(b.event)
         << "\n";
    }
  }
  if (!doc.estimates.empty()) {
    os << "# estimates\nindex,p_hat,ci_low,ci_high,n_samples,successes,seed,event\n";
    for (std::size_t i = 0; i < doc.estimates.size(); ++i) {
      const auto& e = doc.estimates[i];
      os << i << ',' << fmt(e.p_hat) << ',' << fmt(e.ci_low) << ',' << fmt(e.ci_high) << ','
         << e.n_samples << ',' << e.successes << ',' << e.seed << ','
         << csv_quote(e.event_description) << "\n";
    }
  }
  if (!doc.verdicts.empty()) {
    os << "# verdicts\nbound_index,estimate_index,verdict,mode\n";
    for (const auto& v : doc.verdicts) {
      os << v.bound_index << ',' << v.estimate_index << ',' << to_string(v.verdict) << ','
         << to_string(v.mode) << "\n";
    }
  }
  if (!doc.checks.empty()) {
    os << "# checks\nname,passed,trials,violations,detail\n";
    for (const auto& c : doc.checks) {
      os << csv_quote(c.name) << ',' << (c.passed ? 1 : 0) << ',' << c.trials << ','
         << c.violations << ',' << csv_quote(c.detail) << "\n";
    }
  }
  if (!doc.columns.empty()) {
    os << "# table\n";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      os << (i ? "," : "") << csv_quote(doc.columns[i]);
    }
    os << "\n";
    for (const auto& r : doc.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt(r[i]);
      os << "\n";
    }
  }
  for (const auto& n : doc.notes) os << "# note: " << n << "\n";
  return os.str();
}

std::string serialize(const ReportDocument& doc, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(doc).dump(2) + "\n" : to_csv(doc);
}

}  // namespace sdprob
