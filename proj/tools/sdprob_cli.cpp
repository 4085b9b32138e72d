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
// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sdprob/sdprob.h"

namespace {

constexpr int kUsageError = 2;

int report_failure(sdprob_status status) {
  std::cerr << "sdprob: " << sdprob_status_string(status) << ": " << sdprob_last_error() << "\n";
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-deviation probability bounds for stationary Gaussian processes"};
  app.set_version_flag("--version", std::string(sdprob_version()));
  app.require_subcommand(1);

  std::string config_path, format, out_path;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", config_path, "JSON experiment config");
    if (needs_config) c->required();
    sub->add_option("--seed", seed, "Random seed (overrides config and SDPROB_SEED)");
    sub->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
  };
  add_common(app.add_subcommand("bound", "Evaluate bounds over a parameter grid"), true);
  add_common(app.add_subcommand("verify", "Check bounds against Monte Carlo estimates"), true);
  add_common(app.add_subcommand("sweep", "Tabulate a quantity over one parameter"), true);
  add_common(app.add_subcommand("eigen", "Compare Toeplitz eigenvalue averages with the spectral integral"), true);
  add_common(app.add_subcommand("selftest", "Run the built-in invariant suites"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; usage errors share the config-error status.
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();

  std::string config = "{}";
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "sdprob: cannot read config '" << config_path << "'\n";
      return kUsageError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    config = ss.str();
  }

  sdprob_run_options options;
  sdprob_run_options_init(&options);
  if (sub->count("--seed")) {
    options.has_seed = 1;
    options.seed = seed;
  }
  if (sub->count("--samples")) {
    options.has_samples = 1;
    options.samples = samples;
  }
  if (!format.empty()) options.format = format.c_str();

  sdprob_report* report = nullptr;
  if (auto st = sdprob_run(command.c_str(), config.c_str(), &options, &report); st != SDPROB_OK) {
    return report_failure(st);
  }
  char* text = nullptr;
  if (auto st = sdprob_report_serialize(report, nullptr, &text); st != SDPROB_OK) {
    sdprob_report_free(report);
    return report_failure(st);
  }

  const std::string target = !out_path.empty() ? out_path : sdprob_report_output_path(report);
  int code = sdprob_report_exit_code(report);
  if (target.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(target, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "sdprob: cannot write '" << target << "'\n";
      code = kUsageError;
    }
  }
  sdprob_string_free(text);
  sdprob_report_free(report);
  return code;
}
