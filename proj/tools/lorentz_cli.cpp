// Copyright 2026 The Lorentz Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end:
//   lorentz norm      --input F --p P --q Q [--format text|json|csv]
//   lorentz grid      --input F --p-list a,b,c --q-list d,e [--format csv]
//   lorentz rearrange --input F [--format text|json|csv]
//   lorentz check     --suite NAME | --all  [--trials N --seed S --config FILE]
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentz/lorentz.hpp"

namespace {

using lorentz::ExtReal;
using lorentz::Format;
using lorentz::Json;

std::vector<ExtReal> parse_index_list(const std::string& csv) {
  std::vector<ExtReal> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(lorentz::parse_ext(item));
  }
  if (out.empty()) throw lorentz::ParseError("empty index list: \"" + csv + "\"");
  return out;
}

ExtReal norm_of(const lorentz::InputDocument& doc, ExtReal p, ExtReal q) {
  if (std::holds_alternative<lorentz::SimpleFunction>(doc)) {
    return lorentz::lorentz_norm(std::get<lorentz::SimpleFunction>(doc), {p, q});
  }
  return lorentz::seq_lorentz_norm(std::get<lorentz::NormSequence>(doc), p, q);
}

int cmd_norm(const std::string& input, const std::string& p_text, const std::string& q_text,
             Format format) {
  const auto doc = lorentz::parse_input_file(input);
  const ExtReal p = lorentz::parse_ext(p_text);
  const ExtReal q = lorentz::parse_ext(q_text);
  const ExtReal n = norm_of(doc, p, q);
  switch (format) {
    case Format::text:
      std::cout << lorentz::format_ext(n) << "\n";
      break;
    case Format::json:
      std::cout << Json{{"p", lorentz::ext_to_json(p)},
                        {"q", lorentz::ext_to_json(q)},
                        {"norm", lorentz::ext_to_json(n)}}
                       .dump(2)
                << "\n";
      break;
    case Format::csv:
      std::cout << lorentz::emit_norm_table({{p, q, n}}, Format::csv);
      break;
  }
  return 0;
}

int cmd_grid(const std::string& input, const std::string& p_list, const std::string& q_list,
             Format format) {
  const auto doc = lorentz::parse_input_file(input);
  std::vector<lorentz::NormRow> rows;
  for (ExtReal p : parse_index_list(p_list)) {
    for (ExtReal q : parse_index_list(q_list)) {
      rows.push_back({p, q, norm_of(doc, p, q)});
    }
  }
  std::cout << lorentz::emit_norm_table(rows, format);
  return 0;
}

int cmd_rearrange(const std::string& input, Format format) {
  const auto doc = lorentz::parse_input_file(input);
  if (std::holds_alternative<lorentz::SimpleFunction>(doc)) {
    const auto star = lorentz::rearrangement(std::get<lorentz::SimpleFunction>(doc));
    switch (format) {
      case Format::text:
        for (const auto& s : star.segments()) {
          std::cout << "value=" << lorentz::format_double(s.value)
                    << " right_endpoint=" << lorentz::format_double(s.right_endpoint) << "\n";
        }
        break;
      case Format::json:
        std::cout << lorentz::to_json(star).dump(2) << "\n";
        break;
      case Format::csv:
        std::cout << "value,right_endpoint\n";
        for (const auto& s : star.segments()) {
          std::cout << lorentz::format_double(s.value) << ","
                    << lorentz::format_double(s.right_endpoint) << "\n";
        }
        break;
    }
    return 0;
  }
  const auto sorted = lorentz::seq_rearrange(std::get<lorentz::NormSequence>(doc));
  switch (format) {
    case Format::text: {
      std::string line;
      for (double t : sorted.terms()) {
        if (!line.empty()) line += " ";
        line += lorentz::format_double(t);
      }
      std::cout << line << "\n";
      break;
    }
    case Format::json:
      std::cout << lorentz::to_json(sorted).dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "term\n";
      for (double t : sorted.terms()) std::cout << lorentz::format_double(t) << "\n";
      break;
  }
  return 0;
}

void apply_config_file(lorentz::SuiteConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lorentz::ParseError("cannot open config file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw lorentz::ParseError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw lorentz::ParseError("config: expected a JSON object");
  if (doc.contains("max_atoms")) config.ranges.max_atoms = doc["max_atoms"].get<int>();
  if (doc.contains("max_sequence_terms")) {
    config.ranges.max_sequence_terms = doc["max_sequence_terms"].get<int>();
  }
  if (doc.contains("value_range")) {
    config.ranges.value_range = {doc["value_range"][0].get<double>(),
                                 doc["value_range"][1].get<double>()};
  }
  if (doc.contains("mass_range")) {
    config.ranges.mass_range = {doc["mass_range"][0].get<double>(),
                                doc["mass_range"][1].get<double>()};
  }
  if (doc.contains("grid_size_range")) {
    config.ranges.grid_size_range = {doc["grid_size_range"][0].get<int>(),
                                     doc["grid_size_range"][1].get<int>()};
  }
  if (doc.contains("rel_tol")) config.rel_tol = doc["rel_tol"].get<double>();
  if (doc.contains("abs_tol")) config.abs_tol = doc["abs_tol"].get<double>();
  if (doc.contains("subdivisions")) config.subdivisions = doc["subdivisions"].get<std::int64_t>();
}

int cmd_check(const std::string& suite_name, bool run_all, std::uint64_t trials,
              std::uint64_t seed, const std::string& config_path, Format format) {
  std::vector<lorentz::Suite> suites;
  if (run_all) {
    suites = lorentz::all_suites();
  } else {
    const auto suite = lorentz::parse_suite(suite_name);
    if (!suite) {
      std::cerr << "error: unknown suite \"" << suite_name << "\"\n";
      return 2;
    }
    suites.push_back(*suite);
  }
  bool any_failure = false;
  Json json_reports = Json::array();
  for (lorentz::Suite suite : suites) {
    lorentz::SuiteConfig config;
    config.suite = suite;
    config.trials = trials;
    config.seed = seed;
    if (!config_path.empty()) apply_config_file(config, config_path);
    const lorentz::RunReport report = lorentz::run_suite(config);
    any_failure = any_failure || !report.passed();
    if (format == Format::json) {
      json_reports.push_back(lorentz::to_json(report));
    } else {
      std::cout << lorentz::emit_report(report, Format::text, true, seed);
    }
  }
  if (format == Format::json) std::cout << json_reports.dump(2) << "\n";
  return any_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz space quasi-norms on step functions and sequences"};
  app.require_subcommand(1);

  std::string input, p_text, q_text, p_list, q_list, format_name = "text";
  std::string suite_name, config_path;
  bool run_all = false;
  std::uint64_t trials = 1000, seed = 0;

  auto* norm = app.add_subcommand("norm", "print one quasi-norm");
  norm->add_option("--input", input, "input JSON file")->required();
  norm->add_option("--p", p_text, "first index (number or inf)")->required();
  norm->add_option("--q", q_text, "second index (number or inf)")->required();
  norm->add_option("--format", format_name, "text, json or csv");

  auto* grid = app.add_subcommand("grid", "norm table over an index grid");
  grid->add_option("--input", input, "input JSON file")->required();
  grid->add_option("--p-list", p_list, "comma-separated first indices")->required();
  grid->add_option("--q-list", q_list, "comma-separated second indices")->required();
  grid->add_option("--format", format_name, "text, json or csv (default csv)")
      ->default_val("csv");

  auto* rearrange = app.add_subcommand("rearrange", "emit the decreasing rearrangement");
  rearrange->add_option("--input", input, "input JSON file")->required();
  rearrange->add_option("--format", format_name, "text, json or csv");

  auto* check = app.add_subcommand("check", "run randomized verification suites");
  check->add_option("--suite", suite_name, "suite name (see README)");
  check->add_flag("--all", run_all, "run every suite");
  check->add_option("--trials", trials, "trials per suite");
  check->add_option("--seed", seed, "base RNG seed");
  check->add_option("--config", config_path, "JSON config overrides");
  check->add_option("--format", format_name, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format format = lorentz::parse_format(format_name);
    if (norm->parsed()) return cmd_norm(input, p_text, q_text, format);
    if (grid->parsed()) return cmd_grid(input, p_list, q_list, format);
    if (rearrange->parsed()) return cmd_rearrange(input, format);
    if (check->parsed()) {
      if (run_all == !suite_name.empty()) {
        std::cerr << "error: check needs exactly one of --suite NAME or --all\n";
        return 2;
      }
      return cmd_check(suite_name, run_all, trials, seed, config_path, format);
    }
  } catch (const lorentz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
