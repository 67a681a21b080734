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

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lorentz/embeddings.hpp"
#include "lorentz/generate.hpp"
#include "lorentz/io.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/sequence.hpp"

namespace lorentz {

// The sixteen randomized verification suites. Each one stresses a single
// identity or embedding inequality on generated instances; since all of
// them are theorems, any failure is an implementation bug.
enum class Suite {
  eq2_identity,
  route_agreement,
  oracle_agreement,
  chebyshev_e6,
  prop3_1,
  prop3_1_inf,
  prop3_2,
  eq8_sandwich,
  prop3_5_endpoints,
  thm_K,
  prop3_6_product,
  prop3_7_ab,
  seq_def_lp,
  prop22_i,
  prop22_ii,
  prop_p15,
};

inline const std::vector<std::pair<Suite, std::string_view>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string_view>> names = {
      {Suite::eq2_identity, "eq2-identity"},
      {Suite::route_agreement, "route-agreement"},
      {Suite::oracle_agreement, "oracle-agreement"},
      {Suite::chebyshev_e6, "chebyshev-e6"},
      {Suite::prop3_1, "prop3.1"},
      {Suite::prop3_1_inf, "prop3.1-inf"},
      {Suite::prop3_2, "prop3.2"},
      {Suite::eq8_sandwich, "eq8-sandwich"},
      {Suite::prop3_5_endpoints, "prop3.5-endpoints"},
      {Suite::thm_K, "thm-K"},
      {Suite::prop3_6_product, "prop3.6-product"},
      {Suite::prop3_7_ab, "prop3.7-ab"},
      {Suite::seq_def_lp, "seq-def-lp"},
      {Suite::prop22_i, "prop22-i"},
      {Suite::prop22_ii, "prop22-ii"},
      {Suite::prop_p15, "prop-p15"},
  };
  return names;
}

inline std::string suite_name(Suite s) {
  for (const auto& [suite, name] : suite_names()) {
    if (suite == s) return std::string(name);
  }
  return "unknown";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, n] : suite_names()) {
    if (n == name) return suite;
  }
  return std::nullopt;
}

inline std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& [suite, name] : suite_names()) out.push_back(suite);
  return out;
}

struct SuiteConfig {
  Suite suite = Suite::eq2_identity;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  SampleRanges ranges;
  // NaN means "use the suite's default tolerance".
  double rel_tol = std::numeric_limits<double>::quiet_NaN();
  double abs_tol = std::numeric_limits<double>::quiet_NaN();
  std::int64_t subdivisions = 100000;
};

// Identity suites compare two computation routes; inequality suites verify
// a theorem bound. The oracle suite tolerance reflects the midpoint rule's
// O(1/n) convergence at 1e5 subdivisions.
inline Tolerance suite_default_tolerance(Suite s) {
  switch (s) {
    case Suite::eq2_identity:
    case Suite::route_agreement:
    case Suite::seq_def_lp:
      return Tolerance{1e-12, 0.0};
    case Suite::oracle_agreement:
      return Tolerance{1e-4, 0.0};
    default:
      return Tolerance{1e-9, 1e-12};
  }
}

inline Tolerance effective_tolerance(const SuiteConfig& config) {
  Tolerance tol = suite_default_tolerance(config.suite);
  if (!std::isnan(config.rel_tol)) tol.rel = config.rel_tol;
  if (!std::isnan(config.abs_tol)) tol.abs = config.abs_tol;
  return tol;
}

struct TrialResult {
  CheckReport report;
  Json input;  // enough to rebuild the check by hand
};

struct FailureRecord {
  std::uint64_t seed_offset;
  Json input;
  CheckReport report;
};

struct RunReport {
  std::string suite;
  std::uint64_t trials_run = 0;
  std::vector<FailureRecord> failures;
  double max_tightness = 0.0;  // largest lhs/rhs seen over the run
  double wall_time_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

namespace detail {

// Equality-style report: passes when the two routes agree to a relative
// tolerance scaled by max(1, lhs, rhs).
inline CheckReport equality_report(double lhs, double rhs, Tolerance tol, std::string witness) {
  CheckReport r;
  r.lhs = NormValue(lhs);
  r.rhs = NormValue(rhs);
  r.constant = 1.0;
  r.slack = rhs - lhs;
  r.passed = std::abs(lhs - rhs) <= tol.rel * std::max({1.0, lhs, rhs}) + tol.abs;
  r.witness = std::move(witness);
  return r;
}

// Draws `n` strictly increasing values, retrying on collisions.
inline std::vector<double> sorted_distinct(std::mt19937_64& rng, int n, double lo, double hi) {
  std::vector<double> out;
  while (true) {
    out.clear();
    for (int i = 0; i < n; ++i) out.push_back(log_uniform(rng, lo, hi));
    std::sort(out.begin(), out.end());
    if (std::unique(out.begin(), out.end()) == out.end()) return out;
  }
}

constexpr double kFuncIndexLo = 0.1;
constexpr double kFuncIndexHi = 10.0;
constexpr double kSeqIndexLo = 1.0;
constexpr double kSeqIndexHi = 10.0;

}  // namespace detail

// Runs the single trial `offset` of a suite. The trial's generator is
// mt19937_64 seeded with config.seed + offset, so any failure can be
// replayed in isolation with --trials 1 --seed (seed + offset).
inline TrialResult run_trial(const SuiteConfig& config, std::uint64_t offset) {
  namespace d = detail;
  std::mt19937_64 rng(config.seed + offset);
  const Tolerance tol = effective_tolerance(config);
  const SampleRanges& ranges = config.ranges;
  TrialResult result;

  switch (config.suite) {
    case Suite::eq2_identity: {
      // sum of mass * value^p against the rearrangement integral, which is
      // the (p,p) quasi-norm raised to p
      const SimpleFunction f = generate_step_function(rng, ranges);
      const double p = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      double direct = 0.0;
      for (const auto& a : f.atoms()) {
        if (a.value > 0.0) direct += a.mass * std::pow(a.value, p);
      }
      const double via_star = std::pow(lorentz_norm(f, {p, p}).value(), p);
      result.report = d::equality_report(direct, via_star, tol, "p=" + format_double(p));
      result.input = Json{{"f", to_json(f)}, {"p", p}};
      break;
    }
    case Suite::route_agreement: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const double p = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      const double s = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      const double a = lorentz_norm(f, {p, s}).value();
      const double b = lorentz_norm_via_distribution(f, p, s).value();
      result.report =
          d::equality_report(a, b, tol, "p=" + format_double(p) + " s=" + format_double(s));
      result.input = Json{{"f", to_json(f)}, {"p", p}, {"s", s}};
      break;
    }
    case Suite::oracle_agreement: {
      // The midpoint rule converges like n^{-q/p} when q < p (the integrand
      // has an integrable singularity at 0), so this suite samples q >= p,
      // where 1e5 subdivisions comfortably reach 1e-4 relative error.
      const SimpleFunction f = generate_step_function(rng, ranges);
      const double p = log_uniform(rng, 0.5, 5.0);
      const double q = p * log_uniform(rng, 1.0, std::min(4.0, d::kFuncIndexHi / p));
      const double closed = lorentz_norm(f, {p, q}).value();
      const double quad = quadrature_norm_oracle(f, {p, q}, config.subdivisions).value();
      result.report =
          d::equality_report(closed, quad, tol, "p=" + format_double(p) + " q=" + format_double(q));
      result.input = Json{{"f", to_json(f)}, {"p", p}, {"q", q},
                          {"subdivisions", config.subdivisions}};
      break;
    }
    case Suite::chebyshev_e6: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const double p = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      const double alpha = log_uniform(rng, ranges.value_range.first, ranges.value_range.second);
      result.report = check_chebyshev(f, p, alpha, tol);
      result.input = Json{{"f", to_json(f)}, {"p", p}, {"alpha", alpha}};
      break;
    }
    case Suite::prop3_1: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const auto ps = d::sorted_distinct(rng, 3, d::kFuncIndexLo, d::kFuncIndexHi);
      const double s = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      result.report = check_interpolation(f, ps[0], ps[2], ps[1], s, tol);
      result.input = Json{{"f", to_json(f)}, {"p1", ps[0]}, {"p", ps[1]}, {"p2", ps[2]}, {"s", s}};
      break;
    }
    case Suite::prop3_1_inf: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const auto ps = d::sorted_distinct(rng, 2, d::kFuncIndexLo, d::kFuncIndexHi);
      const double s = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      result.report = check_interpolation_infinite_top(f, ps[0], ps[1], s, tol);
      result.input = Json{{"f", to_json(f)}, {"p1", ps[0]}, {"p", ps[1]}, {"s", s}};
      break;
    }
    case Suite::prop3_2: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const auto ps = d::sorted_distinct(rng, 3, d::kFuncIndexLo, d::kFuncIndexHi);
      const ExtReal p2 = one_in(rng, 8) ? ExtReal::infinity() : ExtReal(ps[2]);
      const ExtReal q =
          one_in(rng, 8) ? ExtReal::infinity()
                         : ExtReal(log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi));
      result.report = check_two_point(f, ps[0], ps[1], p2, q, tol);
      result.input = Json{{"f", to_json(f)}, {"p1", ps[0]}, {"r", ps[1]},
                          {"p2", ext_to_json(p2)}, {"q", ext_to_json(q)}};
      break;
    }
    case Suite::eq8_sandwich: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const double p = log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi);
      const IndexGrid Q =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      result.report = check_ilpQ_sandwich(f, p, Q, tol);
      result.input = Json{{"f", to_json(f)}, {"p", p}, {"Q", Q.points()}};
      break;
    }
    case Suite::prop3_5_endpoints: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const IndexGrid J =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      const ExtReal q =
          one_in(rng, 8) ? ExtReal::infinity()
                         : ExtReal(log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi));
      result.report = check_ilJq_endpoints(f, J, q, tol);
      result.input = Json{{"f", to_json(f)}, {"J", J.points()}, {"q", ext_to_json(q)}};
      break;
    }
    case Suite::thm_K: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const IndexGrid J =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      const IndexGrid Q =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      result.report = check_ilJQ_two_sided(f, J, Q, tol);
      result.input = Json{{"f", to_json(f)}, {"J", J.points()}, {"Q", Q.points()}};
      break;
    }
    case Suite::prop3_6_product: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      std::vector<double> g_values;
      for (std::size_t i = 0; i < f.atoms().size(); ++i) {
        g_values.push_back(one_in(rng, 16) ? 0.0
                                           : log_uniform(rng, ranges.value_range.first,
                                                         ranges.value_range.second));
      }
      const SimpleFunction g = f.with_values(g_values);
      const ExtReal p =
          one_in(rng, 8) ? ExtReal::infinity()
                         : ExtReal(log_uniform(rng, d::kFuncIndexLo, d::kFuncIndexHi));
      result.report = check_product_bound(f, g, p, tol);
      result.input = Json{{"f", to_json(f)}, {"g", to_json(g)}, {"p", ext_to_json(p)}};
      break;
    }
    case Suite::prop3_7_ab: {
      const SimpleFunction f = generate_step_function(rng, ranges);
      const IndexGrid J =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      const IndexGrid Q =
          generate_index_grid(rng, d::kFuncIndexLo, d::kFuncIndexHi, ranges.grid_size_range);
      result.report = check_ab_decomposition(f, J, Q, tol);
      result.input = Json{{"f", to_json(f)}, {"J", J.points()}, {"Q", Q.points()}};
      break;
    }
    case Suite::seq_def_lp: {
      const NormSequence s = generate_norm_sequence(rng, ranges);
      const double p = log_uniform(rng, d::kSeqIndexLo, d::kSeqIndexHi);
      double classical = 0.0;
      for (double t : s.terms()) {
        if (t > 0.0) classical += std::pow(t, p);
      }
      classical = std::pow(classical, 1.0 / p);
      const double via_lorentz = seq_lorentz_norm(s, p, p).value();
      result.report = d::equality_report(via_lorentz, classical, tol, "p=" + format_double(p));
      result.input = Json{{"s", to_json(s)}, {"p", p}};
      break;
    }
    case Suite::prop22_i: {
      const NormSequence s = generate_norm_sequence(rng, ranges);
      const double p = log_uniform(rng, d::kSeqIndexLo, d::kSeqIndexHi);
      const auto qs = d::sorted_distinct(rng, 2, d::kSeqIndexLo, d::kSeqIndexHi);
      const ExtReal q1 = one_in(rng, 4) ? ExtReal::infinity() : ExtReal(qs[1]);
      result.report = check_prop22_i(s, p, qs[0], q1, tol);
      result.input = Json{{"s", to_json(s)}, {"p", p}, {"q", qs[0]}, {"q1", ext_to_json(q1)}};
      break;
    }
    case Suite::prop22_ii: {
      const NormSequence s = generate_norm_sequence(rng, ranges);
      const auto ps = d::sorted_distinct(rng, 2, d::kSeqIndexLo, d::kSeqIndexHi);
      ExtReal p1 = one_in(rng, 4) ? ExtReal::infinity() : ExtReal(ps[1]);
      ExtReal q = one_in(rng, 4) ? ExtReal::infinity()
                                 : ExtReal(log_uniform(rng, d::kSeqIndexLo, d::kSeqIndexHi));
      if (p1.infinite() && q.infinite()) q = ExtReal(ps[1]);  // (inf,inf) is out of range
      result.report = check_prop22_ii(s, ps[0], p1, q, tol);
      result.input =
          Json{{"s", to_json(s)}, {"p", ps[0]}, {"p1", ext_to_json(p1)}, {"q", ext_to_json(q)}};
      break;
    }
    case Suite::prop_p15: {
      const NormSequence s = generate_norm_sequence(rng, ranges);
      const IndexGrid J =
          generate_index_grid(rng, d::kSeqIndexLo, d::kSeqIndexHi, ranges.grid_size_range);
      const IndexGrid Q =
          generate_index_grid(rng, d::kSeqIndexLo, d::kSeqIndexHi, ranges.grid_size_range);
      result.report = check_seq_ilJQ(s, J, Q, tol);
      result.input = Json{{"s", to_json(s)}, {"J", J.points()}, {"Q", Q.points()}};
      break;
    }
  }
  return result;
}

inline RunReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.suite = suite_name(config.suite);
  for (std::uint64_t offset = 0; offset < config.trials; ++offset) {
    TrialResult trial = run_trial(config, offset);
    ++report.trials_run;
    const double lhs = trial.report.lhs.value();
    const double rhs = trial.report.rhs.value();
    if (rhs > 0.0 && std::isfinite(rhs) && std::isfinite(lhs)) {
      report.max_tightness = std::max(report.max_tightness, lhs / rhs);
    }
    if (!trial.report.passed) {
      report.failures.push_back(
          FailureRecord{offset, std::move(trial.input), std::move(trial.report)});
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const FailureRecord& a, const FailureRecord& b) {
              return a.seed_offset < b.seed_offset;
            });
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Json to_json(const CheckReport& r) {
  return Json{{"lhs", ext_to_json(r.lhs)},   {"rhs", ext_to_json(r.rhs)},
              {"constant", r.constant},      {"slack", std::isinf(r.slack) ? Json("inf")
                                                                           : Json(r.slack)},
              {"passed", r.passed},          {"witness", r.witness}};
}

inline Json to_json(const RunReport& r, bool include_timing = true) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        Json{{"seed_offset", f.seed_offset}, {"input", f.input}, {"report", to_json(f.report)}});
  }
  Json out{{"suite", r.suite},
           {"trials", r.trials_run},
           {"failures", failures},
           {"max_tightness", r.max_tightness}};
  if (include_timing) out["wall_time_seconds"] = r.wall_time_seconds;
  return out;
}

inline double json_to_double(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  return j.get<double>();
}

inline CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.lhs = ExtReal(json_to_double(j.at("lhs")));
  r.rhs = ExtReal(json_to_double(j.at("rhs")));
  r.constant = j.at("constant").get<double>();
  r.slack = json_to_double(j.at("slack"));
  r.passed = j.at("passed").get<bool>();
  r.witness = j.at("witness").get<std::string>();
  return r;
}

inline RunReport run_report_from_json(const Json& j) {
  RunReport r;
  r.suite = j.at("suite").get<std::string>();
  r.trials_run = j.at("trials").get<std::uint64_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back(FailureRecord{f.at("seed_offset").get<std::uint64_t>(), f.at("input"),
                                       check_report_from_json(f.at("report"))});
  }
  r.max_tightness = j.at("max_tightness").get<double>();
  if (j.contains("wall_time_seconds")) {
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  }
  return r;
}

// Text output carries no timing, so identical (suite, seed, config) runs
// emit byte-identical text.
inline std::string emit_report(const RunReport& r, Format format, bool include_timing = true,
                               std::uint64_t base_seed = 0) {
  switch (format) {
    case Format::json:
      return to_json(r, include_timing).dump(2) + "\n";
    case Format::csv: {
      std::string out = "suite,trials,failures,max_tightness\n";
      out += r.suite + "," + std::to_string(r.trials_run) + "," +
             std::to_string(r.failures.size()) + "," + format_double(r.max_tightness) + "\n";
      return out;
    }
    case Format::text: {
      if (r.passed()) {
        return "OK " + r.suite + ": " + std::to_string(r.trials_run) +
               " trials, 0 failures, max tightness " + format_double(r.max_tightness) + "\n";
      }
      std::string out = "FAIL " + r.suite + ": " + std::to_string(r.failures.size()) + " of " +
                        std::to_string(r.trials_run) + " trials failed\n";
      for (const auto& f : r.failures) {
        out += "  trial " + std::to_string(f.seed_offset) +
               ": lhs=" + format_ext(f.report.lhs) + " rhs=" + format_ext(f.report.rhs) +
               " constant=" + format_double(f.report.constant) +
               " slack=" + format_double(f.report.slack) + "\n";
        out += "    witness: " + f.report.witness + "\n";
        out += "    input: " + f.input.dump() + "\n";
        out += "    replay: check --suite " + r.suite + " --trials 1 --seed " +
               std::to_string(base_seed + f.seed_offset) + "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace lorentz
