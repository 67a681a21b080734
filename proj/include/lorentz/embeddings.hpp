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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lorentz/ext_real.hpp"
#include "lorentz/format.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/simple_function.hpp"
#include "lorentz/step_profile.hpp"

namespace lorentz {

// A finite stand-in for an index set J or Q: strictly increasing positive
// points with the infimum as first element. The supremum may be the
// infinity marker (last point), though most checks require it finite.
class IndexGrid {
 public:
  explicit IndexGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("IndexGrid: at least one point required");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (std::isnan(points_[i]) || !(points_[i] > 0.0)) {
        throw std::invalid_argument("IndexGrid: points must be positive");
      }
      if (i > 0 && !(points_[i] > points_[i - 1])) {
        throw std::invalid_argument("IndexGrid: points must be strictly increasing");
      }
      if (std::isinf(points_[i]) && i + 1 != points_.size()) {
        throw std::invalid_argument("IndexGrid: only the supremum may be infinite");
      }
    }
    if (std::isinf(points_.front())) {
      throw std::invalid_argument("IndexGrid: the infimum must be finite");
    }
  }

  const std::vector<double>& points() const { return points_; }
  double infimum() const { return points_.front(); }
  ExtReal supremum() const { return ExtReal(points_.back()); }
  bool finite_supremum() const { return !std::isinf(points_.back()); }

  std::string describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) s += ",";
      s += format_double(points_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<double> points_;
};

// Pass tolerance for inequality checks: lhs <= rhs * (1 + rel) + abs.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

// Outcome of a single inequality check. For multi-part checks lhs/rhs/slack
// describe the binding comparison (smallest slack); the witness names the
// inputs and lists every part.
struct CheckReport {
  NormValue lhs{0.0};
  NormValue rhs{0.0};
  double constant = 1.0;
  double slack = 0.0;  // rhs - lhs
  bool passed = false;
  std::string witness;
};

namespace detail {

inline bool leq_with_tol(double lhs, double rhs, Tolerance tol) {
  if (std::isnan(lhs) || std::isnan(rhs)) return false;
  if (std::isinf(rhs)) return true;
  if (std::isinf(lhs)) return false;
  return lhs <= rhs * (1.0 + tol.rel) + tol.abs;
}

inline double slack_of(double lhs, double rhs) {
  if (std::isinf(lhs) && std::isinf(rhs)) return 0.0;
  return rhs - lhs;
}

struct Part {
  double lhs;
  double rhs;
};

// Folds the parts into one report, keeping the comparison with least slack.
inline CheckReport fold_parts(const std::vector<Part>& parts, double constant,
                              std::string witness, Tolerance tol) {
  CheckReport report;
  report.constant = constant;
  report.passed = true;
  bool first = true;
  for (const auto& part : parts) {
    if (!leq_with_tol(part.lhs, part.rhs, tol)) report.passed = false;
    const double slack = slack_of(part.lhs, part.rhs);
    if (first || slack < report.slack) {
      report.lhs = NormValue(std::isnan(part.lhs) ? 0.0 : part.lhs);
      report.rhs = std::isinf(part.rhs) ? NormValue::infinity() : NormValue(part.rhs);
      report.slack = slack;
      first = false;
    }
  }
  report.witness = std::move(witness);
  return report;
}

}  // namespace detail

// The constant C(p1, p2, p, s) bounding ||f||_{p,s} by the weak norms at
// p1 and p2:
//   C = ( p / (s - s p1/p) )^{1/s} + ( p / (s p2/p - s) )^{1/s}.
// Blows up as p approaches either endpoint; that is the pole structure of
// the embedding, not an error.
inline double interpolation_constant(double p1, double p2, double p, double s) {
  if (!(0.0 < p1 && p1 < p && p < p2) || std::isinf(p2) || !(s > 0.0) || std::isinf(s)) {
    throw std::invalid_argument("interpolation_constant: need 0 < p1 < p < p2 < inf, 0 < s < inf");
  }
  const double first = std::pow(p / (s - s * p1 / p), 1.0 / s);
  const double second = std::pow(p / (s * p2 / p - s), 1.0 / s);
  return first + second;
}

// The crossover point B where the p1- and p2-weak Chebyshev bounds on d_f
// exchange roles:
//   B = ( ||f||_{p2,inf}^{p2} / ||f||_{p1,inf}^{p1} )^{1/(p2 - p1)}.
inline ExtReal crossover_point(const SimpleFunction& f, double p1, double p2) {
  if (!(0.0 < p1 && p1 < p2) || std::isinf(p2)) {
    throw std::invalid_argument("crossover_point: need 0 < p1 < p2 < inf");
  }
  const double n1 = lorentz_norm(f, {p1, ExtReal::infinity()}).value();
  const double n2 = lorentz_norm(f, {p2, ExtReal::infinity()}).value();
  if (n1 == 0.0) {
    throw std::domain_error("crossover_point: ||f||_{p1,inf} is zero (f vanishes a.e.)");
  }
  return ExtReal(std::exp((p2 * std::log(n2) - p1 * std::log(n1)) / (p2 - p1)));
}

// ||f||_{p,s} <= C(p1,p2,p,s) * ||f||_{p1,inf}^{(p1/p)(p2-p)/(p2-p1)}
//                             * ||f||_{p2,inf}^{(p2/p)(p-p1)/(p2-p1)}.
inline CheckReport check_interpolation(const SimpleFunction& f, double p1, double p2, double p,
                                       double s, Tolerance tol = {}) {
  const double constant = interpolation_constant(p1, p2, p, s);
  const double lhs = lorentz_norm(f, {p, s}).value();
  double rhs = 0.0;
  if (!f.is_zero()) {
    const double n1 = lorentz_norm(f, {p1, ExtReal::infinity()}).value();
    const double n2 = lorentz_norm(f, {p2, ExtReal::infinity()}).value();
    const double e1 = (p1 / p) * (p2 - p) / (p2 - p1);
    const double e2 = (p2 / p) * (p - p1) / (p2 - p1);
    rhs = constant * std::pow(n1, e1) * std::pow(n2, e2);
  }
  std::string witness = "p1=" + format_double(p1) + " p=" + format_double(p) +
                        " p2=" + format_double(p2) + " s=" + format_double(s) +
                        " atoms=" + std::to_string(f.atoms().size());
  return detail::fold_parts({{lhs, rhs}}, constant, std::move(witness), tol);
}

// The p2 = inf arm: ||f||_{p,s}^s <= p/(s - s p1/p) * ||f||_{p1,inf}^{s p1/p}
// * ||f||_inf^{s - s p1/p}. Checked in the equivalent s-th-root form, which
// keeps both sides in representable range.
inline CheckReport check_interpolation_infinite_top(const SimpleFunction& f, double p1, double p,
                                                    double s, Tolerance tol = {}) {
  if (!(0.0 < p1 && p1 < p) || std::isinf(p) || !(s > 0.0) || std::isinf(s)) {
    throw std::invalid_argument(
        "check_interpolation_infinite_top: need 0 < p1 < p < inf, 0 < s < inf");
  }
  const double constant = std::pow(p / (s - s * p1 / p), 1.0 / s);
  const double lhs = lorentz_norm(f, {p, s}).value();
  double rhs = 0.0;
  if (!f.is_zero()) {
    const double n1 = lorentz_norm(f, {p1, ExtReal::infinity()}).value();
    const double ninf = lebesgue_norm(f, ExtReal::infinity()).value();
    rhs = constant * std::pow(n1, p1 / p) * std::pow(ninf, 1.0 - p1 / p);
  }
  std::string witness = "p1=" + format_double(p1) + " p=" + format_double(p) +
                        " s=" + format_double(s) + " atoms=" + std::to_string(f.atoms().size());
  return detail::fold_parts({{lhs, rhs}}, constant, std::move(witness), tol);
}

// ||f||_{r,q} <= 2^{1/q} max{ ||f||_{p1,q}, ||f||_{p2,q} } for p1 < r < p2,
// with constant 1 when q = inf.
inline CheckReport check_two_point(const SimpleFunction& f, double p1, double r, ExtReal p2,
                                   ExtReal q, Tolerance tol = {}) {
  if (!(0.0 < p1 && p1 < r) || !(ExtReal(r) < p2)) {
    throw std::invalid_argument("check_two_point: need 0 < p1 < r < p2");
  }
  const double constant = q.infinite() ? 1.0 : std::pow(2.0, 1.0 / q.value());
  const double lhs = lorentz_norm(f, {r, q}).value();
  const double n1 = lorentz_norm(f, {p1, q}).value();
  const double n2 = lorentz_norm(f, {p2, q}).value();
  const double rhs = constant * std::max(n1, n2);
  std::string witness = "p1=" + format_double(p1) + " r=" + format_double(r) +
                        " p2=" + format_ext(p2) + " q=" + format_ext(q) +
                        " atoms=" + std::to_string(f.atoms().size());
  return detail::fold_parts({{lhs, rhs}}, constant, std::move(witness), tol);
}

// The Chebyshev-type bound d_f(alpha) <= ( ||f||_{p,inf} / alpha )^p.
inline CheckReport check_chebyshev(const SimpleFunction& f, double p, double alpha,
                                   Tolerance tol = {}) {
  if (!(p > 0.0) || std::isinf(p) || !(alpha > 0.0)) {
    throw std::invalid_argument("check_chebyshev: need finite p > 0 and alpha > 0");
  }
  const double lhs = distribution(f, alpha).value();
  const double weak = lorentz_norm(f, {p, ExtReal::infinity()}).value();
  const double rhs = std::pow(weak / alpha, p);
  std::string witness = "p=" + format_double(p) + " alpha=" + format_double(alpha) +
                        " atoms=" + std::to_string(f.atoms().size());
  return detail::fold_parts({{lhs, rhs}}, 1.0, std::move(witness), tol);
}

// Two-sided sandwich over a grid Q of second indices:
//   ||f||_{p,m_Q} <= max_{q in Q} ||f||_{p,q}
//                 <= max{1, (m_Q/p)^{1/m_Q}} ||f||_{p,m_Q}.
inline CheckReport check_ilpQ_sandwich(const SimpleFunction& f, double p, const IndexGrid& Q,
                                       Tolerance tol = {}) {
  if (!(p > 0.0) || std::isinf(p)) {
    throw std::invalid_argument("check_ilpQ_sandwich: need finite p > 0");
  }
  if (!Q.finite_supremum()) {
    throw std::invalid_argument("check_ilpQ_sandwich: Q must contain finite indices only");
  }
  const double mq = Q.infimum();
  const double base = lorentz_norm(f, {p, mq}).value();
  double sup = 0.0;
  for (double q : Q.points()) sup = std::max(sup, lorentz_norm(f, {p, q}).value());
  const double constant = std::max(1.0, std::pow(mq / p, 1.0 / mq));
  std::string witness = "p=" + format_double(p) + " Q=" + Q.describe() +
                        " lower_slack=" + format_double(detail::slack_of(base, sup)) +
                        " upper_slack=" + format_double(detail::slack_of(sup, constant * base));
  return detail::fold_parts({{base, sup}, {sup, constant * base}}, constant, std::move(witness),
                            tol);
}

// Endpoint control over a grid J of first indices:
//   for each p in J, ||f||_{p,q} <= 2^{1/q} max{ ||f||_{m_J,q}, ||f||_{M_J,q} },
// plus the converse sanity bound max{...} <= max_{p in J} ||f||_{p,q}.
inline CheckReport check_ilJq_endpoints(const SimpleFunction& f, const IndexGrid& J, ExtReal q,
                                        Tolerance tol = {}) {
  if (!J.finite_supremum()) {
    throw std::invalid_argument("check_ilJq_endpoints: J must have a finite supremum");
  }
  const double constant = q.infinite() ? 1.0 : std::pow(2.0, 1.0 / q.value());
  std::vector<double> norms;
  norms.reserve(J.points().size());
  double sup = 0.0;
  for (double p : J.points()) {
    norms.push_back(lorentz_norm(f, {p, q}).value());
    sup = std::max(sup, norms.back());
  }
  const double ends = std::max(norms.front(), norms.back());
  std::vector<detail::Part> parts;
  for (double n : norms) parts.push_back({n, constant * ends});
  parts.push_back({ends, sup});
  std::string witness =
      "J=" + J.describe() + " q=" + format_ext(q) + " atoms=" + std::to_string(f.atoms().size());
  return detail::fold_parts(parts, constant, std::move(witness), tol);
}

// The two-sided equivalence over a product grid J x Q with
//   K = 2^{1/m_Q} max{1, (m_Q/m_J)^{1/m_Q}}:
//   max{||f||_{m_J,m_Q}, ||f||_{M_J,m_Q}} <= sup_{J x Q} ||f||_{p,q}
//                                         <= K max{...}.
inline CheckReport check_ilJQ_two_sided(const SimpleFunction& f, const IndexGrid& J,
                                        const IndexGrid& Q, Tolerance tol = {}) {
  if (!J.finite_supremum() || !Q.finite_supremum()) {
    throw std::invalid_argument("check_ilJQ_two_sided: J and Q must have finite suprema");
  }
  const double mj = J.infimum();
  const double mq = Q.infimum();
  const double ends = std::max(lorentz_norm(f, {mj, mq}).value(),
                               lorentz_norm(f, {J.supremum().value(), mq}).value());
  double sup = 0.0;
  for (double p : J.points()) {
    for (double q : Q.points()) sup = std::max(sup, lorentz_norm(f, {p, q}).value());
  }
  const double constant =
      std::pow(2.0, 1.0 / mq) * std::max(1.0, std::pow(mq / mj, 1.0 / mq));
  std::string witness = "J=" + J.describe() + " Q=" + Q.describe() +
                        " lower_slack=" + format_double(detail::slack_of(ends, sup)) +
                        " upper_slack=" + format_double(detail::slack_of(sup, constant * ends));
  return detail::fold_parts({{ends, sup}, {sup, constant * ends}}, constant, std::move(witness),
                            tol);
}

// The product bound: pointwise (fg)*(t) <= f*(t/2) g*(t/2) on an exhaustive
// breakpoint grid, and ||fg||_{p,inf} <= 2^{1/p} ||g||_{p,inf} ||f||_inf.
inline CheckReport check_product_bound(const SimpleFunction& f, const SimpleFunction& g, ExtReal p,
                                       Tolerance tol = {}) {
  if (!(p.value() > 0.0)) {
    throw std::invalid_argument("check_product_bound: need p > 0");
  }
  const SimpleFunction fg = pointwise_product(f, g);  // throws on domain mismatch
  const StepProfile fs = rearrangement(f);
  const StepProfile gs = rearrangement(g);
  const StepProfile fgs = rearrangement(fg);

  // Both sides of the pointwise bound are right-continuous step functions
  // of t whose breakpoints lie in this set, so checking the breakpoints and
  // one interior point per gap is exhaustive.
  std::vector<double> grid;
  for (const auto& s : fgs.segments()) grid.push_back(s.right_endpoint);
  for (const auto& s : fs.segments()) grid.push_back(2.0 * s.right_endpoint);
  for (const auto& s : gs.segments()) grid.push_back(2.0 * s.right_endpoint);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> eval_points;
  double prev = 0.0;
  for (double b : grid) {
    eval_points.push_back(prev + (b - prev) / 2.0);
    eval_points.push_back(b);
    prev = b;
  }
  eval_points.push_back(prev + 1.0);

  std::vector<detail::Part> parts;
  for (double t : eval_points) {
    if (!(t > 0.0)) continue;
    parts.push_back({fgs(t), fs(t / 2.0) * gs(t / 2.0)});
  }

  const double constant = p.infinite() ? 1.0 : std::pow(2.0, 1.0 / p.value());
  const double lhs = lorentz_norm(fgs, {p, ExtReal::infinity()}).value();
  const double rhs = constant * lorentz_norm(gs, {p, ExtReal::infinity()}).value() *
                     lebesgue_norm(f, ExtReal::infinity()).value();
  parts.push_back({lhs, rhs});
  std::string witness = "p=" + format_ext(p) + " atoms=" + std::to_string(f.atoms().size()) +
                        " grid_points=" + std::to_string(eval_points.size());
  return detail::fold_parts(parts, constant, std::move(witness), tol);
}

// The A-and-B decomposition bound: with M = max_{p in J} ||f||_{p,m_Q},
//   sup_{J x Q} ||f||_{p,q} <= max{1, (m_Q/m_J)^{1/m_Q}} * M.
inline CheckReport check_ab_decomposition(const SimpleFunction& f, const IndexGrid& J,
                                          const IndexGrid& Q, Tolerance tol = {}) {
  if (!J.finite_supremum() || !Q.finite_supremum()) {
    throw std::invalid_argument("check_ab_decomposition: J and Q must have finite suprema");
  }
  const double mj = J.infimum();
  const double mq = Q.infimum();
  double column_max = 0.0;
  for (double p : J.points()) {
    column_max = std::max(column_max, lorentz_norm(f, {p, mq}).value());
  }
  double sup = 0.0;
  for (double p : J.points()) {
    for (double q : Q.points()) sup = std::max(sup, lorentz_norm(f, {p, q}).value());
  }
  const double constant = std::max(1.0, std::pow(mq / mj, 1.0 / mq));
  std::string witness = "J=" + J.describe() + " Q=" + Q.describe() +
                        " column_max=" + format_double(column_max);
  return detail::fold_parts({{sup, constant * column_max}}, constant, std::move(witness), tol);
}

}  // namespace lorentz
