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
#include <functional>
#include <string>
#include <vector>

#include "lorentz/embeddings.hpp"
#include "lorentz/ext_real.hpp"
#include "lorentz/format.hpp"
#include "lorentz/norms.hpp"

namespace lorentz {

// A finitely supported sequence of term norms ||x_i||. Vector-valued
// sequences enter only through these scalars, so no Banach space is
// committed to.
class NormSequence {
 public:
  NormSequence() = default;

  explicit NormSequence(std::vector<double> terms) : terms_(std::move(terms)) {
    for (double t : terms_) {
      if (std::isnan(t) || t < 0.0 || std::isinf(t)) {
        throw std::invalid_argument("NormSequence: terms must be finite and >= 0");
      }
    }
  }

  const std::vector<double>& terms() const { return terms_; }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](double t) { return t == 0.0; });
  }

  friend bool operator==(const NormSequence&, const NormSequence&) = default;

 private:
  std::vector<double> terms_;
};

// Non-increasing rearrangement; zeros are dropped from the tail.
inline NormSequence seq_rearrange(const NormSequence& s) {
  std::vector<double> sorted = s.terms();
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  while (!sorted.empty() && sorted.back() == 0.0) sorted.pop_back();
  return NormSequence(std::move(sorted));
}

// The sequence Lorentz norm over the non-increasing rearrangement r:
//   ( sum_i i^{q/p - 1} r_i^q )^{1/q}   for 1 <= p <= inf, 1 <= q < inf
//   sup_i i^{1/p} r_i                   for 1 <= p < inf, q = inf.
// (p, q) = (inf, inf) lies outside the definition and is rejected.
inline NormValue seq_lorentz_norm(const NormSequence& s, ExtReal p, ExtReal q) {
  if (p.infinite() && q.infinite()) {
    throw std::invalid_argument("seq_lorentz_norm: (p,q) = (inf,inf) is not defined");
  }
  if (!(p.value() >= 1.0) || !(q.value() >= 1.0)) {
    throw std::invalid_argument("seq_lorentz_norm: indices must be >= 1");
  }
  const NormSequence r = seq_rearrange(s);
  if (q.infinite()) {
    const double pe = p.value();
    double best = 0.0;
    for (std::size_t i = 0; i < r.terms().size(); ++i) {
      best = std::max(best, std::pow(static_cast<double>(i + 1), 1.0 / pe) * r.terms()[i]);
    }
    return NormValue(best);
  }
  const double qe = q.value();
  const double expo = p.infinite() ? -1.0 : qe / p.value() - 1.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < r.terms().size(); ++i) {
    sum += std::pow(static_cast<double>(i + 1), expo) * std::pow(r.terms()[i], qe);
  }
  return NormValue(std::pow(sum, 1.0 / qe));
}

// Inclusion in the second index: for 1 <= p < inf and 1 <= q < q1 <= inf,
//   ||s||_{p,q1} <= (q/p)^{1/q - 1/q1} ||s||_{p,q}   when p < q,
//   ||s||_{p,q1} <= ||s||_{p,q}                      when p >= q,
// and in all cases ||s||_{p,q1} <= max{1, q/p} ||s||_{p,q}. Both the sharp
// and the blanket form are checked.
inline CheckReport check_prop22_i(const NormSequence& s, double p, double q, ExtReal q1,
                                  Tolerance tol = {}) {
  if (!(p >= 1.0) || std::isinf(p) || !(q >= 1.0) || std::isinf(q) || !(ExtReal(q) < q1)) {
    throw std::invalid_argument("check_prop22_i: need 1 <= p < inf and 1 <= q < q1 <= inf");
  }
  const double inv_q1 = q1.infinite() ? 0.0 : 1.0 / q1.value();
  const double sharp = p < q ? std::pow(q / p, 1.0 / q - inv_q1) : 1.0;
  const double blanket = std::max(1.0, q / p);
  const double lhs = seq_lorentz_norm(s, p, q1).value();
  const double base = seq_lorentz_norm(s, p, q).value();
  std::string witness = "p=" + format_double(p) + " q=" + format_double(q) +
                        " q1=" + format_ext(q1) + " len=" + std::to_string(s.terms().size()) +
                        " sharp=" + format_double(sharp) + " blanket=" + format_double(blanket);
  return detail::fold_parts({{lhs, sharp * base}, {lhs, blanket * base}}, sharp,
                            std::move(witness), tol);
}

// Inclusion in the first index with constant 1:
//   ||s||_{p1,q} <= ||s||_{p,q} for p < p1 (q = inf requires p1 < inf).
inline CheckReport check_prop22_ii(const NormSequence& s, double p, ExtReal p1, ExtReal q,
                                   Tolerance tol = {}) {
  if (!(p >= 1.0) || std::isinf(p) || !(ExtReal(p) < p1) || !(q.value() >= 1.0)) {
    throw std::invalid_argument("check_prop22_ii: need 1 <= p < p1 and q >= 1");
  }
  if (q.infinite() && p1.infinite()) {
    throw std::invalid_argument("check_prop22_ii: q = inf requires p1 < inf");
  }
  const double lhs = seq_lorentz_norm(s, p1, q).value();
  const double rhs = seq_lorentz_norm(s, p, q).value();
  std::string witness = "p=" + format_double(p) + " p1=" + format_ext(p1) +
                        " q=" + format_ext(q) + " len=" + std::to_string(s.terms().size());
  return detail::fold_parts({{lhs, rhs}}, 1.0, std::move(witness), tol);
}

// The intersection collapse over grids J, Q in [1, inf): the whole grid of
// norms is controlled by the corner norm,
//   max_{(p,q) in J x Q} ||s||_{p,q} <= max{1, m_Q/m_J} ||s||_{m_J,m_Q},
// via the per-column bound max_{q} ||s||_{p,q} <= max{1, m_Q/p} ||s||_{p,m_Q}
// and monotonicity in p (the column at m_J dominates every other column).
inline CheckReport check_seq_ilJQ(const NormSequence& s, const IndexGrid& J, const IndexGrid& Q,
                                  Tolerance tol = {}) {
  if (!(J.infimum() >= 1.0) || !(Q.infimum() >= 1.0) || !J.finite_supremum() ||
      !Q.finite_supremum()) {
    throw std::invalid_argument("check_seq_ilJQ: J and Q must be finite grids in [1, inf)");
  }
  const double mj = J.infimum();
  const double mq = Q.infimum();
  const double corner = seq_lorentz_norm(s, mj, mq).value();
  std::vector<detail::Part> parts;
  double sup = 0.0;
  for (double p : J.points()) {
    double column_sup = 0.0;
    for (double q : Q.points()) {
      const double n = seq_lorentz_norm(s, p, q).value();
      column_sup = std::max(column_sup, n);
      // monotonicity in p: the m_J column dominates
      parts.push_back({n, seq_lorentz_norm(s, mj, q).value()});
    }
    parts.push_back({column_sup, std::max(1.0, mq / p) * seq_lorentz_norm(s, p, mq).value()});
    sup = std::max(sup, column_sup);
  }
  const double constant = std::max(1.0, mq / mj);
  parts.push_back({sup, constant * corner});
  std::string witness = "J=" + J.describe() + " Q=" + Q.describe() +
                        " corner=" + format_double(corner) + " sup=" + format_double(sup);
  return detail::fold_parts(parts, constant, std::move(witness), tol);
}

}  // namespace lorentz
