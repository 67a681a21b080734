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

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lorentz/ext_real.hpp"
#include "lorentz/simple_function.hpp"
#include "lorentz/step_profile.hpp"

namespace lorentz {

// A Lorentz index pair (p, q), each in (0, infinity].
struct LorentzIndex {
  ExtReal p;
  ExtReal q;

  LorentzIndex(ExtReal p_, ExtReal q_) : p(p_), q(q_) {
    if (!(p.value() > 0.0) || !(q.value() > 0.0)) {
      throw std::invalid_argument("LorentzIndex: p and q must be positive");
    }
  }
};

using NormValue = ExtReal;

namespace detail {

// Evaluates (c * sum_k base_k^q * weight_k)^(1/q) with all base_k >= 0,
// weight_k in (0, 1], c > 0, scaling by max base_k so that no intermediate
// overflows even when base_k^q would not be representable. Terms that
// underflow after scaling are negligible by construction.
inline double scaled_power_mean(const std::vector<double>& bases,
                                const std::vector<double>& weights, double c, double q) {
  double top = 0.0;
  for (double b : bases) top = std::max(top, b);
  if (top == 0.0) return 0.0;
  if (std::isinf(top)) return top;
  double sum = 0.0;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    sum += std::pow(bases[k] / top, q) * weights[k];
  }
  return top * std::pow(c * sum, 1.0 / q);
}

// 1 - r^e for r in [0, 1), computed without cancellation.
inline double one_minus_pow(double r, double e) {
  if (r == 0.0) return 1.0;
  return -std::expm1(e * std::log(r));
}

}  // namespace detail

// The Lorentz quasi-norm of a non-increasing step profile (a decreasing
// rearrangement), evaluated in closed form.
//
// With the profile equal to v_k on [T_{k-1}, T_k):
//   p,q < inf : ( sum_k v_k^q (p/q) (T_k^{q/p} - T_{k-1}^{q/p}) )^{1/q}
//   q  = inf  : max_k v_k T_k^{1/p}  (the sup of t^{1/p} v_k on a segment
//               is approached at the right endpoint)
//   p  = inf, q < inf : 0 for the zero profile, +inf otherwise -- the
//               integral diverges at 0, so the space contains only 0
//   p = q = inf : the essential supremum v_1.
inline NormValue lorentz_norm(const StepProfile& rearranged, LorentzIndex idx) {
  if (rearranged.is_zero()) return NormValue(0.0);
  const bool p_inf = idx.p.infinite();
  const bool q_inf = idx.q.infinite();
  if (p_inf && q_inf) return NormValue(rearranged.top_value());
  if (p_inf) return NormValue::infinity();
  const double p = idx.p.value();
  if (q_inf) {
    double best = 0.0;
    for (const auto& s : rearranged.segments()) {
      best = std::max(best, s.value * std::pow(s.right_endpoint, 1.0 / p));
    }
    return NormValue(best);
  }
  const double q = idx.q.value();
  // Abel-style grouping: v_k^q (T_k^{q/p} - T_{k-1}^{q/p}) is written as
  // (v_k T_k^{1/p})^q * (1 - (T_{k-1}/T_k)^{q/p}) so magnitudes stay tame.
  std::vector<double> bases, weights;
  bases.reserve(rearranged.segments().size());
  weights.reserve(rearranged.segments().size());
  double prev_end = 0.0;
  for (const auto& s : rearranged.segments()) {
    bases.push_back(s.value * std::pow(s.right_endpoint, 1.0 / p));
    weights.push_back(detail::one_minus_pow(prev_end / s.right_endpoint, q / p));
    prev_end = s.right_endpoint;
  }
  return NormValue(detail::scaled_power_mean(bases, weights, p / q, q));
}

inline NormValue lorentz_norm(const SimpleFunction& f, LorentzIndex idx) {
  return lorentz_norm(rearrangement(f), idx);
}

// The same quasi-norm computed from the distribution function instead of
// the rearrangement:
//   ||f||_{p,s} = ( p * sum_j D_j^{s/p} (a_j^s - a_{j-1}^s) / s )^{1/s}
// where d_f equals D_j on [a_{j-1}, a_j). Algebraically equal to
// lorentz_norm by summation by parts; the groupings differ, which makes
// this an independent cross-check route.
inline NormValue lorentz_norm_via_distribution(const SimpleFunction& f, double p, double s) {
  if (!(p > 0.0) || std::isinf(p) || !(s > 0.0) || std::isinf(s)) {
    throw std::invalid_argument("lorentz_norm_via_distribution: p and s must be finite and > 0");
  }
  const StepProfile dist = distribution_profile(f);
  if (dist.is_zero()) return NormValue(0.0);
  std::vector<double> bases, weights;
  bases.reserve(dist.segments().size());
  weights.reserve(dist.segments().size());
  double prev_alpha = 0.0;
  for (const auto& seg : dist.segments()) {
    bases.push_back(std::pow(seg.value, 1.0 / p) * seg.right_endpoint);
    weights.push_back(detail::one_minus_pow(prev_alpha / seg.right_endpoint, s));
    prev_alpha = seg.right_endpoint;
  }
  return NormValue(detail::scaled_power_mean(bases, weights, p / s, s));
}

// The Lebesgue norm: (sum mass * value^p)^{1/p} for 1 <= p < inf, the bare
// sum for 0 < p < 1 (the quasi-norm convention), and the maximum value for
// p = inf.
inline NormValue lebesgue_norm(const SimpleFunction& f, ExtReal p) {
  if (!(p.value() > 0.0)) {
    throw std::invalid_argument("lebesgue_norm: p must be positive");
  }
  if (p.infinite()) {
    double best = 0.0;
    for (const auto& a : f.atoms()) best = std::max(best, a.value);
    return NormValue(best);
  }
  const double pe = p.value();
  double sum = 0.0;
  for (const auto& a : f.atoms()) {
    if (a.value > 0.0) sum += a.mass * std::pow(a.value, pe);
  }
  return NormValue(pe >= 1.0 ? std::pow(sum, 1.0 / pe) : sum);
}

// Midpoint-rule approximation of the (p, q < inf) quasi-norm integral,
// subdividing each segment of f* into `subdivisions` equal parts. Slow and
// deliberately naive: this is the independent oracle the closed forms are
// checked against.
inline NormValue quadrature_norm_oracle(const SimpleFunction& f, LorentzIndex idx,
                                        std::int64_t subdivisions) {
  if (idx.p.infinite() || idx.q.infinite()) {
    throw std::invalid_argument("quadrature_norm_oracle: p and q must be finite");
  }
  if (subdivisions < 1) {
    throw std::invalid_argument("quadrature_norm_oracle: subdivisions must be >= 1");
  }
  const double p = idx.p.value();
  const double q = idx.q.value();
  const double expo = q / p - 1.0;
  const StepProfile star = rearrangement(f);
  double integral = 0.0;
  double lo = 0.0;
  for (const auto& seg : star.segments()) {
    const double h = (seg.right_endpoint - lo) / static_cast<double>(subdivisions);
    double cell_sum = 0.0;
    for (std::int64_t i = 0; i < subdivisions; ++i) {
      const double t = lo + (static_cast<double>(i) + 0.5) * h;
      cell_sum += std::pow(t, expo);
    }
    integral += std::pow(seg.value, q) * cell_sum * h;
    lo = seg.right_endpoint;
  }
  return NormValue(std::pow(integral, 1.0 / q));
}

}  // namespace lorentz
