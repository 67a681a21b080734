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
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

// A non-increasing, right-continuous, piecewise-constant function on
// [0, infinity) with finitely many steps and value 0 past the last step.
//
// Both the distribution function d_f and the decreasing rearrangement f*
// of a simple function have this shape, and they are generalized inverses
// of one another (see generalized_inverse()).
class StepProfile {
 public:
  struct Segment {
    double value;           // constant value on the segment, > 0
    double right_endpoint;  // segment covers [previous endpoint, this), > 0
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  // The zero profile.
  StepProfile() = default;

  // Segments must have strictly decreasing values and strictly increasing
  // endpoints; the first segment starts at 0.
  explicit StepProfile(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const auto& s = segments_[i];
      if (!(s.value > 0.0) || !(s.right_endpoint > 0.0)) {
        throw std::invalid_argument("StepProfile: segment values and endpoints must be positive");
      }
      if (i > 0 && !(s.value < segments_[i - 1].value)) {
        throw std::invalid_argument("StepProfile: values must be strictly decreasing");
      }
      if (i > 0 && !(s.right_endpoint > segments_[i - 1].right_endpoint)) {
        throw std::invalid_argument("StepProfile: endpoints must be strictly increasing");
      }
    }
  }

  const std::vector<Segment>& segments() const { return segments_; }
  bool is_zero() const { return segments_.empty(); }

  // Right endpoint of the support; 0 for the zero profile.
  double support_end() const { return segments_.empty() ? 0.0 : segments_.back().right_endpoint; }

  // Value at the start of the support (the largest value); 0 if empty.
  double top_value() const { return segments_.empty() ? 0.0 : segments_.front().value; }

  // Evaluate at t >= 0. Right-continuous: at a breakpoint the value of the
  // segment to the right is returned, and 0 past the last endpoint.
  double operator()(double t) const {
    if (!(t >= 0.0)) {
      throw std::invalid_argument("StepProfile: evaluation point must be >= 0");
    }
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double x, const Segment& s) { return x < s.right_endpoint; });
    return it == segments_.end() ? 0.0 : it->value;
  }

  // Lebesgue measure of {t : profile(t) > alpha}. Since the profile is
  // non-increasing this set is [0, e) for the endpoint e of the last
  // segment whose value exceeds alpha.
  double measure_above(double alpha) const {
    if (!(alpha >= 0.0)) {
      throw std::invalid_argument("StepProfile: threshold must be >= 0");
    }
    double measure = 0.0;
    for (const auto& s : segments_) {
      if (s.value > alpha) measure = s.right_endpoint;
    }
    return measure;
  }

  // The generalized inverse t -> inf{s > 0 : profile(s) <= t}, which is
  // again a step profile: reverse the segment list and swap the roles of
  // values and endpoints. Applying it twice gives back the original.
  StepProfile generalized_inverse() const {
    std::vector<Segment> inv;
    inv.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
      inv.push_back(Segment{it->right_endpoint, it->value});
    }
    return StepProfile(std::move(inv));
  }

  friend bool operator==(const StepProfile&, const StepProfile&) = default;

 private:
  std::vector<Segment> segments_;
};

}  // namespace lorentz
