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
#include <limits>
#include <stdexcept>
#include <string>

namespace lorentz {

// Extended nonnegative real: a finite value >= 0 or +infinity.
//
// The infinity arm follows the usual measure-theoretic conventions
// (inf of an empty set, norms of functions outside the space). The one
// indeterminate form, 0 * inf, is rejected instead of silently producing
// a NaN.
class ExtReal {
 public:
  constexpr ExtReal() = default;

  // Implicit by design: ExtReal is a drop-in numeric value type.
  ExtReal(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0) {
      throw std::invalid_argument("ExtReal: value must be >= 0 and not NaN, got " +
                                  std::to_string(v));
    }
  }

  static ExtReal infinity() {
    ExtReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool finite() const { return std::isfinite(v_); }
  bool infinite() const { return std::isinf(v_); }

  // The raw double; +inf for the infinity marker.
  double value() const { return v_; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }

  friend ExtReal operator*(ExtReal a, ExtReal b) {
    if ((a.v_ == 0.0 && b.infinite()) || (b.v_ == 0.0 && a.infinite())) {
      throw std::domain_error("ExtReal: 0 * infinity is undefined");
    }
    return ExtReal(a.v_ * b.v_);
  }

 private:
  double v_ = 0.0;
};

// base^exponent for exponent > 0; inf^e = inf, 0^e = 0.
inline ExtReal pow(ExtReal base, double exponent) {
  if (!(exponent > 0.0)) {
    throw std::invalid_argument("ExtReal pow: exponent must be positive");
  }
  if (base.infinite()) return ExtReal::infinity();
  return ExtReal(std::pow(base.value(), exponent));
}

inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

}  // namespace lorentz
