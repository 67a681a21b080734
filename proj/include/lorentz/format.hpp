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

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lorentz/ext_real.hpp"

namespace lorentz {

// Shortest round-trip decimal form; infinities are spelled "inf" in every
// serialized format.
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_ext(ExtReal v) { return format_double(v.value()); }

// Parses "inf" or a nonnegative decimal into an ExtReal.
inline ExtReal parse_ext(const std::string& text) {
  if (text == "inf") return ExtReal::infinity();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("expected a number or \"inf\", got \"" + text + "\"");
  }
  return ExtReal(v);
}

}  // namespace lorentz
