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

#include <catch2/catch_amalgamated.hpp>

#include "lorentz/ext_real.hpp"
#include "lorentz/format.hpp"

using lorentz::ExtReal;

TEST_CASE("construction validates the nonnegative finite-or-infinite domain") {
  CHECK(ExtReal(0.0).value() == 0.0);
  CHECK(ExtReal(3.5).finite());
  CHECK(ExtReal::infinity().infinite());
  CHECK_THROWS_AS(ExtReal(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(std::nan("")), std::invalid_argument);
}

TEST_CASE("arithmetic is total except the guarded 0 * inf") {
  const ExtReal inf = ExtReal::infinity();
  CHECK((ExtReal(2.0) + ExtReal(3.0)).value() == 5.0);
  CHECK((ExtReal(2.0) + inf).infinite());
  CHECK((inf + inf).infinite());
  CHECK((ExtReal(2.0) * ExtReal(3.0)).value() == 6.0);
  CHECK((ExtReal(2.0) * inf).infinite());
  CHECK((inf * inf).infinite());
  CHECK_THROWS_AS(ExtReal(0.0) * inf, std::domain_error);
  CHECK_THROWS_AS(inf * ExtReal(0.0), std::domain_error);
}

TEST_CASE("powers with positive exponents") {
  CHECK(lorentz::pow(ExtReal(4.0), 0.5).value() == 2.0);
  CHECK(lorentz::pow(ExtReal(0.0), 3.0).value() == 0.0);
  CHECK(lorentz::pow(ExtReal::infinity(), 0.25).infinite());
  CHECK_THROWS_AS(lorentz::pow(ExtReal(2.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lorentz::pow(ExtReal(2.0), -1.0), std::invalid_argument);
}

TEST_CASE("ordering treats infinity as the top element") {
  // This is the inf-of-the-empty-set convention: a rearrangement value of
  // infinity dominates every finite level. Simple functions never produce
  // it, so the branch lives here and nowhere else.
  const ExtReal inf = ExtReal::infinity();
  CHECK(ExtReal(1e300) < inf);
  CHECK(inf <= inf);
  CHECK(lorentz::max(ExtReal(7.0), inf).infinite());
  CHECK(lorentz::max(ExtReal(7.0), ExtReal(2.0)).value() == 7.0);
}

TEST_CASE("serialized spelling of infinity is \"inf\"") {
  CHECK(lorentz::format_ext(ExtReal::infinity()) == "inf");
  CHECK(lorentz::format_ext(ExtReal(1.5)) == "1.5");
  CHECK(lorentz::parse_ext("inf").infinite());
  CHECK(lorentz::parse_ext("2.25").value() == 2.25);
  CHECK_THROWS_AS(lorentz::parse_ext("two"), std::invalid_argument);
}
