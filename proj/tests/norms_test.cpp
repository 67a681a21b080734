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

#include <cmath>
#include <random>

#include "lorentz/generate.hpp"
#include "lorentz/norms.hpp"

using Catch::Matchers::WithinRel;
using lorentz::ExtReal;
using lorentz::LorentzIndex;
using lorentz::SimpleFunction;

namespace {

const ExtReal kInf = ExtReal::infinity();

SimpleFunction two_atoms() { return SimpleFunction::from_atoms({{1.0, 2.0}, {1.0, 1.0}}); }

}  // namespace

TEST_CASE("index validation") {
  CHECK_THROWS_AS(LorentzIndex(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LorentzIndex(1.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(LorentzIndex(kInf, kInf));
}

TEST_CASE("indicator norms follow (p/q)^{1/q} m^{1/p}") {
  // frozen from the segment closed form, independently confirmed by the
  // quadrature oracle below
  CHECK_THAT(lorentz::lorentz_norm(SimpleFunction::indicator(1.0), {2.0, 2.0}).value(),
             WithinRel(1.0, 1e-14));
  CHECK_THAT(lorentz::lorentz_norm(SimpleFunction::indicator(5.0), {1.0, 1.0}).value(),
             WithinRel(5.0, 1e-14));
  CHECK_THAT(lorentz::lorentz_norm(SimpleFunction::indicator(2.0), {2.0, 3.0}).value(),
             WithinRel(1.23542934105426516, 1e-14));
  CHECK_THAT(lorentz::lorentz_norm(SimpleFunction::indicator(3.0), {0.5, 2.0}).value(),
             WithinRel(4.5, 1e-14));
  CHECK_THAT(lorentz::lorentz_norm(SimpleFunction::indicator(1.0), {2.0, 1.0}).value(),
             WithinRel(2.0, 1e-14));
}

TEST_CASE("two-atom spot values") {
  const auto f = two_atoms();
  CHECK_THAT(lorentz::lorentz_norm(f, {1.0, 1.0}).value(), WithinRel(3.0, 1e-14));
  CHECK_THAT(lorentz::lorentz_norm(f, {1.0, kInf}).value(), WithinRel(2.0, 1e-14));
  // 2 + 2*sqrt(2)
  CHECK_THAT(lorentz::lorentz_norm(f, {2.0, 1.0}).value(),
             WithinRel(4.82842712474619009760, 1e-14));
  CHECK(lorentz::lorentz_norm(SimpleFunction::zero(), {1.5, 2.5}).value() == 0.0);
}

TEST_CASE("p = inf encodes the degeneracy of L_{inf,q}") {
  const auto f = two_atoms();
  for (double q : {0.5, 1.0, 2.0}) {
    CHECK(lorentz::lorentz_norm(f, {kInf, q}).infinite());
    CHECK(lorentz::lorentz_norm(SimpleFunction::zero(), {kInf, q}).value() == 0.0);
  }
  // (inf, inf) is the essential supremum
  CHECK(lorentz::lorentz_norm(f, {kInf, kInf}).value() == 2.0);
  CHECK(lorentz::lorentz_norm(SimpleFunction::zero(), {kInf, kInf}).value() == 0.0);
}

TEST_CASE("lebesgue norms and the p < 1 quasi-norm convention") {
  const auto f = two_atoms();
  CHECK_THAT(lorentz::lebesgue_norm(f, 1.0).value(), WithinRel(3.0, 1e-14));
  // no outer root below p = 1: 2^{1/2} + 1
  CHECK_THAT(lorentz::lebesgue_norm(f, 0.5).value(), WithinRel(2.41421356237309505, 1e-14));
  CHECK(lorentz::lebesgue_norm(f, kInf).value() == 2.0);
  CHECK_THROWS_AS(lorentz::lebesgue_norm(f, 0.0), std::invalid_argument);
}

TEST_CASE("distribution-function route agrees on spot values") {
  const auto ind = SimpleFunction::indicator(4.0);
  // (p/s)^{1/s} m^{1/p} with p=2, s=1: 2 * 2 = 4
  CHECK_THAT(lorentz::lorentz_norm_via_distribution(ind, 2.0, 1.0).value(),
             WithinRel(4.0, 1e-14));
  CHECK(lorentz::lorentz_norm_via_distribution(SimpleFunction::zero(), 2.0, 1.0).value() == 0.0);
  CHECK_THAT(lorentz::lorentz_norm_via_distribution(two_atoms(), 2.0, 1.0).value(),
             WithinRel(lorentz::lorentz_norm(two_atoms(), {2.0, 1.0}).value(), 1e-12));
  CHECK_THROWS_AS(lorentz::lorentz_norm_via_distribution(two_atoms(), 2.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("quadrature oracle on spot values") {
  CHECK_THAT(lorentz::quadrature_norm_oracle(SimpleFunction::indicator(1.0), {2.0, 2.0}, 100000)
                 .value(),
             WithinRel(1.0, 1e-4));
  CHECK(lorentz::quadrature_norm_oracle(SimpleFunction::zero(), {2.0, 2.0}, 10).value() == 0.0);
  CHECK_THAT(lorentz::quadrature_norm_oracle(two_atoms(), {1.0, 1.0}, 100000).value(),
             WithinRel(3.0, 1e-4));
  // a genuinely curved integrand: indicator, p=1, q=2
  CHECK_THAT(lorentz::quadrature_norm_oracle(SimpleFunction::indicator(2.0), {1.0, 2.0}, 100000)
                 .value(),
             WithinRel(lorentz::lorentz_norm(SimpleFunction::indicator(2.0), {1.0, 2.0}).value(),
                       1e-4));
  CHECK_THROWS_AS(lorentz::quadrature_norm_oracle(two_atoms(), {kInf, 1.0}, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(lorentz::quadrature_norm_oracle(two_atoms(), {1.0, 1.0}, 0),
                  std::invalid_argument);
}

TEST_CASE("random functions: the rearrangement integral identity") {
  lorentz::SampleRanges ranges;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const auto f = lorentz::generate_step_function(rng, ranges);
    const double p = lorentz::log_uniform(rng, 0.1, 10.0);
    double direct = 0.0;
    for (const auto& a : f.atoms()) direct += a.mass * std::pow(a.value, p);
    const double via_star = std::pow(lorentz::lorentz_norm(f, {p, p}).value(), p);
    CHECK_THAT(via_star, WithinRel(direct, 1e-12));
  }
}

TEST_CASE("random functions: both closed-form routes agree") {
  lorentz::SampleRanges ranges;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const auto f = lorentz::generate_step_function(rng, ranges);
    const double p = lorentz::log_uniform(rng, 0.1, 10.0);
    const double s = lorentz::log_uniform(rng, 0.1, 10.0);
    const double a = lorentz::lorentz_norm(f, {p, s}).value();
    const double b = lorentz::lorentz_norm_via_distribution(f, p, s).value();
    CHECK_THAT(a, WithinRel(b, 1e-12));
  }
}

TEST_CASE("positive homogeneity in the values") {
  lorentz::SampleRanges ranges;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const auto f = lorentz::generate_step_function(rng, ranges);
    const double c = lorentz::log_uniform(rng, 1e-2, 1e2);
    const auto cf = lorentz::scale_values(f, c);
    const LorentzIndex idx{lorentz::one_in(rng, 6) ? kInf
                                                   : ExtReal(lorentz::log_uniform(rng, 0.1, 10.0)),
                           lorentz::one_in(rng, 6) ? kInf
                                                   : ExtReal(lorentz::log_uniform(rng, 0.1, 10.0))};
    const auto n = lorentz::lorentz_norm(f, idx);
    const auto nc = lorentz::lorentz_norm(cf, idx);
    if (n.infinite()) {
      CHECK(nc.infinite());
    } else {
      CHECK_THAT(nc.value(), WithinRel(c * n.value(), 1e-12));
    }
  }
}
