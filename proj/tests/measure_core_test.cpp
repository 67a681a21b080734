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

#include <random>

#include "lorentz/generate.hpp"
#include "lorentz/simple_function.hpp"
#include "lorentz/step_profile.hpp"

using lorentz::SimpleFunction;
using lorentz::StepProfile;

namespace {

SimpleFunction two_atoms() { return SimpleFunction::from_atoms({{1.0, 2.0}, {1.0, 1.0}}); }

}  // namespace

TEST_CASE("construction drops zero-mass atoms and keeps zero values") {
  CHECK(SimpleFunction::from_atoms({}).is_zero());
  CHECK(two_atoms().atoms().size() == 2);
  CHECK(two_atoms().total_mass() == 2.0);

  const auto f = SimpleFunction::from_atoms({{0.0, 5.0}, {2.0, 3.0}});
  CHECK(f.atoms().size() == 1);
  CHECK(f.atoms()[0].value == 3.0);

  const auto g = SimpleFunction::from_atoms({{1.0, 0.0}});
  CHECK(g.atoms().size() == 1);
  CHECK(g.is_zero());

  CHECK_THROWS_AS(SimpleFunction::from_atoms({{-1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleFunction::from_atoms({{1.0, -1.0}}), std::invalid_argument);
}

TEST_CASE("distribution counts strictly exceeding atoms") {
  const auto f = two_atoms();
  CHECK(lorentz::distribution(f, 0.5).value() == 2.0);
  CHECK(lorentz::distribution(f, 1.0).value() == 1.0);  // strict inequality
  CHECK(lorentz::distribution(f, 2.0).value() == 0.0);
  CHECK_THROWS_AS(lorentz::distribution(f, -0.1), std::invalid_argument);
}

TEST_CASE("distribution profile matches the pointwise distribution") {
  CHECK(lorentz::distribution_profile(SimpleFunction::zero()).is_zero());

  const auto prof = lorentz::distribution_profile(two_atoms());
  REQUIRE(prof.segments().size() == 2);
  CHECK(prof.segments()[0].value == 2.0);
  CHECK(prof.segments()[0].right_endpoint == 1.0);
  CHECK(prof.segments()[1].value == 1.0);
  CHECK(prof.segments()[1].right_endpoint == 2.0);

  const auto single = lorentz::distribution_profile(SimpleFunction::from_atoms({{3.0, 5.0}}));
  REQUIRE(single.segments().size() == 1);
  CHECK(single.segments()[0].value == 3.0);
  CHECK(single.segments()[0].right_endpoint == 5.0);
}

TEST_CASE("rearrangement of small examples") {
  const auto star = lorentz::rearrangement(two_atoms());
  REQUIRE(star.segments().size() == 2);
  CHECK(star(0.0) == 2.0);
  CHECK(star(0.999) == 2.0);
  CHECK(star(1.0) == 1.0);
  CHECK(star(2.0) == 0.0);

  CHECK(lorentz::rearrangement(SimpleFunction::zero()).is_zero());

  // equal values merge into one segment
  const auto tied = lorentz::rearrangement(SimpleFunction::from_atoms({{0.5, 4.0}, {0.5, 4.0}}));
  REQUIRE(tied.segments().size() == 1);
  CHECK(tied.segments()[0].value == 4.0);
  CHECK(tied.segments()[0].right_endpoint == 1.0);
}

TEST_CASE("profile evaluation is right-continuous and zero past the support") {
  const StepProfile prof({{2.0, 1.0}, {1.0, 2.0}});
  CHECK(prof(0.0) == 2.0);
  CHECK(prof(1.0) == 1.0);
  CHECK(prof(2.0) == 0.0);
  CHECK(prof(100.0) == 0.0);
  CHECK_THROWS_AS(prof(-1.0), std::invalid_argument);

  CHECK_THROWS_AS(StepProfile({{1.0, 1.0}, {2.0, 2.0}}), std::invalid_argument);  // values up
  CHECK_THROWS_AS(StepProfile({{2.0, 2.0}, {1.0, 1.0}}), std::invalid_argument);  // ends down
  CHECK_THROWS_AS(StepProfile({{0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("pointwise product on shared atoms") {
  const auto f = SimpleFunction::from_atoms({{1.0, 2.0}});
  const auto g = f.with_values({3.0});
  CHECK(lorentz::pointwise_product(f, g).atoms()[0].value == 6.0);

  const auto ones = two_atoms().with_values({1.0, 1.0});
  CHECK(lorentz::pointwise_product(two_atoms(), ones) == two_atoms());

  const auto h = two_atoms().with_values({0.0, 5.0});
  const auto fh = lorentz::pointwise_product(two_atoms(), h);
  CHECK(fh.atoms()[0].value == 0.0);
  CHECK(fh.atoms()[1].value == 5.0);

  const auto other = SimpleFunction::from_atoms({{2.0, 2.0}});
  CHECK_THROWS_AS(lorentz::pointwise_product(f, other), std::invalid_argument);
}

TEST_CASE("random functions: profiles are valid, equimeasurable and dual") {
  lorentz::SampleRanges ranges;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const auto f = lorentz::generate_step_function(rng, ranges);
    const auto star = lorentz::rearrangement(f);
    const auto dist = lorentz::distribution_profile(f);

    // monotonicity and right-continuity are the StepProfile invariants;
    // construction would have thrown if they failed
    double support_mass = 0.0;
    for (const auto& a : f.atoms()) {
      if (a.value > 0.0) support_mass += a.mass;
    }
    CHECK_THAT(star.support_end(), Catch::Matchers::WithinRel(support_mass, 1e-12));

    // equimeasurability, exactly: measure{f* > a} == d_f profile at a, for
    // alphas at and between all breakpoints. The atomwise distribution sum
    // agrees up to summation order.
    std::vector<double> alphas{0.0};
    for (const auto& s : dist.segments()) {
      alphas.push_back(s.right_endpoint);
      alphas.push_back(s.right_endpoint / 2.0);
      alphas.push_back(s.right_endpoint * 1.5);
    }
    for (double a : alphas) {
      CHECK(star.measure_above(a) == dist(a));
      const double direct = lorentz::distribution(f, a).value();
      if (direct == 0.0) {
        CHECK(dist(a) == 0.0);
      } else {
        CHECK_THAT(dist(a), Catch::Matchers::WithinRel(direct, 1e-12));
      }
    }

    // duality: each profile is the generalized inverse of the other
    CHECK(star.generalized_inverse() == dist);
    CHECK(dist.generalized_inverse() == star);
  }
}

TEST_CASE("product is commutative and associative on shared domains") {
  lorentz::SampleRanges ranges;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const auto f = lorentz::generate_step_function(rng, ranges);
    std::vector<double> gv, hv;
    for (std::size_t i = 0; i < f.atoms().size(); ++i) {
      gv.push_back(lorentz::log_uniform(rng, 1e-3, 1e3));
      hv.push_back(lorentz::log_uniform(rng, 1e-3, 1e3));
    }
    const auto g = f.with_values(gv);
    const auto h = f.with_values(hv);
    CHECK(lorentz::pointwise_product(f, g) == lorentz::pointwise_product(g, f));
    // associativity holds to rounding (double multiplication is not
    // bitwise associative)
    const auto left = lorentz::pointwise_product(lorentz::pointwise_product(f, g), h);
    const auto right = lorentz::pointwise_product(f, lorentz::pointwise_product(g, h));
    for (std::size_t i = 0; i < left.atoms().size(); ++i) {
      CHECK_THAT(left.atoms()[i].value,
                 Catch::Matchers::WithinRel(right.atoms()[i].value, 1e-14));
    }
  }
}
