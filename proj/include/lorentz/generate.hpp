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
#include <random>
#include <utility>
#include <vector>

#include "lorentz/embeddings.hpp"
#include "lorentz/sequence.hpp"
#include "lorentz/simple_function.hpp"

namespace lorentz {

// All randomness flows through std::mt19937_64 with the explicit mappings
// below, so a (seed, offset) pair reproduces the same instance on any
// platform. std::uniform_real_distribution is avoided on purpose: its
// output is not pinned down by the standard.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Log-uniform on [lo, hi]: stresses extreme scales that uniform sampling
// would essentially never reach.
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  if (!(0.0 < lo && lo <= hi) || std::isinf(hi)) {
    throw std::invalid_argument("log_uniform: need 0 < lo <= hi < inf");
  }
  const double ll = std::log(lo);
  return std::exp(ll + uniform01(rng) * (std::log(hi) - ll));
}

inline std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  return lo + rng() % (hi - lo + 1);
}

// One chance in `denominator`.
inline bool one_in(std::mt19937_64& rng, std::uint64_t denominator) {
  return uniform_int(rng, 1, denominator) == 1;
}

struct SampleRanges {
  int max_atoms = 12;
  std::pair<double, double> value_range{1e-3, 1e3};
  std::pair<double, double> mass_range{1e-3, 1e3};
  std::pair<int, int> grid_size_range{2, 6};
  int max_sequence_terms = 16;
};

// A random simple function: 1..max_atoms atoms with log-uniform masses and
// values. Never the zero function.
inline SimpleFunction generate_step_function(std::mt19937_64& rng, const SampleRanges& ranges) {
  const auto count = uniform_int(rng, 1, static_cast<std::uint64_t>(ranges.max_atoms));
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double mass = log_uniform(rng, ranges.mass_range.first, ranges.mass_range.second);
    const double value = log_uniform(rng, ranges.value_range.first, ranges.value_range.second);
    atoms.emplace_back(mass, value);
  }
  return SimpleFunction::from_atoms(atoms);
}

// A random grid of distinct log-uniform indices in [lo, hi].
inline IndexGrid generate_index_grid(std::mt19937_64& rng, double lo, double hi,
                                     std::pair<int, int> size_range) {
  if (!(0.0 < lo && lo < hi)) {
    throw std::invalid_argument("generate_index_grid: need 0 < lo < hi");
  }
  const auto size = uniform_int(rng, static_cast<std::uint64_t>(size_range.first),
                                static_cast<std::uint64_t>(size_range.second));
  std::vector<double> points;
  while (points.size() < size) {
    points.push_back(log_uniform(rng, lo, hi));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  return IndexGrid(std::move(points));
}

// A random finitely supported sequence; an occasional term is zero so the
// rearrangement's zero-dropping stays exercised.
inline NormSequence generate_norm_sequence(std::mt19937_64& rng, const SampleRanges& ranges) {
  const auto count = uniform_int(rng, 1, static_cast<std::uint64_t>(ranges.max_sequence_terms));
  std::vector<double> terms;
  terms.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (one_in(rng, 8)) {
      terms.push_back(0.0);
    } else {
      terms.push_back(log_uniform(rng, ranges.value_range.first, ranges.value_range.second));
    }
  }
  return NormSequence(std::move(terms));
}

}  // namespace lorentz
