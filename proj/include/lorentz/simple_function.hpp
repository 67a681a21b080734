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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/ext_real.hpp"
#include "lorentz/step_profile.hpp"

namespace lorentz {

// A nonnegative simple function on an abstract measure space, stored as
// finitely many atoms. An atom is a set of finite positive measure on
// which the function is constant; nothing else about the underlying space
// matters for distribution functions or rearrangements.
//
// Values are the pointwise absolute values |f|: signs never enter any of
// the quantities computed here, so callers with signed or complex data
// take absolute values first.
class SimpleFunction {
 public:
  struct Atom {
    std::uint64_t id;
    double mass;   // > 0
    double value;  // >= 0; value-0 atoms are kept so product domains align
    friend bool operator==(const Atom&, const Atom&) = default;
  };

  SimpleFunction() = default;

  // Builds a function from (mass, value) pairs. Zero-mass atoms are
  // dropped; fresh ids are assigned in input order.
  static SimpleFunction from_atoms(const std::vector<std::pair<double, double>>& mass_value) {
    std::vector<Atom> atoms;
    atoms.reserve(mass_value.size());
    std::uint64_t next_id = 0;
    double total = 0.0;
    for (const auto& [mass, value] : mass_value) {
      if (std::isnan(mass) || mass < 0.0) {
        throw std::invalid_argument("SimpleFunction: atom mass must be >= 0, got " +
                                    std::to_string(mass));
      }
      if (std::isnan(value) || value < 0.0 || std::isinf(value)) {
        throw std::invalid_argument("SimpleFunction: atom value must be finite and >= 0, got " +
                                    std::to_string(value));
      }
      if (std::isinf(mass)) {
        throw std::invalid_argument("SimpleFunction: atom mass must be finite");
      }
      if (mass == 0.0) continue;
      total += mass;
      atoms.push_back(Atom{next_id++, mass, value});
    }
    if (std::isinf(total)) {
      throw std::invalid_argument("SimpleFunction: total mass must be finite");
    }
    return SimpleFunction(std::move(atoms));
  }

  // Indicator of a set of the given mass.
  static SimpleFunction indicator(double mass) { return from_atoms({{mass, 1.0}}); }

  static SimpleFunction zero() { return SimpleFunction(); }

  const std::vector<Atom>& atoms() const { return atoms_; }

  bool is_zero() const {
    return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.value == 0.0; });
  }

  double total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += a.mass;
    return m;
  }

  // True when both functions live on the same atoms (ids and masses).
  bool same_domain(const SimpleFunction& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].id != other.atoms_[i].id || atoms_[i].mass != other.atoms_[i].mass) {
        return false;
      }
    }
    return true;
  }

  // Same atoms, values replaced. Used for products and scaling.
  SimpleFunction with_values(std::vector<double> values) const {
    if (values.size() != atoms_.size()) {
      throw std::invalid_argument("SimpleFunction: value list does not match atom count");
    }
    std::vector<Atom> atoms = atoms_;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (std::isnan(values[i]) || values[i] < 0.0 || std::isinf(values[i])) {
        throw std::invalid_argument("SimpleFunction: atom value must be finite and >= 0");
      }
      atoms[i].value = values[i];
    }
    return SimpleFunction(std::move(atoms));
  }

  friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;

 private:
  explicit SimpleFunction(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

namespace detail {

// Distinct positive values of f in decreasing order, each paired with the
// cumulative mass of {|f| >= value}. Both the distribution profile and the
// rearrangement are read off this table, which makes the equimeasurability
// identity between them exact in floating point, not just approximate.
struct LevelTable {
  std::vector<double> values;      // strictly decreasing, all > 0
  std::vector<double> cum_masses;  // strictly increasing prefix sums
};

inline LevelTable level_table(const SimpleFunction& f) {
  std::vector<SimpleFunction::Atom> sorted(f.atoms().begin(), f.atoms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.value > b.value; });
  LevelTable table;
  double running = 0.0;
  std::size_t i = 0;
  while (i < sorted.size() && sorted[i].value > 0.0) {
    const double v = sorted[i].value;
    while (i < sorted.size() && sorted[i].value == v) {
      running += sorted[i].mass;
      ++i;
    }
    table.values.push_back(v);
    table.cum_masses.push_back(running);
  }
  return table;
}

}  // namespace detail

// d_f(alpha): the measure of {x : |f(x)| > alpha}. Finite for every simple
// function, but typed ExtReal to match the codomain of distribution
// functions in general.
inline ExtReal distribution(const SimpleFunction& f, double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) {
    throw std::invalid_argument("distribution: threshold must be >= 0");
  }
  double mass = 0.0;
  for (const auto& a : f.atoms()) {
    if (a.value > alpha) mass += a.mass;
  }
  return ExtReal(mass);
}

// d_f as a step profile over alpha. Breakpoints sit exactly at the
// distinct positive values of f.
inline StepProfile distribution_profile(const SimpleFunction& f) {
  const auto table = detail::level_table(f);
  std::vector<StepProfile::Segment> segments;
  segments.reserve(table.values.size());
  for (std::size_t k = table.values.size(); k-- > 0;) {
    segments.push_back(StepProfile::Segment{table.cum_masses[k], table.values[k]});
  }
  return StepProfile(std::move(segments));
}

// The decreasing rearrangement f*: value v_k on [T_{k-1}, T_k) where the
// v_k are the distinct positive values in decreasing order and T_k the
// cumulative masses of {|f| >= v_k}. Always finite for simple functions
// (the inf-of-empty-set = infinity branch of the definition cannot fire).
inline StepProfile rearrangement(const SimpleFunction& f) {
  const auto table = detail::level_table(f);
  std::vector<StepProfile::Segment> segments;
  segments.reserve(table.values.size());
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    segments.push_back(StepProfile::Segment{table.values[k], table.cum_masses[k]});
  }
  return StepProfile(std::move(segments));
}

// Pointwise product fg of two functions on the same atoms.
inline SimpleFunction pointwise_product(const SimpleFunction& f, const SimpleFunction& g) {
  if (!f.same_domain(g)) {
    throw std::invalid_argument("pointwise_product: functions live on different atom domains");
  }
  std::vector<double> values;
  values.reserve(f.atoms().size());
  for (std::size_t i = 0; i < f.atoms().size(); ++i) {
    values.push_back(f.atoms()[i].value * g.atoms()[i].value);
  }
  return f.with_values(std::move(values));
}

// c * f for c > 0.
inline SimpleFunction scale_values(const SimpleFunction& f, double c) {
  if (!(c > 0.0) || std::isinf(c)) {
    throw std::invalid_argument("scale_values: factor must be positive and finite");
  }
  std::vector<double> values;
  values.reserve(f.atoms().size());
  for (const auto& a : f.atoms()) values.push_back(c * a.value);
  return f.with_values(std::move(values));
}

}  // namespace lorentz
