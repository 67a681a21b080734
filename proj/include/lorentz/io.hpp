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

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lorentz/ext_real.hpp"
#include "lorentz/format.hpp"
#include "lorentz/sequence.hpp"
#include "lorentz/simple_function.hpp"
#include "lorentz/step_profile.hpp"

namespace lorentz {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class Format { text, json, csv };

inline Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParseError("unknown format \"" + name + "\" (expected text, json or csv)");
}

using InputDocument = std::variant<SimpleFunction, NormSequence>;

namespace detail {

inline double require_nonneg_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (std::isnan(v) || v < 0.0) throw ParseError(where + ": must be >= 0, got " + format_double(v));
  return v;
}

}  // namespace detail

// Accepts the two input document kinds:
//   {"kind":"step","atoms":[{"mass":1,"value":2}, ...]}
//   {"kind":"sequence","terms":[1,3,2]}
inline InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input: expected a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("input: missing string field \"kind\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "step") {
    if (!doc.contains("atoms") || !doc["atoms"].is_array()) {
      throw ParseError("step input: missing array field \"atoms\"");
    }
    std::vector<std::pair<double, double>> atoms;
    std::size_t i = 0;
    for (const auto& a : doc["atoms"]) {
      const std::string where = "atoms[" + std::to_string(i) + "]";
      if (!a.is_object()) throw ParseError(where + ": expected an object");
      if (!a.contains("mass") || !a.contains("value")) {
        throw ParseError(where + ": needs \"mass\" and \"value\"");
      }
      atoms.emplace_back(detail::require_nonneg_number(a["mass"], where + ".mass"),
                         detail::require_nonneg_number(a["value"], where + ".value"));
      ++i;
    }
    try {
      return SimpleFunction::from_atoms(atoms);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("step input: ") + e.what());
    }
  }
  if (kind == "sequence") {
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
      throw ParseError("sequence input: missing array field \"terms\"");
    }
    std::vector<double> terms;
    std::size_t i = 0;
    for (const auto& t : doc["terms"]) {
      terms.push_back(detail::require_nonneg_number(t, "terms[" + std::to_string(i) + "]"));
      ++i;
    }
    return NormSequence(std::move(terms));
  }
  throw ParseError("input: unknown kind \"" + kind + "\" (expected \"step\" or \"sequence\")");
}

inline InputDocument parse_input(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("input: invalid JSON: ") + e.what());
  }
  return parse_input(doc);
}

inline InputDocument parse_input_string(const std::string& text) {
  std::istringstream in(text);
  return parse_input(in);
}

inline InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return parse_input(in);
}

// ExtReal fields are numbers when finite and the string "inf" otherwise.
inline Json ext_to_json(ExtReal v) {
  if (v.infinite()) return Json("inf");
  return Json(v.value());
}

inline Json to_json(const SimpleFunction& f) {
  Json atoms = Json::array();
  for (const auto& a : f.atoms()) {
    atoms.push_back(Json{{"mass", a.mass}, {"value", a.value}});
  }
  return Json{{"kind", "step"}, {"atoms", atoms}};
}

inline Json to_json(const NormSequence& s) {
  return Json{{"kind", "sequence"}, {"terms", s.terms()}};
}

inline Json to_json(const StepProfile& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments()) {
    segs.push_back(Json{{"value", s.value}, {"right_endpoint", s.right_endpoint}});
  }
  return Json{{"kind", "profile"}, {"segments", segs}};
}

// One row of a norm table.
struct NormRow {
  ExtReal p;
  ExtReal q;
  ExtReal norm;
};

inline std::string emit_norm_table(const std::vector<NormRow>& rows, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out = "p,q,norm\n";
      for (const auto& r : rows) {
        out += format_ext(r.p) + "," + format_ext(r.q) + "," + format_ext(r.norm) + "\n";
      }
      return out;
    }
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{
            {"p", ext_to_json(r.p)}, {"q", ext_to_json(r.q)}, {"norm", ext_to_json(r.norm)}});
      }
      return arr.dump(2) + "\n";
    }
    case Format::text: {
      std::string out;
      for (const auto& r : rows) {
        out += "p=" + format_ext(r.p) + " q=" + format_ext(r.q) +
               " norm=" + format_ext(r.norm) + "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace lorentz
