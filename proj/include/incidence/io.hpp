// Copyright 2026 The Incidence Authors
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

// The config file: a JSON document with the sections
//
//   "tower":  [{"name": "t", "kind": "transcendental"},
//              {"name": "s", "kind": "algebraic", "minpoly": ["-t", "0", "1"]}]
//   "points": [["x", "y"], ...]
//   "lines":  [["a", "b", "c"], ...]              a*x + b*y + c = 0
//   "curves": [{"x^2*y^0": "1", "x^0*y^0": "-1"}, ...]
//   "sets":   {"A": ["1", "2", "3"], ...}
//
// Every value is an element expression string (JSON integers are accepted
// too). minpoly coefficients run from the constant term up to the leading
// "1". All sections are optional; a missing tower means Q.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "incidence/curves.hpp"
#include "incidence/geometry.hpp"
#include "incidence/sumproduct.hpp"

namespace incidence {

using json = nlohmann::json;

/// Missing file, malformed document, or invalid content.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ConfigFile {
  Configuration config;
  std::vector<Curve> curves;
  std::map<std::string, ElementSet> sets;

  const TowerPtr& tower() const noexcept { return config.tower(); }
};

namespace detail {

inline std::string element_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InputError(where + ": expected an expression string");
}

inline FieldElement element_from_json(const json& v, const TowerPtr& tower, const std::string& where) {
  try {
    return parse_element(element_text(v, where), tower);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline const json& array_of(const json& doc, const char* key) {
  static const json empty = json::array();
  if (!doc.contains(key)) return empty;
  const json& v = doc.at(key);
  if (!v.is_array()) throw InputError(std::string("'") + key + "' must be an array");
  return v;
}

}  // namespace detail

inline TowerPtr tower_from_json(const json& doc) {
  if (!doc.contains("tower")) return TowerDescriptor::rationals();
  std::vector<GeneratorSpec> specs;
  for (const auto& g : detail::array_of(doc, "tower")) {
    if (!g.is_object() || !g.contains("name") || !g.at("name").is_string())
      throw InputError("tower: each generator needs a string 'name'");
    GeneratorSpec spec;
    spec.name = g.at("name").get<std::string>();
    const std::string kind = g.value("kind", std::string("transcendental"));
    if (kind == "transcendental") {
      spec.kind = GeneratorKind::transcendental;
    } else if (kind == "algebraic") {
      spec.kind = GeneratorKind::algebraic;
      if (!g.contains("minpoly") || !g.at("minpoly").is_array())
        throw InputError("tower: algebraic generator '" + spec.name + "' needs a 'minpoly' array");
      for (const auto& c : g.at("minpoly")) spec.minpoly.push_back(detail::element_text(c, "tower." + spec.name));
    } else {
      throw InputError("tower: unknown kind '" + kind + "'");
    }
    specs.push_back(std::move(spec));
  }
  try {
    return TowerDescriptor::make(std::move(specs));
  } catch (const Error& e) {
    throw InputError(std::string("tower: ") + e.what());
  }
}

inline ConfigFile config_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("config document must be a JSON object");
  const TowerPtr tower = tower_from_json(doc);
  ConfigFile file{Configuration(tower), {}, {}};
  std::size_t i = 0;
  for (const auto& p : detail::array_of(doc, "points")) {
    const std::string where = "points[" + std::to_string(i++) + "]";
    if (!p.is_array() || p.size() != 2) throw InputError(where + ": expected [x, y]");
    file.config.add_point({detail::element_from_json(p[0], tower, where), detail::element_from_json(p[1], tower, where)});
  }
  i = 0;
  for (const auto& l : detail::array_of(doc, "lines")) {
    const std::string where = "lines[" + std::to_string(i++) + "]";
    if (!l.is_array() || l.size() != 3) throw InputError(where + ": expected [a, b, c]");
    try {
      file.config.add_line(canonical_line(detail::element_from_json(l[0], tower, where),
                                          detail::element_from_json(l[1], tower, where),
                                          detail::element_from_json(l[2], tower, where)));
    } catch (const GeometryError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  i = 0;
  for (const auto& c : detail::array_of(doc, "curves")) {
    const std::string where = "curves[" + std::to_string(i++) + "]";
    if (!c.is_object()) throw InputError(where + ": expected a monomial -> coefficient map");
    std::vector<CurveTerm> terms;
    for (const auto& [key, coeff] : c.items()) {
      std::pair<unsigned, unsigned> e;
      try {
        e = parse_monomial(key);
      } catch (const Error& err) {
        throw InputError(where + ": " + err.what());
      }
      terms.push_back({e.first, e.second, detail::element_from_json(coeff, tower, where)});
    }
    try {
      file.curves.push_back(Curve::make(tower, std::move(terms)));
    } catch (const GeometryError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  if (doc.contains("sets")) {
    const json& sets = doc.at("sets");
    if (!sets.is_object()) throw InputError("'sets' must be an object of named element lists");
    for (const auto& [name, list] : sets.items()) {
      if (!list.is_array()) throw InputError("sets." + name + ": expected an array");
      ElementSet s(tower);
      for (const auto& e : list) s.insert(detail::element_from_json(e, tower, "sets." + name));
      file.sets.emplace(name, std::move(s));
    }
  }
  return file;
}

inline json tower_to_json(const TowerDescriptor& tower) {
  json out = json::array();
  for (const auto& g : tower.generators()) {
    json item{{"name", g.name}, {"kind", g.kind == GeneratorKind::algebraic ? "algebraic" : "transcendental"}};
    if (g.kind == GeneratorKind::algebraic) item["minpoly"] = g.minpoly;
    out.push_back(std::move(item));
  }
  return out;
}

/// Canonical encodings throughout, so write-then-read is the identity.
inline json config_to_json(const ConfigFile& file) {
  json doc;
  doc["tower"] = tower_to_json(*file.tower());
  json pts = json::array();
  for (const auto& p : file.config.points()) pts.push_back({p.x.encoding(), p.y.encoding()});
  doc["points"] = std::move(pts);
  json lines = json::array();
  for (const auto& l : file.config.lines()) lines.push_back({l.a().encoding(), l.b().encoding(), l.c().encoding()});
  doc["lines"] = std::move(lines);
  if (!file.curves.empty()) {
    json curves = json::array();
    for (const auto& c : file.curves) {
      json terms = json::object();
      for (const auto& t : c.terms()) terms[monomial_key(t.x_exp, t.y_exp)] = t.coeff.encoding();
      curves.push_back(std::move(terms));
    }
    doc["curves"] = std::move(curves);
  }
  if (!file.sets.empty()) {
    json sets = json::object();
    for (const auto& [name, s] : file.sets) {
      json list = json::array();
      for (const auto& e : s.elements()) list.push_back(e.encoding());
      sets[name] = std::move(list);
    }
    doc["sets"] = std::move(sets);
  }
  return doc;
}

inline ConfigFile read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

inline void write_config_file(const ConfigFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << config_to_json(file).dump(2) << "\n";
}

}  // namespace incidence
