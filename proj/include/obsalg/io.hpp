/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBSALG_IO_HPP
#define OBSALG_IO_HPP

// JSON file formats.
//
// Algebra:
//   {"kind":"product_chains","orders":[2,3]}
//   {"kind":"table","elements":["0","a","b","1"],"zero":"0","one":"1",
//    "sums":[["a","a","1"],["b","b","1"]]}
// Observable:
//   {"algebra": <algebra object or path>, "points":[{"t":"-1/2","mass":[1,0]}, ...]}
// Rationals are strings "p/q" or "p". Product masses are coordinate vectors,
// table masses are element names.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "calculus.hpp"

namespace obsalg {

using json = nlohmann::json;

/// Malformed input. `where` is a JSON path or "file:byte" location.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(path, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string())
    throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace detail

inline json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j, const std::string& path = "") {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  try {
    return Rational::parse(detail::as_string(j, path));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  } catch (const std::overflow_error& e) {
    throw ParseError(path, e.what());
  }
}

inline json algebra_to_json(const EffectAlgebra& e) {
  if (e.kind() == EffectAlgebra::Kind::product_chains)
    return json{{"kind", "product_chains"}, {"orders", e.orders()}};
  json sums = json::array();
  for (const auto& t : e.nontrivial_sums())
    sums.push_back({e.name(t[0]), e.name(t[1]), e.name(t[2])});
  return json{{"kind", "table"},
              {"elements", e.names()},
              {"zero", e.name(e.zero())},
              {"one", e.name(e.one())},
              {"sums", sums}};
}

/// Throws ParseError for schema problems and AxiomViolation for invalid tables.
inline AlgebraPtr algebra_from_json(const json& j, const std::string& path = "algebra") {
  std::string kind = detail::as_string(detail::field(j, "kind", path), path + ".kind");
  if (kind == "product_chains") {
    const auto& o = detail::field(j, "orders", path);
    if (!o.is_array() || o.empty())
      throw ParseError(path + ".orders", "expected a nonempty array of positive integers");
    std::vector<std::uint32_t> orders;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (!o[i].is_number_integer() || o[i].get<std::int64_t>() < 1 || o[i].get<std::int64_t>() > 1000000)
        throw ParseError(path + ".orders[" + std::to_string(i) + "]", "expected a positive integer");
      orders.push_back(o[i].get<std::uint32_t>());
    }
    try {
      return make_product_chains(orders);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ".orders", e.what());
    }
  }
  if (kind == "table") {
    const auto& els = detail::field(j, "elements", path);
    if (!els.is_array())
      throw ParseError(path + ".elements", "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < els.size(); ++i)
      names.push_back(detail::as_string(els[i], path + ".elements[" + std::to_string(i) + "]"));
    std::string zero = detail::as_string(detail::field(j, "zero", path), path + ".zero");
    std::string one = detail::as_string(detail::field(j, "one", path), path + ".one");
    std::vector<SumTriple> sums;
    if (j.contains("sums")) {
      const auto& s = j.at("sums");
      if (!s.is_array())
        throw ParseError(path + ".sums", "expected an array of [x, y, z] triples");
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::string p = path + ".sums[" + std::to_string(i) + "]";
        if (!s[i].is_array() || s[i].size() != 3)
          throw ParseError(p, "expected a triple [x, y, z]");
        sums.push_back({detail::as_string(s[i][0], p + "[0]"), detail::as_string(s[i][1], p + "[1]"),
                        detail::as_string(s[i][2], p + "[2]")});
      }
    }
    return make_table(names, sums, zero, one);
  }
  throw ParseError(path + ".kind", "unknown algebra kind '" + kind + "'");
}

inline json element_to_json(const EffectAlgebra& e, Element a) {
  if (e.kind() == EffectAlgebra::Kind::table)
    return e.name(a);
  return e.coords(a);
}

inline Element element_from_json(const EffectAlgebra& e, const json& j, const std::string& path = "") {
  try {
    if (e.kind() == EffectAlgebra::Kind::table)
      return e.by_name(detail::as_string(j, path));
    if (j.is_number_integer() && e.orders().size() == 1) {
      auto v = j.get<std::int64_t>();
      if (v < 0)
        throw ParseError(path, "negative coordinate");
      std::uint32_t c = static_cast<std::uint32_t>(v);
      return e.from_coords(std::span<const std::uint32_t>(&c, 1));
    }
    if (!j.is_array())
      throw ParseError(path, "expected a coordinate vector");
    std::vector<std::uint32_t> c;
    for (const auto& v : j) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParseError(path, "coordinates must be non-negative integers");
      c.push_back(v.get<std::uint32_t>());
    }
    return e.from_coords(c);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw ParseError(path, ex.what());
  }
}

inline json observable_to_json(const Observable& x) {
  json pts = json::array();
  for (const auto& a : x.atoms())
    pts.push_back({{"t", rational_to_json(a.point)}, {"mass", element_to_json(*x.algebra(), a.mass)}});
  return json{{"algebra", algebra_to_json(*x.algebra())}, {"points", pts}};
}

inline json resolution_to_json(const SpectralResolution& b) {
  json steps = json::array();
  for (std::size_t j = 0; j < b.jumps(); ++j)
    steps.push_back({{"t", rational_to_json(b.breakpoints()[j])},
                     {"value", element_to_json(*b.algebra(), b.values()[j])}});
  return json{{"algebra", algebra_to_json(*b.algebra())}, {"steps", steps}};
}

inline json properties_to_json(const EffectAlgebra& e) {
  const auto& p = e.properties();
  json sharp = json::array();
  for (auto a : p.sharp_set)
    sharp.push_back(element_to_json(e, a));
  return json{{"size", e.size()},
              {"is_lattice", p.is_lattice},
              {"distributive", p.distributive},
              {"has_rdp", p.has_rdp},
              {"is_mv", p.is_mv},
              {"is_orthoalgebra", p.is_orthoalgebra},
              {"is_boolean", p.is_boolean},
              {"sharp_set", sharp}};
}

/// Reads and parses a JSON file. Syntax errors become ParseError("path:byte").
inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path.string(), "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ":" + std::to_string(e.byte), e.what());
  }
}

/// `algebra` may be an inline object or a path (relative to base_dir).
inline Observable observable_from_json(const json& j, const std::filesystem::path& base_dir = {}) {
  const auto& aj = detail::field(j, "algebra", "");
  AlgebraPtr e;
  if (aj.is_string()) {
    std::filesystem::path p = aj.get<std::string>();
    if (p.is_relative())
      p = base_dir / p;
    e = algebra_from_json(read_json_file(p), p.string());
  } else {
    e = algebra_from_json(aj, "algebra");
  }
  const auto& pts = detail::field(j, "points", "");
  if (!pts.is_array() || pts.empty())
    throw ParseError("points", "expected a nonempty array");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string p = "points[" + std::to_string(i) + "]";
    atoms.push_back({rational_from_json(detail::field(pts[i], "t", p), p + ".t"),
                     element_from_json(*e, detail::field(pts[i], "mass", p), p + ".mass")});
  }
  return make_discrete(e, std::move(atoms));
}

inline Observable read_observable(const std::filesystem::path& path) {
  return observable_from_json(read_json_file(path), path.parent_path());
}

inline AlgebraPtr read_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path), path.string());
}

/// Canonical text form: two-space indented JSON with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace obsalg

#endif  // OBSALG_IO_HPP
