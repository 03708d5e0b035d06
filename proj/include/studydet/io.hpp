#pragma once

// JSON file formats: groups (with optional cocycle and subgroups),
// quaternion matrices and supplied representations.

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "studydet/fixtures.hpp"
#include "studydet/representation.hpp"
#include "studydet/sdet.hpp"

namespace studydet::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::size_t index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound)
    fail(where, "expected an integer index below " + std::to_string(bound));
  return static_cast<std::size_t>(v.get<long long>());
}

inline std::string text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(where, "expected a string or integer");
}

inline Rational rational(const json& v, const std::string& where) {
  try {
    return Rational::parse(text(v, where));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

inline Cyclotomic cyclotomic(const json& v, int conductor, const std::string& where) {
  try {
    return Cyclotomic::parse(text(v, where), conductor);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

inline int conductor(const json& obj, const std::string& where) {
  auto it = obj.find("conductor");
  if (it == obj.end()) return 1;
  if (!it->is_number_integer() || it->get<long long>() < 1 || it->get<long long>() > 1000)
    fail(where + ".conductor", "expected a positive integer");
  return static_cast<int>(it->get<long long>());
}

inline const json& array(const json& v, std::size_t size, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  if (size != 0 && v.size() != size)
    fail(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(v.size()));
  return v;
}

}  // namespace detail

inline json parse_text(const std::string& content, const std::string& source) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

/// {"name", "elements", "table", "cocycle"?, "conductor"?, "subgroups"?}
inline TwistedGroup parse_group(const json& j, const std::string& source) {
  const std::string root = source + ": $";
  const auto& name = detail::field(j, "name", root);
  if (!name.is_string()) detail::fail(root + ".name", "expected a string");
  const auto& elems = detail::array(detail::field(j, "elements", root), 0, root + ".elements");
  if (elems.empty()) detail::fail(root + ".elements", "expected at least one element");
  std::vector<std::string> elements;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (!elems[k].is_string()) detail::fail(root + ".elements[" + std::to_string(k) + "]", "expected a string");
    elements.push_back(elems[k].get<std::string>());
  }
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (elements[a] == elements[b])
        detail::fail(root + ".elements[" + std::to_string(b) + "]", "duplicate element name '" + elements[b] + "'");
  const std::size_t n = elements.size();
  const auto& rows = detail::array(detail::field(j, "table", root), n, root + ".table");
  Table table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::string where = root + ".table[" + std::to_string(a) + "]";
    detail::array(rows[a], n, where);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = detail::index(rows[a][b], n, where + "[" + std::to_string(b) + "]");
  }
  if (auto report = validate_group(table); !report) detail::fail(root + ".table", report.message);

  std::map<std::string, std::vector<std::size_t>> subgroups;
  if (auto it = j.find("subgroups"); it != j.end()) {
    if (!it->is_object()) detail::fail(root + ".subgroups", "expected an object");
    for (const auto& [label, members] : it->items()) {
      std::string where = root + ".subgroups." + label;
      detail::array(members, 0, where);
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < members.size(); ++k)
        idx.push_back(detail::index(members[k], n, where + "[" + std::to_string(k) + "]"));
      subgroups[label] = std::move(idx);
    }
  }
  GroupPtr group;
  try {
    group = std::make_shared<const FiniteGroup>(name.get<std::string>(), std::move(elements), std::move(table),
                                                std::move(subgroups));
  } catch (const StructuralError& e) {
    detail::fail(root, e.what());
  }

  auto cocycle = Cocycle::trivial(n);
  if (auto it = j.find("cocycle"); it != j.end()) {
    const int cond = detail::conductor(j, root);
    detail::array(*it, n, root + ".cocycle");
    std::vector<Cyclotomic> values;
    for (std::size_t a = 0; a < n; ++a) {
      std::string where = root + ".cocycle[" + std::to_string(a) + "]";
      detail::array((*it)[a], n, where);
      for (std::size_t b = 0; b < n; ++b)
        values.push_back(detail::cyclotomic((*it)[a][b], cond, where + "[" + std::to_string(b) + "]"));
    }
    cocycle = Cocycle(n, std::move(values));
    if (auto report = validate_cocycle(*group, cocycle); !report) detail::fail(root + ".cocycle", report.message);
  }
  return {group, cocycle};
}

inline TwistedGroup load_group(const std::string& path) { return parse_group(read_file(path), path); }

inline json group_to_json(const TwistedGroup& t) {
  const auto& g = *t.group;
  json j;
  j["name"] = g.name();
  j["elements"] = g.elements();
  json table = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  j["table"] = table;
  if (!t.cocycle.is_trivial()) {
    if (t.cocycle.conductor() > 1) j["conductor"] = t.cocycle.conductor();
    json rows = json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < g.order(); ++b) row.push_back(t.cocycle(a, b).to_string());
      rows.push_back(row);
    }
    j["cocycle"] = rows;
  }
  json subs = json::object();
  for (const auto& [label, members] : g.subgroups()) subs[label] = members;
  if (!subs.empty()) j["subgroups"] = subs;
  return j;
}

/// Looks up a named subgroup of the loaded group.
inline std::vector<std::size_t> subgroup(const FiniteGroup& g, const std::string& label) {
  const auto& subs = g.subgroups();
  auto it = subs.find(label);
  if (it == subs.end()) {
    std::string known;
    for (const auto& [name, members] : subs) known += (known.empty() ? "" : ", ") + name;
    throw InputError("group '" + g.name() + "' has no subgroup named '" + label + "'" +
                     (known.empty() ? "" : " (known: " + known + ")"));
  }
  return it->second;
}

/// {"r": r, "entries": r x r array of [w, x, y, z] rational strings}
inline QuaternionMatrix parse_quaternion_matrix(const json& j, const std::string& source) {
  const std::string root = source + ": $";
  const auto& rv = detail::field(j, "r", root);
  if (!rv.is_number_integer() || rv.get<long long>() < 1 || rv.get<long long>() > 3)
    detail::fail(root + ".r", "expected an integer between 1 and 3");
  const auto r = static_cast<std::size_t>(rv.get<long long>());
  const auto& rows = detail::array(detail::field(j, "entries", root), r, root + ".entries");
  QuaternionMatrix a(r, r, quaternion_algebra()->zero());
  for (std::size_t i = 0; i < r; ++i) {
    std::string where = root + ".entries[" + std::to_string(i) + "]";
    detail::array(rows[i], r, where);
    for (std::size_t k = 0; k < r; ++k) {
      std::string at = where + "[" + std::to_string(k) + "]";
      const auto& e = detail::array(rows[i][k], 4, at);
      std::vector<Rational> c;
      for (std::size_t t = 0; t < 4; ++t) c.push_back(detail::rational(e[t], at + "[" + std::to_string(t) + "]"));
      a(i, k) = quaternion(c[0], c[1], c[2], c[3]);
    }
  }
  return a;
}

inline QuaternionMatrix load_quaternion_matrix(const std::string& path) {
  return parse_quaternion_matrix(read_file(path), path);
}

inline json quaternion_matrix_to_json(const QuaternionMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      json e = json::array();
      for (std::size_t t = 0; t < 4; ++t) e.push_back(a(i, k).coeff(t).to_string());
      row.push_back(e);
    }
    rows.push_back(row);
  }
  return {{"r", a.rows()}, {"entries", rows}};
}

/// {"name"?, "degree", "conductor"?, "images": {element: d x d strings}}
inline Representation parse_representation(const json& j, const FiniteGroup& g, const std::string& where) {
  Representation rep;
  rep.name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "phi";
  const auto& dv = detail::field(j, "degree", where);
  if (!dv.is_number_integer() || dv.get<long long>() < 1 || dv.get<long long>() > 8)
    detail::fail(where + ".degree", "expected an integer between 1 and 8");
  rep.degree = static_cast<std::size_t>(dv.get<long long>());
  rep.conductor = detail::conductor(j, where);
  const auto& images = detail::field(j, "images", where);
  if (!images.is_object()) detail::fail(where + ".images", "expected an object keyed by element name");
  for (const auto& [key, value] : images.items())
    if (std::find(g.elements().begin(), g.elements().end(), key) == g.elements().end())
      detail::fail(where + ".images", "unknown element '" + key + "'");
  const Cyclotomic zero(rep.conductor);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& name = g.element_name(x);
    std::string at = where + ".images." + name;
    auto it = images.find(name);
    if (it == images.end()) detail::fail(where + ".images", "missing image of element '" + name + "'");
    detail::array(*it, rep.degree, at);
    Matrix<Cyclotomic> m(rep.degree, rep.degree, zero);
    for (std::size_t i = 0; i < rep.degree; ++i) {
      detail::array((*it)[i], rep.degree, at + "[" + std::to_string(i) + "]");
      for (std::size_t k = 0; k < rep.degree; ++k)
        m(i, k) = detail::cyclotomic((*it)[i][k], rep.conductor,
                                     at + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    rep.images.push_back(std::move(m));
  }
  return rep;
}

/// One representation object, a list of them, or {"representations": [...]}.
inline std::vector<Representation> parse_irreps(const json& j, const FiniteGroup& g, const std::string& source) {
  const std::string root = source + ": $";
  const json* list = &j;
  std::string base = root;
  if (j.is_object() && j.contains("representations")) {
    list = &j["representations"];
    base = root + ".representations";
  }
  std::vector<Representation> out;
  if (list->is_array()) {
    for (std::size_t k = 0; k < list->size(); ++k)
      out.push_back(parse_representation((*list)[k], g, base + "[" + std::to_string(k) + "]"));
  } else {
    out.push_back(parse_representation(*list, g, base));
  }
  return out;
}

inline std::vector<Representation> load_irreps(const std::string& path, const FiniteGroup& g) {
  return parse_irreps(read_file(path), g, path);
}

inline json irreps_to_json(const FiniteGroup& g, const std::vector<Representation>& reps) {
  json list = json::array();
  for (const auto& rep : reps) {
    json images = json::object();
    for (std::size_t x = 0; x < g.order(); ++x) {
      json rows = json::array();
      for (std::size_t i = 0; i < rep.degree; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < rep.degree; ++k) row.push_back(rep.images[x](i, k).to_string());
        rows.push_back(row);
      }
      images[g.element_name(x)] = rows;
    }
    list.push_back({{"name", rep.name}, {"degree", rep.degree}, {"conductor", rep.conductor}, {"images", images}});
  }
  return {{"group", g.name()}, {"representations", list}};
}

}  // namespace studydet::io
