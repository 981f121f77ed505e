// Copyright 2026 The supercolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCOLOR_IO_HPP_
#define SUPERCOLOR_IO_HPP_

// JSON file formats.
//
// Instance: {"elements": ["a", ...],
//            "g1": [{"set": ["a", "b"], "value": 3}, ...],
//            "g2": [...]}
// Graph:    {"S": [...], "T": [...], "edges": [["s1", "t1"], ...]}
// Lists:    {"a": ["c1", "c2"], ...}

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/encode.hpp"
#include "supercolor/error.hpp"
#include "supercolor/oracle.hpp"

namespace supercolor {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline std::vector<std::string> string_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(what + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline SetFn parse_fn(const GroundRef& ground, const Json& j, const std::string& label) {
  if (!j.is_array()) throw ParseError(label + " must be an array");
  std::vector<Entry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("set") || !item.contains("value")) {
      throw ParseError(label + " entries need \"set\" and \"value\"");
    }
    if (!item["value"].is_number_integer()) throw ParseError(label + " values must be integers");
    Bits set = 0;
    for (const auto& name : string_array(item["set"], label + " set")) {
      const auto i = ground->index_of(name);
      if (!i) throw ParseError(label + ": unknown element '" + name + "'");
      set |= bit(*i);
    }
    entries.push_back({set, item["value"].get<Value>()});
  }
  try {
    return SetFn(ground, std::move(entries));
  } catch (const InputError& e) {
    throw ParseError(label + ": " + e.what());
  }
}

}  // namespace detail

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("g1")) {
    throw ParseError("instance needs \"elements\" and \"g1\"");
  }
  GroundRef ground;
  try {
    ground = make_ground(detail::string_array(j["elements"], "elements"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  if (ground->empty()) throw ParseError("instance needs at least one element");
  SetFn g1 = detail::parse_fn(ground, j["g1"], "g1");
  SetFn g2 = j.contains("g2") ? detail::parse_fn(ground, j["g2"], "g2") : SetFn(ground);
  return Instance{std::move(g1), std::move(g2)};
}

inline Instance parse_instance(const std::string& text) {
  return instance_from_json(parse_json(text));
}

inline Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

inline Json set_to_json(const GroundSet& ground, Bits x) { return ground.names_of(x); }

inline Json family_to_json(const GroundSet& ground, const std::vector<Bits>& family) {
  Json out = Json::array();
  for (Bits x : family) out.push_back(set_to_json(ground, x));
  return out;
}

inline Json fn_to_json(const SetFn& g) {
  Json out = Json::array();
  for (const Entry& e : g.entries()) {
    out.push_back({{"set", set_to_json(g.ground(), e.set)}, {"value", e.value}});
  }
  return out;
}

inline Json instance_to_json(const Instance& inst) {
  return {{"elements", inst.ground().names()}, {"g1", fn_to_json(inst.g1)},
          {"g2", fn_to_json(inst.g2)}};
}

// FNV-1a over the canonical serialization (elements in order, entries sorted
// by set-as-integer).
inline std::string digest(const Instance& inst) {
  const std::string canon = instance_to_json(inst).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json element_map(const GroundSet& ground, const std::vector<Value>& values) {
  Json out = Json::object();
  for (int u = 0; u < ground.size(); ++u) out[ground.name(u)] = values[static_cast<size_t>(u)];
  return out;
}

inline Json element_map(const GroundSet& ground, const std::vector<int>& values) {
  return element_map(ground, std::vector<Value>(values.begin(), values.end()));
}

inline Json violation_to_json(const GroundSet& ground, const Violation& v) {
  Json out = {{"kind", v.kind}};
  Json sets = Json::array();
  for (Bits x : v.sets) sets.push_back(set_to_json(ground, x));
  out["sets"] = sets;
  out["values"] = v.values;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

inline Json report_to_json(const GroundSet& ground, const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(violation_to_json(ground, x));
  return {{"ok", r.ok()}, {"violations", v}};
}

inline Json analysis_to_json(const SetFn& g, const BunchAnalysis& a) {
  Json part_values = Json::array();
  for (Bits p : a.partition.parts) {
    const auto v = g.find(p);
    part_values.push_back({{"part", set_to_json(g.ground(), p)},
                           {"value", v ? Json(*v) : Json(nullptr)}});
  }
  return {{"effective", family_to_json(g.ground(), a.effective)},
          {"partition", family_to_json(g.ground(), a.partition.parts)},
          {"d", element_map(g.ground(), a.degree.values)},
          {"part_values", part_values}};
}

inline Multigraph parse_graph(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("S") || !j.contains("T") || !j.contains("edges")) {
    throw ParseError("graph needs \"S\", \"T\" and \"edges\"");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (!j["edges"].is_array()) throw ParseError("edges must be an array");
  for (const auto& e : j["edges"]) {
    const auto pair = detail::string_array(e, "edge");
    if (pair.size() != 2) throw ParseError("each edge is a pair [s, t]");
    edges.emplace_back(pair[0], pair[1]);
  }
  try {
    return make_multigraph(detail::string_array(j["S"], "S"), detail::string_array(j["T"], "T"),
                           edges);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

// Color names are mapped to ids 1..m in sorted name order.
struct NamedLists {
  ListAssignment lists;
  std::vector<std::string> palette;  // id - 1 -> color name
};

inline NamedLists parse_lists(const std::string& text, const GroundSet& ground) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("lists file must be an object");
  std::map<std::string, std::vector<std::string>> raw;
  for (const auto& [name, colors] : j.items()) {
    if (!ground.index_of(name)) throw ParseError("lists: unknown element '" + name + "'");
    raw[name] = detail::string_array(colors, "list of '" + name + "'");
  }
  NamedLists out;
  for (const auto& [name, colors] : raw) {
    out.palette.insert(out.palette.end(), colors.begin(), colors.end());
  }
  std::sort(out.palette.begin(), out.palette.end());
  out.palette.erase(std::unique(out.palette.begin(), out.palette.end()), out.palette.end());
  for (int u = 0; u < ground.size(); ++u) {
    auto it = raw.find(ground.name(u));
    if (it == raw.end() || it->second.empty()) {
      throw ParseError("lists: element '" + ground.name(u) + "' needs a nonempty list");
    }
    std::vector<int> ids;
    for (const auto& c : it->second) {
      ids.push_back(static_cast<int>(
          std::lower_bound(out.palette.begin(), out.palette.end(), c) - out.palette.begin()) + 1);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    out.lists.lists.push_back(std::move(ids));
  }
  return out;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_IO_HPP_
