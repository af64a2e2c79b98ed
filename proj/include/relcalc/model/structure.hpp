#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "relcalc/errors.hpp"
#include "relcalc/model/relation.hpp"

namespace relcalc::model {

// Finite structure: universe {0..n-1} plus named binary relations. Immutable
// by convention once built; all evaluation code takes it by const reference.
struct Structure {
  int universe = 1;
  std::map<std::string, Relation> relations;

  bool has(const std::string& name) const { return relations.count(name) != 0; }

  const Relation& at(const std::string& name) const {
    auto it = relations.find(name);
    if (it == relations.end()) throw SemanticError("relation symbol '" + name + "' is not interpreted");
    return it->second;
  }

  void add(const std::string& name, Relation r) {
    if (has(name)) throw SemanticError("relation symbol '" + name + "' already interpreted");
    relations.emplace(name, std::move(r));
  }

  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& [k, v] : relations) out.insert(k);
    return out;
  }

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.universe == b.universe && a.relations == b.relations;
  }
};

inline nlohmann::ordered_json structure_to_json(const Structure& s) {
  nlohmann::ordered_json j;
  j["universe"] = s.universe;
  nlohmann::ordered_json rels(nlohmann::json::value_t::object);
  for (const auto& [name, rel] : s.relations) {
    nlohmann::ordered_json arr(nlohmann::json::value_t::array);
    for (auto [a, b] : rel.pairs()) arr.push_back(nlohmann::ordered_json::array({a, b}));
    rels[name] = std::move(arr);
  }
  j["relations"] = std::move(rels);
  return j;
}

inline std::string structure_to_string(const Structure& s) { return structure_to_json(s).dump(); }

inline Structure structure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("relations"))
    throw SemanticError("structure JSON must have 'universe' and 'relations'");
  Structure s;
  s.universe = j.at("universe").get<int>();
  if (s.universe < 1) throw SemanticError("universe must be non-empty");
  for (const auto& [name, arr] : j.at("relations").items()) {
    Relation r(s.universe);
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2)
        throw SemanticError("relation '" + name + "': pairs must be [source, target]");
      const int a = pair.at(0).get<int>();
      const int b = pair.at(1).get<int>();
      if (a < 0 || b < 0 || a >= s.universe || b >= s.universe)
        throw SemanticError("relation '" + name + "': pair out of universe range");
      r.set(a, b);
    }
    s.relations.emplace(name, std::move(r));
  }
  return s;
}

inline Structure structure_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  return structure_from_json(j);
}

inline Structure structure_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open structure file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return structure_from_string(text);
}

}  // namespace relcalc::model
