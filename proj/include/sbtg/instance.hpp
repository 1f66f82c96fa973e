#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sbtg/carrier_map.hpp"
#include "sbtg/errors.hpp"
#include "sbtg/group.hpp"
#include "sbtg/soft_set.hpp"
#include "sbtg/soft_topology.hpp"

namespace sbtg {

using ordered_json = nlohmann::ordered_json;

// Label-level rendering. All user-facing witnesses go through these so that
// reports never leak raw indices.

inline std::string element_tuple_text(const Universe& u, const SoftElement& e) {
  std::string s = "(";
  for (std::size_t t = 0; t < e.choices.size(); ++t) {
    if (t) s += ", ";
    s += u.labels()[e.choices[t]];
  }
  s += ")";
  return s;
}

inline std::string element_tuple_text(const Universe& u, const SoftElementSpace& sp,
                                      std::size_t idx) {
  return element_tuple_text(u, sp.element(idx));
}

inline ordered_json element_tuple_json(const Universe& u, const SoftElement& e) {
  ordered_json a = ordered_json::array();
  for (auto c : e.choices) a.push_back(u.labels()[c]);
  return a;
}

inline ordered_json element_tuple_json(const Universe& u, const SoftElementSpace& sp,
                                       std::size_t idx) {
  return element_tuple_json(u, sp.element(idx));
}

inline std::string soft_set_text(const Universe& u, const ParameterSet& params, const SoftSet& f) {
  std::string s = "{";
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    if (t) s += "; ";
    s += params.labels()[t];
    s += ": {";
    bool first = true;
    f.section(t).for_each_bit([&](std::size_t i) {
      if (!first) s += ", ";
      first = false;
      s += u.labels()[i];
    });
    s += "}";
  }
  s += "}";
  return s;
}

inline ordered_json soft_set_json(const Universe& u, const ParameterSet& params, const SoftSet& f) {
  ordered_json o = ordered_json::object();
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    ordered_json labels = ordered_json::array();
    f.section(t).for_each_bit([&](std::size_t i) { labels.push_back(u.labels()[i]); });
    o[params.labels()[t]] = std::move(labels);
  }
  return o;
}

struct NamedTopology {
  std::string name;
  SoftTopology topology;
};

// A named map between soft elements, stored as a table over soft-element
// indices of the instance's own space.
struct NamedMap {
  std::string name;
  CarrierMap table;
};

struct Instance {
  Universe universe;
  ParameterSet parameters;
  std::optional<FiniteGroup> group;
  SoftSet soft_set;
  std::vector<NamedTopology> topologies;
  std::vector<NamedMap> maps;
  // Absent when some section is empty (no choice functions exist then).
  std::optional<SoftElementSpace> space;

  const SoftElementSpace& require_space() const {
    if (!space) throw shape_error("instance has an empty section, so it has no soft elements");
    return *space;
  }

  const FiniteGroup& require_group() const {
    if (!group) throw shape_error("instance declares no group");
    return *group;
  }

  const NamedTopology* find_topology(const std::string& name) const {
    for (const auto& t : topologies)
      if (t.name == name) return &t;
    return nullptr;
  }

  const NamedTopology& require_topology(const std::string& name) const {
    const NamedTopology* t = find_topology(name);
    if (!t) throw label_error("no topology named \"" + name + "\" in the instance");
    return *t;
  }

  const NamedMap* find_map(const std::string& name) const {
    for (const auto& m : maps)
      if (m.name == name) return &m;
    return nullptr;
  }

  const NamedMap& require_map(const std::string& name) const {
    const NamedMap* m = find_map(name);
    if (!m) throw label_error("no map named \"" + name + "\" in the instance");
    return *m;
  }
};

namespace detail {

inline void expect_object(const ordered_json& j, const std::string& what) {
  if (!j.is_object()) throw parse_error(what + " must be a JSON object");
}

inline void expect_array(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + " must be a JSON array");
}

inline std::vector<std::string> string_array(const ordered_json& j, const std::string& what) {
  expect_array(j, what);
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw parse_error(what + " must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline void check_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) throw parse_error("unknown key \"" + item.key() + "\" in " + where);
  }
}

inline void check_keys_against_params(const ordered_json& j, const ParameterSet& params,
                                      const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto& p : params.labels())
      if (item.key() == p) known = true;
    if (!known)
      throw parse_error(where + " uses undeclared parameter \"" + item.key() + "\"");
  }
}

inline SoftSet parse_soft_set_object(const ordered_json& j, const Universe& u,
                                     const ParameterSet& params, const std::string& where) {
  expect_object(j, where);
  check_keys_against_params(j, params, where);
  std::vector<std::vector<std::string>> sections(params.size());
  for (std::size_t t = 0; t < params.size(); ++t) {
    const std::string& p = params.labels()[t];
    if (!j.contains(p)) throw parse_error(where + " is missing parameter \"" + p + "\"");
    sections[t] = string_array(j.at(p), where + "[\"" + p + "\"]");
  }
  try {
    return make_soft_set(u, params, sections);
  } catch (const error& e) {
    throw parse_error(where + ": " + e.what());
  }
}

inline FiniteGroup parse_group(const ordered_json& j, const Universe& u) {
  expect_object(j, "group");
  check_keys(j, {"table", "identity"}, "group");
  if (!j.contains("table")) throw parse_error("group is missing \"table\"");
  if (!j.contains("identity")) throw parse_error("group is missing \"identity\"");
  const ordered_json& jt = j.at("table");
  expect_array(jt, "group table");
  const std::size_t n = u.size();
  if (jt.size() != n)
    throw parse_error("group table must have one row per universe element");
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row = string_array(jt.at(i), "group table row");
    if (row.size() != n)
      throw parse_error("group table row for \"" + u.labels()[i] +
                        "\" must have one entry per universe element");
    for (std::size_t k = 0; k < n; ++k)
      flat[i * n + k] = static_cast<std::uint32_t>(u.require(row[k]));
  }
  FiniteGroup g = [&] {
    try {
      return FiniteGroup(n, std::move(flat));
    } catch (const error& e) {
      throw parse_error(std::string("group: ") + e.what());
    }
  }();
  if (!j.at("identity").is_string()) throw parse_error("group identity must be a label");
  const std::string id_label = j.at("identity").get<std::string>();
  if (u.require(id_label) != g.identity())
    throw parse_error("group declares identity \"" + id_label + "\" but the table's identity is \"" +
                      u.labels()[g.identity()] + "\"");
  return g;
}

inline std::string topology_axiom_failure(const SoftTopologyCheck& c, const Universe& u,
                                          const ParameterSet& params) {
  switch (c.kind) {
    case SoftTopologyCheck::Kind::ok:
      return "";
    case SoftTopologyCheck::Kind::member_not_subset:
      return "member " + soft_set_text(u, params, c.family[c.a]) +
             " is not a soft subset of the ambient soft set";
    case SoftTopologyCheck::Kind::missing_null:
      return "the null soft set is not a member";
    case SoftTopologyCheck::Kind::missing_whole:
      return "the ambient soft set is not a member";
    case SoftTopologyCheck::Kind::union_escapes:
      return "union of members " + soft_set_text(u, params, c.family[c.a]) + " and " +
             soft_set_text(u, params, c.family[c.b]) + " is missing: " +
             soft_set_text(u, params, *c.computed);
    case SoftTopologyCheck::Kind::intersection_escapes:
      return "intersection of members " + soft_set_text(u, params, c.family[c.a]) + " and " +
             soft_set_text(u, params, c.family[c.b]) + " is missing: " +
             soft_set_text(u, params, *c.computed);
  }
  return "";
}

inline SoftTopology parse_topology(const ordered_json& j, const Universe& u,
                                   const ParameterSet& params, const SoftSet& ambient,
                                   const std::string& name) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "discrete") return SoftTopology::discrete(ambient);
    if (s == "indiscrete") return SoftTopology::indiscrete(ambient);
    throw parse_error("topology \"" + name + "\": unknown shorthand \"" + s +
                      "\" (expected \"discrete\" or \"indiscrete\")");
  }
  expect_array(j, "topology \"" + name + "\"");
  std::vector<SoftSet> members;
  members.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    members.push_back(
        parse_soft_set_object(j.at(i), u, params, "topology \"" + name + "\" member"));
  SoftTopologyCheck check = check_soft_topology(std::move(members), ambient);
  if (!check.holds())
    throw parse_error("topology \"" + name + "\": " + topology_axiom_failure(check, u, params));
  return SoftTopology::from_members(ambient, std::move(check.family));
}

inline SoftElement parse_element_tuple(const ordered_json& j, const Universe& u,
                                       const ParameterSet& params, const SoftSet& f,
                                       const std::string& where) {
  std::vector<std::string> labels = string_array(j, where);
  if (labels.size() != params.size())
    throw parse_error(where + " must list one label per parameter");
  SoftElement e;
  e.choices.resize(labels.size());
  for (std::size_t t = 0; t < labels.size(); ++t) {
    std::size_t idx = u.require(labels[t]);
    if (!f.section(t).test(idx))
      throw parse_error(where + ": \"" + labels[t] + "\" is not in the section at parameter \"" +
                        params.labels()[t] + "\"");
    e.choices[t] = static_cast<std::uint32_t>(idx);
  }
  return e;
}

inline CarrierMap parse_map(const ordered_json& j, const Universe& u, const ParameterSet& params,
                            const SoftSet& f, const SoftElementSpace& space,
                            const std::string& name) {
  expect_array(j, "map \"" + name + "\"");
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> table(space.size(), unset);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const ordered_json& pair = j.at(i);
    expect_array(pair, "map \"" + name + "\" entry");
    if (pair.size() != 2)
      throw parse_error("map \"" + name + "\" entry must be a [from, to] pair of tuples");
    SoftElement from =
        parse_element_tuple(pair.at(0), u, params, f, "map \"" + name + "\" source tuple");
    SoftElement to =
        parse_element_tuple(pair.at(1), u, params, f, "map \"" + name + "\" target tuple");
    std::size_t fi = space.index(from);
    if (table[fi] != unset)
      throw parse_error("map \"" + name + "\" assigns " + element_tuple_text(u, from) + " twice");
    table[fi] = static_cast<std::uint32_t>(space.index(to));
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == unset)
      throw parse_error("map \"" + name + "\" is missing soft element " +
                        element_tuple_text(u, space, i));
  return CarrierMap(space.size(), space.size(), std::move(table));
}

}  // namespace detail

inline Instance parse_instance(const ordered_json& j,
                               std::uint64_t se_cap = SoftElementSpace::default_cap) {
  detail::expect_object(j, "instance");
  detail::check_keys(j, {"universe", "group", "parameters", "soft_set", "topologies", "maps"},
                     "the instance");
  for (const char* k : {"universe", "parameters", "soft_set"})
    if (!j.contains(k)) throw parse_error(std::string("instance is missing \"") + k + "\"");

  Universe u = [&] {
    try {
      return Universe(detail::string_array(j.at("universe"), "universe"));
    } catch (const error& e) {
      throw parse_error(std::string("universe: ") + e.what());
    }
  }();
  ParameterSet params = [&] {
    try {
      return ParameterSet(detail::string_array(j.at("parameters"), "parameters"));
    } catch (const error& e) {
      throw parse_error(std::string("parameters: ") + e.what());
    }
  }();

  std::optional<FiniteGroup> group;
  if (j.contains("group")) group = detail::parse_group(j.at("group"), u);

  SoftSet f = detail::parse_soft_set_object(j.at("soft_set"), u, params, "soft_set");

  std::optional<SoftElementSpace> space;
  if (f.all_sections_nonempty()) space = SoftElementSpace(f, se_cap);

  std::vector<NamedTopology> topologies;
  if (j.contains("topologies")) {
    detail::expect_object(j.at("topologies"), "topologies");
    for (const auto& item : j.at("topologies").items()) {
      if (item.key().empty()) throw parse_error("topology names must be nonempty");
      for (const auto& existing : topologies)
        if (existing.name == item.key())
          throw parse_error("duplicate topology name \"" + item.key() + "\"");
      topologies.push_back(
          {item.key(), detail::parse_topology(item.value(), u, params, f, item.key())});
    }
  }

  std::vector<NamedMap> maps;
  if (j.contains("maps")) {
    detail::expect_object(j.at("maps"), "maps");
    for (const auto& item : j.at("maps").items()) {
      if (item.key().empty()) throw parse_error("map names must be nonempty");
      for (const auto& existing : maps)
        if (existing.name == item.key())
          throw parse_error("duplicate map name \"" + item.key() + "\"");
      if (!space)
        throw parse_error("map \"" + item.key() +
                          "\" cannot be defined: an empty section leaves no soft elements");
      maps.push_back(
          {item.key(), detail::parse_map(item.value(), u, params, f, *space, item.key())});
    }
  }

  return Instance{std::move(u),          std::move(params), std::move(group),
                  std::move(f),          std::move(topologies), std::move(maps),
                  std::move(space)};
}

inline Instance load_instance(const std::string& path,
                              std::uint64_t se_cap = SoftElementSpace::default_cap) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open instance file: " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return parse_instance(j, se_cap);
}

// Serializes back to the instance file format. Topology members come out in
// canonical order, so serialize(parse(serialize(x))) == serialize(x).
inline ordered_json serialize_instance(const Instance& inst) {
  ordered_json j = ordered_json::object();
  j["universe"] = inst.universe.labels();
  if (inst.group) {
    const FiniteGroup& g = *inst.group;
    ordered_json table = ordered_json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
      ordered_json row = ordered_json::array();
      for (std::size_t b = 0; b < g.order(); ++b)
        row.push_back(inst.universe.labels()[g.mul(a, b)]);
      table.push_back(std::move(row));
    }
    ordered_json jg = ordered_json::object();
    jg["table"] = std::move(table);
    jg["identity"] = inst.universe.labels()[g.identity()];
    j["group"] = std::move(jg);
  }
  j["parameters"] = inst.parameters.labels();
  j["soft_set"] = soft_set_json(inst.universe, inst.parameters, inst.soft_set);
  if (!inst.topologies.empty()) {
    ordered_json jt = ordered_json::object();
    for (const auto& named : inst.topologies) {
      if (named.topology.is_symbolic_discrete()) {
        jt[named.name] = "discrete";
        continue;
      }
      ordered_json members = ordered_json::array();
      for (const auto& m : named.topology.members())
        members.push_back(soft_set_json(inst.universe, inst.parameters, m));
      jt[named.name] = std::move(members);
    }
    j["topologies"] = std::move(jt);
  }
  if (!inst.maps.empty()) {
    const SoftElementSpace& space = inst.require_space();
    ordered_json jm = ordered_json::object();
    for (const auto& named : inst.maps) {
      ordered_json pairs = ordered_json::array();
      for (std::size_t i = 0; i < named.table.source_size; ++i) {
        ordered_json pair = ordered_json::array();
        pair.push_back(element_tuple_json(inst.universe, space, i));
        pair.push_back(element_tuple_json(inst.universe, space, named.table(i)));
        pairs.push_back(std::move(pair));
      }
      jm[named.name] = std::move(pairs);
    }
    j["maps"] = std::move(jm);
  }
  return j;
}

}  // namespace sbtg
