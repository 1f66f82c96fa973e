#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbtg/bitop.hpp"
#include "sbtg/instance.hpp"

namespace sbtg {

// Options shared by the check and witness commands. Topology selection
// defaults to the declared order: the first topology for single-topology
// checks, the first two (or the first twice) for pair checks.
struct RunOptions {
  std::vector<std::string> topologies;
  int level = 2;
  std::string mode = "sectionwise";
  std::string map;
  std::uint64_t cap_se = SoftElementSpace::default_cap;
};

// Exit code 0 means the checked property holds (or a witness was found),
// 1 means it fails with a witness (or no witness exists within caps).
// Errors are reported by throwing; the CLI turns them into exit code 2.
struct Report {
  int exit_code = 1;
  std::vector<std::string> lines;
  ordered_json json;

  std::string text() const {
    std::string out;
    for (const auto& l : lines) {
      out += l;
      out += '\n';
    }
    return out;
  }
};

namespace detail {

inline Report new_report(const std::string& command) {
  Report r;
  r.json["command"] = command;
  r.json["verdict"] = "";
  r.json["witnesses"] = ordered_json::array();
  r.json["slices"] = ordered_json::object();
  r.json["caps"] = ordered_json::object();
  r.lines.push_back("command: " + command);
  return r;
}

inline void finish(Report& r, const std::string& verdict, int exit_code) {
  r.json["verdict"] = verdict;
  r.exit_code = exit_code;
  r.lines.push_back("verdict: " + verdict);
}

inline void add_witness(Report& r, ordered_json w, const std::string& line) {
  r.json["witnesses"].push_back(std::move(w));
  r.lines.push_back("witness: " + line);
}

inline DisjointnessMode parse_mode(const std::string& s) {
  if (s == "sectionwise") return DisjointnessMode::sectionwise;
  if (s == "soft-element") return DisjointnessMode::soft_element;
  throw label_error("unknown mode \"" + s + "\" (expected sectionwise or soft-element)");
}

inline SeparationLevel parse_level(int level) {
  switch (level) {
    case 0: return SeparationLevel::t0;
    case 1: return SeparationLevel::t1;
    case 2: return SeparationLevel::t2;
  }
  throw label_error("separation level must be 0, 1, or 2");
}

inline const NamedTopology& pick_single(const Instance& inst, const RunOptions& opt,
                                        const char* what) {
  if (!opt.topologies.empty()) {
    if (opt.topologies.size() != 1)
      throw label_error(std::string(what) + " takes one topology, e.g. --topologies tau1");
    return inst.require_topology(opt.topologies[0]);
  }
  if (inst.topologies.empty()) throw label_error("the instance declares no topologies");
  return inst.topologies[0];
}

inline std::pair<const NamedTopology*, const NamedTopology*> pick_pair(const Instance& inst,
                                                                       const RunOptions& opt,
                                                                       const char* what) {
  if (!opt.topologies.empty()) {
    if (opt.topologies.size() != 2)
      throw label_error(std::string(what) +
                        " takes two topologies, e.g. --topologies tau1,tau2");
    return {&inst.require_topology(opt.topologies[0]),
            &inst.require_topology(opt.topologies[1])};
  }
  if (inst.topologies.empty()) throw label_error("the instance declares no topologies");
  const NamedTopology* a = &inst.topologies[0];
  const NamedTopology* b = inst.topologies.size() >= 2 ? &inst.topologies[1] : a;
  return {a, b};
}

inline const NamedMap& pick_map(const Instance& inst, const RunOptions& opt) {
  if (!opt.map.empty()) return inst.require_map(opt.map);
  if (inst.maps.empty()) throw label_error("the instance declares no maps");
  if (inst.maps.size() > 1) throw label_error("several maps are declared, pick one with --map");
  return inst.maps[0];
}

inline std::string subgroup_failure_text(const Universe& u, const SubgroupCheck& c) {
  switch (c.kind) {
    case SubgroupCheck::Kind::ok:
      return "subgroup";
    case SubgroupCheck::Kind::empty_set:
      return "empty section";
    case SubgroupCheck::Kind::no_identity:
      return "missing the identity";
    case SubgroupCheck::Kind::inverse_escapes:
      return "inverse of " + u.labels()[c.witness[0]] + " escapes the section";
    case SubgroupCheck::Kind::product_escapes:
      return "product of " + u.labels()[c.witness[0]] + " and " + u.labels()[c.witness[1]] +
             " escapes the section";
  }
  return "";
}

inline ordered_json mask_elements_json(const Universe& u, const SoftElementSpace& sp,
                                       const Bitset& mask) {
  ordered_json a = ordered_json::array();
  mask.for_each_bit([&](std::size_t i) { a.push_back(element_tuple_json(u, sp, i)); });
  return a;
}

inline std::string mask_elements_text(const Universe& u, const SoftElementSpace& sp,
                                      const Bitset& mask) {
  std::string s = "{";
  bool first = true;
  mask.for_each_bit([&](std::size_t i) {
    if (!first) s += ", ";
    first = false;
    s += element_tuple_text(u, sp, i);
  });
  s += "}";
  return s;
}

// Reports a section that is not a subgroup and finishes the report. Used as
// the shared gate for the group-based checks.
inline bool soft_group_gate(Report& r, const Instance& inst) {
  const FiniteGroup& g = inst.require_group();
  SoftGroupCheck c = check_soft_group(inst.soft_set, g);
  if (c.holds) return true;
  const std::string& p = inst.parameters.labels()[c.param];
  ordered_json w;
  w["kind"] = "section-not-subgroup";
  w["parameter"] = p;
  w["problem"] = subgroup_failure_text(inst.universe, c.section_check);
  add_witness(r, std::move(w),
              "section at " + p + " is " + subgroup_failure_text(inst.universe, c.section_check));
  finish(r, "fails", 1);
  return false;
}

}  // namespace detail

inline Report run_check_axioms(const Instance& inst) {
  Report r = detail::new_report("check axioms");
  if (inst.group) r.lines.push_back("group table: holds (order " +
                                    std::to_string(inst.group->order()) + ")");
  ordered_json checked = ordered_json::object();
  for (const auto& named : inst.topologies) {
    std::string state;
    if (named.topology.is_symbolic_discrete()) {
      state = "holds (soft discrete, kept symbolic)";
    } else {
      SoftTopologyCheck c =
          check_soft_topology(named.topology.members(), inst.soft_set);
      if (!c.holds())
        throw theorem_violation("a loaded topology fails re-validation: " +
                                detail::topology_axiom_failure(c, inst.universe, inst.parameters));
      state = "holds (" + std::to_string(named.topology.members().size()) + " members)";
    }
    checked[named.name] = state;
    r.lines.push_back("topology \"" + named.name + "\": " + state);
  }
  r.json["slices"] = std::move(checked);
  detail::finish(r, "holds", 0);
  return r;
}

inline Report run_check_soft_group(const Instance& inst) {
  Report r = detail::new_report("check soft-group");
  const FiniteGroup& g = inst.require_group();
  bool all = true;
  for (std::size_t t = 0; t < inst.parameters.size(); ++t) {
    SubgroupCheck c = check_subgroup(g, inst.soft_set.section(t));
    const std::string& p = inst.parameters.labels()[t];
    std::string state = detail::subgroup_failure_text(inst.universe, c);
    r.json["slices"][p] = state;
    r.lines.push_back("section at " + p + ": " + state);
    if (!c.holds()) {
      all = false;
      ordered_json w;
      w["kind"] = "section-not-subgroup";
      w["parameter"] = p;
      w["problem"] = state;
      detail::add_witness(r, std::move(w), "section at " + p + " is " + state);
    }
  }
  detail::finish(r, all ? "holds" : "fails", all ? 0 : 1);
  return r;
}

inline Report run_check_stg(const Instance& inst, const RunOptions& opt) {
  const NamedTopology& named = detail::pick_single(inst, opt, "stg");
  Report r = detail::new_report("check stg");
  r.lines.push_back("topology: " + named.name);
  r.json["caps"]["se"] = opt.cap_se;
  if (!detail::soft_group_gate(r, inst)) return r;
  const FiniteGroup& g = inst.require_group();
  bool all = true;
  for (std::size_t t = 0; t < inst.parameters.size(); ++t) {
    std::vector<std::uint32_t> to_parent;
    FiniteGroup sub = subgroup_as_group(g, inst.soft_set.section(t), &to_parent);
    GroupTopologyCheck c = is_topological_group(sub, component_topology(named.topology, t));
    const std::string& p = inst.parameters.labels()[t];
    if (c.holds()) {
      r.json["slices"][p] = "topological group";
      r.lines.push_back("slice at " + p + ": topological group");
      continue;
    }
    all = false;
    const auto& wi = *c.division_witness;
    auto lab = [&](std::size_t dense) { return inst.universe.labels()[to_parent[dense]]; };
    r.json["slices"][p] = "division map discontinuous";
    r.lines.push_back("slice at " + p + ": division map discontinuous");
    ordered_json w;
    w["kind"] = "division-discontinuity";
    w["parameter"] = p;
    w["topology"] = named.name;
    w["x"] = lab(wi[0]);
    w["y"] = lab(wi[1]);
    w["u"] = lab(wi[2]);
    w["v"] = lab(wi[3]);
    detail::add_witness(r, std::move(w),
                        "at " + p + ", u=" + lab(wi[2]) + " near x=" + lab(wi[0]) + " and v=" +
                            lab(wi[3]) + " near y=" + lab(wi[1]) +
                            " give u*v^-1 outside every open around x*y^-1");
  }
  detail::finish(r, all ? "holds" : "fails", all ? 0 : 1);
  return r;
}

inline Report run_check_sbtg(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "sbtg");
  Report r = detail::new_report("check sbtg");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  r.json["caps"]["se"] = opt.cap_se;
  if (!detail::soft_group_gate(r, inst)) return r;
  SbtgInstance si(SoftGroup(inst.require_group(), inst.soft_set), t1->topology, t2->topology);
  SbtgCheck c = is_sbtg_componentwise(si);
  for (const auto& slice : c.slices) {
    const std::string& p = inst.parameters.labels()[slice.param];
    ordered_json verdicts = ordered_json::object();
    verdicts[t1->name] = slice.first.holds() ? "topological group" : "division map discontinuous";
    verdicts[t2->name] = slice.second.holds() ? "topological group" : "division map discontinuous";
    r.lines.push_back("slice at " + p + ": " + t1->name + " " +
                      (slice.first.holds() ? "holds" : "fails") + ", " + t2->name + " " +
                      (slice.second.holds() ? "holds" : "fails"));
    r.json["slices"][p] = std::move(verdicts);
    if (slice.holds()) continue;
    std::vector<std::uint32_t> to_parent;
    subgroup_as_group(inst.require_group(), inst.soft_set.section(slice.param), &to_parent);
    const GroupTopologyCheck& bad = slice.first.holds() ? slice.second : slice.first;
    const std::string& tname = slice.first.holds() ? t2->name : t1->name;
    const auto& wi = *bad.division_witness;
    auto lab = [&](std::size_t dense) { return inst.universe.labels()[to_parent[dense]]; };
    ordered_json w;
    w["kind"] = "division-discontinuity";
    w["parameter"] = p;
    w["topology"] = tname;
    w["x"] = lab(wi[0]);
    w["y"] = lab(wi[1]);
    w["u"] = lab(wi[2]);
    w["v"] = lab(wi[3]);
    detail::add_witness(r, std::move(w),
                        "slice at " + p + " in " + tname + ": u=" + lab(wi[2]) + ", v=" +
                            lab(wi[3]) + " break division continuity at (" + lab(wi[0]) + ", " +
                            lab(wi[1]) + ")");
  }
  detail::finish(r, c.holds ? "holds" : "fails", c.holds ? 0 : 1);
  return r;
}

inline Report run_check_sbtg_oracle(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "sbtg-oracle");
  Report r = detail::new_report("check sbtg-oracle");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  const std::uint64_t oracle_cap = opt.cap_se < 12 ? opt.cap_se : 12;
  r.json["caps"]["se"] = opt.cap_se;
  r.json["caps"]["oracle_se"] = oracle_cap;
  if (!detail::soft_group_gate(r, inst)) return r;
  SbtgInstance si(SoftGroup(inst.require_group(), inst.soft_set), t1->topology, t2->topology);
  SbtgOracleCheck c = is_sbtg_oracle(si, oracle_cap);
  r.lines.push_back(std::string("materialized division continuity: first ") +
                    (c.division1_continuous ? "holds" : "fails") + ", second " +
                    (c.division2_continuous ? "holds" : "fails"));
  r.lines.push_back(std::string("componentwise criterion: ") +
                    (c.componentwise.holds ? "holds" : "fails"));
  r.lines.push_back(std::string("criteria agree: ") + (c.agrees() ? "yes" : "no"));
  r.json["slices"]["oracle"] = c.holds ? "holds" : "fails";
  r.json["slices"]["componentwise"] = c.componentwise.holds ? "holds" : "fails";
  if (!c.holds && c.componentwise.failing_param) {
    const std::string& p = inst.parameters.labels()[*c.componentwise.failing_param];
    ordered_json w;
    w["kind"] = "slice-not-topological-group";
    w["parameter"] = p;
    detail::add_witness(r, std::move(w), "slice at " + p + " is not a bitopological group");
  }
  detail::finish(r, c.holds ? "holds" : "fails", c.holds ? 0 : 1);
  return r;
}

inline Report run_check_separation(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "separation");
  SeparationLevel level = detail::parse_level(opt.level);
  DisjointnessMode mode = detail::parse_mode(opt.mode);
  Report r = detail::new_report("check separation");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  r.lines.push_back(std::string("level: ") + to_string(level));
  r.lines.push_back(std::string("mode: ") + to_string(mode));
  r.json["caps"]["se"] = opt.cap_se;
  SoftBitopSpace space(t1->topology, t2->topology);
  PairwiseSeparationCheck c = pairwise_soft_separation(space, level, mode, opt.cap_se);
  const SoftElementSpace& sp = inst.require_space();
  SlicePairwiseSeparation sl = slices_pairwise_separation(space, level);
  for (std::size_t t = 0; t < inst.parameters.size(); ++t) {
    const std::string& p = inst.parameters.labels()[t];
    r.json["slices"][p] = sl.slice_holds[t] ? "holds" : "fails";
    r.lines.push_back("slice at " + p + ": " + (sl.slice_holds[t] ? "holds" : "fails"));
  }
  if (c.other_mode_holds) {
    DisjointnessMode other = mode == DisjointnessMode::sectionwise
                                 ? DisjointnessMode::soft_element
                                 : DisjointnessMode::sectionwise;
    r.lines.push_back(std::string("other mode (") + to_string(other) + "): " +
                      (*c.other_mode_holds ? "holds" : "fails"));
    r.json["other_mode"] = *c.other_mode_holds ? "holds" : "fails";
  }
  if (!c.holds && c.witness) {
    ordered_json w;
    w["kind"] = "unseparated-pair";
    w["level"] = to_string(level);
    w["mode"] = to_string(mode);
    w["first"] = element_tuple_json(inst.universe, sp, c.witness->first);
    w["second"] = element_tuple_json(inst.universe, sp, c.witness->second);
    detail::add_witness(r, std::move(w),
                        std::string(to_string(level)) + " fails at the pair " +
                            element_tuple_text(inst.universe, sp, c.witness->first) + ", " +
                            element_tuple_text(inst.universe, sp, c.witness->second));
  }
  detail::finish(r, c.holds ? "holds" : "fails", c.holds ? 0 : 1);
  return r;
}

inline Report run_check_compactness(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "compactness");
  Report r = detail::new_report("check compactness");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  SoftBitopSpace space(t1->topology, t2->topology);
  CompactnessTransferCheck c = slice_compactness_transfer(space, inst.soft_set);
  if (!c.canonical) {
    r.lines.push_back("cover lifting needs canonical topologies");
    for (const NamedTopology* named : {t1, t2}) {
      auto gap = noncanonical_gap_witness(named->topology);
      if (!gap) continue;
      ordered_json w;
      w["kind"] = "noncanonical-topology";
      w["topology"] = named->name;
      w["missing_member"] = soft_set_json(inst.universe, inst.parameters, *gap);
      detail::add_witness(r, std::move(w),
                          "topology \"" + named->name + "\" is not canonical, e.g. it misses " +
                              soft_set_text(inst.universe, inst.parameters, *gap));
      break;
    }
    detail::finish(r, "fails", 1);
    return r;
  }
  r.lines.push_back("lifted slice covers: " + std::to_string(c.lifted_cylinders) +
                    " cylinders, members " + (c.lift_members_ok ? "verified" : "FAILED") +
                    ", coverage " + (c.lift_covers_ok ? "verified" : "FAILED"));
  r.lines.push_back("restricted soft covers: " + std::to_string(c.restricted_covers) +
                    ", slice coverage " + (c.restrict_covers_ok ? "verified" : "FAILED"));
  r.json["slices"]["lifted_cylinders"] = c.lifted_cylinders;
  r.json["slices"]["restricted_covers"] = c.restricted_covers;
  detail::finish(r, c.holds() ? "holds" : "fails", c.holds() ? 0 : 1);
  return r;
}

inline Report run_check_connected(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "connected");
  Report r = detail::new_report("check connected");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  r.json["caps"]["se"] = opt.cap_se;
  r.json["caps"]["crosscheck_se"] = 16;
  SoftBitopSpace space(t1->topology, t2->topology);
  BiConnectednessCheck c = bi_soft_connected(space, opt.cap_se, 16);
  const SoftElementSpace& sp = inst.require_space();
  r.lines.push_back(std::string("materialized clopen crosscheck: ") +
                    (c.crosscheck_ran ? (c.crosscheck_agrees ? "agrees" : "DISAGREES")
                                      : "skipped (space too large)"));
  if (!c.connected && c.component) {
    const std::string& tname = c.failing_tau == 1 ? t1->name : t2->name;
    ordered_json w;
    w["kind"] = "nontrivial-clopen";
    w["topology"] = tname;
    w["elements"] = detail::mask_elements_json(inst.universe, sp, *c.component);
    w["verified"] = c.witness_verified;
    detail::add_witness(r, std::move(w),
                        "the induced space of \"" + tname + "\" has the proper clopen set " +
                            detail::mask_elements_text(inst.universe, sp, *c.component));
  }
  detail::finish(r, c.connected ? "holds" : "fails", c.connected ? 0 : 1);
  return r;
}

inline Report run_check_hom(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "hom");
  const NamedMap& named = detail::pick_map(inst, opt);
  Report r = detail::new_report("check hom");
  r.lines.push_back("map: " + named.name);
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  r.json["caps"]["se"] = opt.cap_se;
  if (!detail::soft_group_gate(r, inst)) return r;
  const SoftElementSpace& sp = inst.require_space();

  // The hom criterion is parameterwise, so the table must factor through the
  // parameters: the image choice at t may depend only on the source choice
  // at t.
  const std::size_t pc = inst.parameters.size();
  ParamMaps pm;
  pm.tables.assign(pc, std::vector<std::int32_t>(inst.universe.size(), -1));
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    SoftElement from = sp.element(i);
    SoftElement to = sp.element(named.table(static_cast<std::size_t>(i)));
    for (std::size_t t = 0; t < pc; ++t) {
      std::int32_t& slot = pm.tables[t][from.choices[t]];
      std::int32_t y = static_cast<std::int32_t>(to.choices[t]);
      if (slot == -1) {
        slot = y;
      } else if (slot != y) {
        const std::string& p = inst.parameters.labels()[t];
        ordered_json w;
        w["kind"] = "not-parameterwise";
        w["parameter"] = p;
        w["choice"] = inst.universe.labels()[from.choices[t]];
        w["images"] = ordered_json::array(
            {inst.universe.labels()[slot], inst.universe.labels()[to.choices[t]]});
        detail::add_witness(r, std::move(w),
                            "the image choice at " + p + " is not determined by the source choice " +
                                inst.universe.labels()[from.choices[t]] + " (images " +
                                inst.universe.labels()[slot] + " and " +
                                inst.universe.labels()[to.choices[t]] + ")");
        detail::finish(r, "fails", 1);
        return r;
      }
    }
  }

  SoftGroup sg(inst.require_group(), inst.soft_set);
  SbtgInstance si(sg, t1->topology, t2->topology);
  SbtgHomCheck c = check_sbtg_hom(si, si, pm, opt.cap_se);
  if (!c.hom.shapes_ok) throw shape_error(c.hom.shape_problem);
  if (!c.hom.is_hom) {
    const std::string& p = inst.parameters.labels()[c.hom.hom_param];
    ordered_json w;
    w["kind"] = "not-homomorphism";
    w["parameter"] = p;
    w["x"] = inst.universe.labels()[c.hom.hom_x];
    w["y"] = inst.universe.labels()[c.hom.hom_y];
    const std::string& xl = inst.universe.labels()[c.hom.hom_x];
    const std::string& yl = inst.universe.labels()[c.hom.hom_y];
    detail::add_witness(r, std::move(w),
                        "at " + p + ": phi(" + xl + " * " + yl + ") differs from phi(" + xl +
                            ") * phi(" + yl + ")");
  } else {
    r.lines.push_back("homomorphism: holds parameterwise");
    r.lines.push_back("kernel: " + std::to_string(c.hom.kernel.count()) + " soft elements, " +
                      (c.hom.kernel_is_normal_subgroup ? "normal subgroup" : "NOT a normal subgroup"));
    r.lines.push_back("image: " + std::to_string(c.hom.image.count()) + " soft elements, " +
                      (c.hom.image_is_subgroup ? "subgroup" : "NOT a subgroup"));
    r.json["slices"]["kernel_size"] = c.hom.kernel.count();
    r.json["slices"]["image_size"] = c.hom.image.count();
  }
  auto report_continuity = [&](const SoftContinuityCheck& cc, const std::string& tname) {
    r.lines.push_back("continuity in " + tname + ": " + (cc.holds() ? "holds" : "fails") +
                      (cc.verdicts_agree() ? "" : " (declared members and full topology disagree)"));
    r.json["slices"]["continuity_" + tname] = cc.holds() ? "holds" : "fails";
    if (!cc.holds() && cc.failing_point) {
      ordered_json w;
      w["kind"] = "discontinuity";
      w["topology"] = tname;
      w["point"] = element_tuple_json(inst.universe, sp, *cc.failing_point);
      detail::add_witness(r, std::move(w),
                          "preimage fails to be open around " +
                              element_tuple_text(inst.universe, sp, *cc.failing_point) + " in " +
                              tname);
    }
  };
  if (c.hom.is_hom) {
    report_continuity(c.continuity1, t1->name);
    report_continuity(c.continuity2, t2->name);
  }
  detail::finish(r, c.holds() ? "holds" : "fails", c.holds() ? 0 : 1);
  return r;
}

inline Report run_check(const Instance& inst, const std::string& check, const RunOptions& opt) {
  if (check == "axioms") return run_check_axioms(inst);
  if (check == "soft-group") return run_check_soft_group(inst);
  if (check == "stg") return run_check_stg(inst, opt);
  if (check == "sbtg") return run_check_sbtg(inst, opt);
  if (check == "sbtg-oracle") return run_check_sbtg_oracle(inst, opt);
  if (check == "separation") return run_check_separation(inst, opt);
  if (check == "compactness") return run_check_compactness(inst, opt);
  if (check == "connected") return run_check_connected(inst, opt);
  if (check == "hom") return run_check_hom(inst, opt);
  throw label_error("unknown check \"" + check + "\"");
}

inline Report run_witness_strict_union(const Instance& inst, const RunOptions& opt) {
  Report r = detail::new_report("witness strict-union");
  r.json["caps"]["se"] = opt.cap_se;
  const SoftElementSpace& sp = inst.require_space();

  std::vector<const NamedTopology*> sources;
  if (opt.topologies.empty()) {
    for (const auto& named : inst.topologies) sources.push_back(&named);
  } else {
    for (const auto& name : opt.topologies) sources.push_back(&inst.require_topology(name));
  }
  std::vector<SoftSet> candidates;
  for (const NamedTopology* named : sources) {
    if (named->topology.is_symbolic_discrete()) continue;
    for (const auto& m : named->topology.members()) {
      bool seen = false;
      for (const auto& c : candidates)
        if (c == m) seen = true;
      if (!seen) candidates.push_back(m);
    }
  }
  if (candidates.empty()) throw label_error("no explicit soft sets to search");
  r.lines.push_back("candidates: " + std::to_string(candidates.size()) + " soft sets");

  std::vector<Bitset> masks;
  masks.reserve(candidates.size());
  for (const auto& c : candidates) masks.push_back(sp.member_mask(c));
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      SoftSet u = candidates[i].union_with(candidates[j]);
      Bitset union_mask = sp.member_mask(u);
      Bitset piecewise = masks[i] | masks[j];
      if (union_mask == piecewise) continue;
      Bitset extra = union_mask.minus(piecewise);
      std::size_t e = extra.first_bit();
      SoftElement elem = sp.element(e);
      if (!element_in(elem, u) || element_in(elem, candidates[i]) ||
          element_in(elem, candidates[j]))
        throw theorem_violation("strict-union witness failed re-verification");
      ordered_json w;
      w["kind"] = "strict-union";
      w["first"] = soft_set_json(inst.universe, inst.parameters, candidates[i]);
      w["second"] = soft_set_json(inst.universe, inst.parameters, candidates[j]);
      w["union"] = soft_set_json(inst.universe, inst.parameters, u);
      w["extra_element"] = element_tuple_json(inst.universe, elem);
      w["counts"] = ordered_json::object({{"first", masks[i].count()},
                                          {"second", masks[j].count()},
                                          {"union", union_mask.count()}});
      detail::add_witness(
          r, std::move(w),
          element_tuple_text(inst.universe, elem) + " picks from the union " +
              soft_set_text(inst.universe, inst.parameters, u) + " but from neither " +
              soft_set_text(inst.universe, inst.parameters, candidates[i]) + " nor " +
              soft_set_text(inst.universe, inst.parameters, candidates[j]));
      r.lines.push_back("element counts: " + std::to_string(masks[i].count()) + " and " +
                        std::to_string(masks[j].count()) + " choice functions, union has " +
                        std::to_string(union_mask.count()));
      detail::finish(r, "found", 0);
      return r;
    }
  detail::finish(r, "none-found", 1);
  return r;
}

inline Report run_witness_non_product_open(const Instance& inst, const RunOptions& opt) {
  const NamedTopology& named = detail::pick_single(inst, opt, "non-product-open");
  Report r = detail::new_report("witness non-product-open");
  r.lines.push_back("topology: " + named.name);
  r.json["caps"]["se"] = opt.cap_se;
  r.json["caps"]["exhaustive_se"] = 16;
  const SoftElementSpace& sp = inst.require_space();
  std::optional<Bitset> w = non_product_open_witness(named.topology, opt.cap_se, 16);
  if (!w) {
    detail::finish(r, "none-found", 1);
    return r;
  }
  SoftSet sections = sections_of(sp, *w);
  ordered_json jw;
  jw["kind"] = "non-product-open";
  jw["element_count"] = w->count();
  jw["elements"] = detail::mask_elements_json(inst.universe, sp, *w);
  jw["sections"] = soft_set_json(inst.universe, inst.parameters, sections);
  detail::add_witness(r, std::move(jw),
                      "an induced-open set of " + std::to_string(w->count()) +
                          " soft elements with sections " +
                          soft_set_text(inst.universe, inst.parameters, sections) +
                          " that is the soft-element set of no soft set");
  r.lines.push_back("elements: " + detail::mask_elements_text(inst.universe, sp, *w));
  detail::finish(r, "found", 0);
  return r;
}

inline Report run_witness_separation_gap(const Instance& inst, const RunOptions& opt) {
  auto [t1, t2] = detail::pick_pair(inst, opt, "prop3-converse");
  DisjointnessMode mode = detail::parse_mode(opt.mode);
  Report r = detail::new_report("witness prop3-converse");
  r.lines.push_back("topologies: " + t1->name + ", " + t2->name);
  r.lines.push_back(std::string("mode: ") + to_string(mode));
  r.json["caps"]["se"] = opt.cap_se;
  r.json["caps"]["materialize_se"] = 16;
  const SoftElementSpace& sp = inst.require_space();
  if (sp.size() > 16) {
    r.lines.push_back("space too large to materialize the induced topologies");
    detail::finish(r, "none-found", 1);
    return r;
  }
  SoftBitopSpace space(t1->topology, t2->topology);
  SeparationLevel soft = pairwise_soft_classify(space, mode, opt.cap_se);
  FiniteTopology star1 = InducedSpace(t1->topology, opt.cap_se).materialize();
  FiniteTopology star2 = InducedSpace(t2->topology, opt.cap_se).materialize();
  SeparationLevel induced = pairwise_separation_classify(star1, star2);
  r.lines.push_back(std::string("soft pairwise level: ") + to_string(soft));
  r.lines.push_back(std::string("induced pairwise level: ") + to_string(induced));
  if (static_cast<int>(induced) <= static_cast<int>(soft)) {
    detail::finish(r, "none-found", 1);
    return r;
  }
  PairwiseSeparationCheck c = pairwise_soft_separation(space, induced, mode, opt.cap_se);
  ordered_json w;
  w["kind"] = "separation-gap";
  w["soft_level"] = to_string(soft);
  w["induced_level"] = to_string(induced);
  w["mode"] = to_string(mode);
  std::string line = std::string("the induced bitopology is pairwise ") + to_string(induced) +
                     " but the soft space is only pairwise " + to_string(soft);
  if (c.witness) {
    w["pair"] = ordered_json::array({element_tuple_json(inst.universe, sp, c.witness->first),
                                     element_tuple_json(inst.universe, sp, c.witness->second)});
    line += ", failing at " + element_tuple_text(inst.universe, sp, c.witness->first) + ", " +
            element_tuple_text(inst.universe, sp, c.witness->second);
  }
  detail::add_witness(r, std::move(w), line);
  detail::finish(r, "found", 0);
  return r;
}

inline Report run_witness_noncanonical_gap(const Instance& inst, const RunOptions& opt) {
  const NamedTopology& named = detail::pick_single(inst, opt, "noncanonical-gap");
  Report r = detail::new_report("witness noncanonical-gap");
  r.lines.push_back("topology: " + named.name);
  std::optional<SoftSet> gap = noncanonical_gap_witness(named.topology);
  if (!gap) {
    r.lines.push_back("the topology already contains every product of component opens");
    detail::finish(r, "none-found", 1);
    return r;
  }
  if (named.topology.contains(*gap))
    throw theorem_violation("noncanonical gap witness failed re-verification");
  ordered_json w;
  w["kind"] = "noncanonical-gap";
  w["member"] = soft_set_json(inst.universe, inst.parameters, *gap);
  detail::add_witness(r, std::move(w),
                      soft_set_text(inst.universe, inst.parameters, *gap) +
                          " is in the canonical enlargement but not in \"" + named.name + "\"");
  detail::finish(r, "found", 0);
  return r;
}

inline Report run_witness(const Instance& inst, const std::string& target,
                          const RunOptions& opt) {
  if (target == "strict-union") return run_witness_strict_union(inst, opt);
  if (target == "non-product-open") return run_witness_non_product_open(inst, opt);
  if (target == "prop3-converse") return run_witness_separation_gap(inst, opt);
  if (target == "noncanonical-gap") return run_witness_noncanonical_gap(inst, opt);
  throw label_error("unknown witness target \"" + target + "\"");
}

inline Report run_enumerate(const Instance& inst, const RunOptions& opt) {
  Report r = detail::new_report("enumerate-se");
  r.json["caps"]["se"] = opt.cap_se;
  const SoftElementSpace& sp = inst.require_space();
  r.lines.push_back("count: " + std::to_string(sp.size()));
  ordered_json elements = ordered_json::array();
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    r.lines.push_back(std::to_string(i) + ": " + element_tuple_text(inst.universe, sp, i));
    elements.push_back(element_tuple_json(inst.universe, sp, i));
  }
  r.json["count"] = sp.size();
  r.json["elements"] = std::move(elements);
  detail::finish(r, "enumerated", 0);
  return r;
}

}  // namespace sbtg
