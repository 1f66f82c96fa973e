#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "sbtg/instance.hpp"
#include "sbtg/runner.hpp"

using namespace sbtg;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string fixture(const std::string& name) {
  return std::string(SBTG_FIXTURE_DIR) + "/" + name;
}

const char* const all_fixtures[] = {
    "converse_gap.json",        "d8_example3.json",  "discrete_indiscrete.json",
    "sierpinski_pair.json",     "strict_union.json", "trivial_group.json",
    "z12_sections.json",        "z36_incomparable.json"};

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SBTG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

ordered_json parse_text(const std::string& text) { return ordered_json::parse(text); }

}  // namespace

TEST_CASE("every fixture loads and matches its declared shape") {
  for (const char* name : all_fixtures) REQUIRE_NOTHROW(load_instance(fixture(name)));

  Instance d8 = load_instance(fixture("d8_example3.json"));
  REQUIRE(d8.universe.size() == 8);
  REQUIRE(d8.parameters.size() == 2);
  REQUIRE(d8.require_group().order() == 8);
  REQUIRE(d8.require_group().identity() == 0);
  REQUIRE(d8.topologies.size() == 2);
  REQUIRE(d8.require_topology("tau1").topology.members().size() == 4);
  REQUIRE(d8.require_topology("tau2").topology.is_symbolic_discrete());
  REQUIRE(d8.maps.empty());
  REQUIRE(d8.require_space().size() == 32);
  REQUIRE(d8.find_topology("tau3") == nullptr);
  REQUIRE_THROWS_AS(d8.require_topology("tau3"), label_error);
  REQUIRE_THROWS_AS(d8.require_map("double"), label_error);

  Instance z12 = load_instance(fixture("z12_sections.json"));
  REQUIRE(z12.require_group().order() == 12);
  REQUIRE(z12.require_space().size() == 24);
  REQUIRE(z12.maps.size() == 2);
  REQUIRE(z12.require_map("double").table.source_size == 24);
  REQUIRE(z12.require_map("shift6").table.is_bijection());
  // Ten section bits put the discrete topology just at the member cap.
  REQUIRE_FALSE(z12.require_topology("tau2").topology.is_symbolic_discrete());
  REQUIRE(z12.require_topology("tau2").topology.members().size() == 1024);

  Instance sier = load_instance(fixture("sierpinski_pair.json"));
  REQUIRE_FALSE(sier.group.has_value());
  REQUIRE_THROWS_AS(sier.require_group(), shape_error);
  REQUIRE(sier.require_topology("tau1").topology.members().size() == 9);

  Instance z36 = load_instance(fixture("z36_incomparable.json"));
  REQUIRE(z36.require_space().size() == 36);
  REQUIRE(z36.require_topology("tau1").topology.members().size() == 16);
  REQUIRE(z36.require_topology("tau2").topology.members().size() == 512);

  Instance trivial = load_instance(fixture("trivial_group.json"));
  REQUIRE(trivial.require_space().size() == 1);
  REQUIRE_FALSE(trivial.require_topology("tau1").topology.is_symbolic_discrete());
  REQUIRE(trivial.require_topology("tau1").topology.members().size() == 2);

  REQUIRE_THROWS_AS(load_instance(fixture("z12_sections.json"), 8), cap_error);
  REQUIRE_THROWS_AS(load_instance(fixture("missing.json")), parse_error);
}

TEST_CASE("parse errors carry the offending key or label") {
  auto parse = [](const char* text) { return parse_instance(parse_text(text)); };

  REQUIRE_THROWS_WITH(parse(R"({"universe": ["a"], "params": [], "soft_set": {}})"),
                      ContainsSubstring("unknown key \"params\" in the instance"));
  REQUIRE_THROWS_WITH(parse(R"({"universe": ["a"], "parameters": ["t"]})"),
                      ContainsSubstring("instance is missing \"soft_set\""));
  REQUIRE_THROWS_WITH(
      parse(R"({"universe": ["a"], "parameters": ["t1", "t2"], "soft_set": {"t1": ["a"]}})"),
      ContainsSubstring("soft_set is missing parameter \"t2\""));
  REQUIRE_THROWS_WITH(
      parse(R"({"universe": ["a"], "parameters": ["t1"],
                "soft_set": {"t1": ["a"], "t3": ["a"]}})"),
      ContainsSubstring("soft_set uses undeclared parameter \"t3\""));
  REQUIRE_THROWS_WITH(parse(R"({"universe": ["a", "a"], "parameters": ["t"],
                               "soft_set": {"t": ["a"]}})"),
                      ContainsSubstring("universe"));
  REQUIRE_THROWS_WITH(parse(R"({"universe": ["a"], "parameters": ["t"],
                               "soft_set": {"t": ["b"]}})"),
                      ContainsSubstring("soft_set"));

  REQUIRE_THROWS_WITH(parse(R"({"universe": ["e", "x"],
                               "group": {"table": [["e", "x"]], "identity": "e"},
                               "parameters": ["t"], "soft_set": {"t": ["e"]}})"),
                      ContainsSubstring("group table must have one row per universe element"));
  REQUIRE_THROWS_WITH(parse(R"({"universe": ["e", "x"],
                               "group": {"table": [["e", "x"], ["x", "x"]], "identity": "e"},
                               "parameters": ["t"], "soft_set": {"t": ["e"]}})"),
                      ContainsSubstring("group: not a group"));
  REQUIRE_THROWS_WITH(parse(R"({"universe": ["e", "x"],
                               "group": {"table": [["e", "x"], ["x", "e"]], "identity": "x"},
                               "parameters": ["t"], "soft_set": {"t": ["e"]}})"),
                      ContainsSubstring(
                          "group declares identity \"x\" but the table's identity is \"e\""));

  REQUIRE_THROWS_WITH(parse(R"({"universe": ["a"], "parameters": ["t"],
                               "soft_set": {"t": ["a"]}, "topologies": {"tau1": "open"}})"),
                      ContainsSubstring("unknown shorthand \"open\""));
}

TEST_CASE("topology members are checked against the axioms at load time") {
  // F1 and ({r, r3} x full rotations) intersect to a soft set the family lacks.
  ordered_json j = parse_text(R"({
    "universe": ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"],
    "parameters": ["t1", "t2"],
    "soft_set": {"t1": ["e", "r", "r2", "r3"],
                 "t2": ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"]},
    "topologies": {"tau1": [
      {"t1": [], "t2": []},
      {"t1": ["e", "r2"], "t2": ["e", "r", "r2", "r3"]},
      {"t1": ["r", "r3"], "t2": ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"]},
      {"t1": ["e", "r", "r2", "r3"], "t2": ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"]}
    ]}})");
  REQUIRE_THROWS_WITH(parse_instance(j),
                      ContainsSubstring("topology \"tau1\": intersection of members"));
  REQUIRE_THROWS_WITH(parse_instance(j),
                      ContainsSubstring("is missing: {t1: {}; t2: {e, r, r2, r3}}"));
}

TEST_CASE("map tables are validated entry by entry") {
  auto with_map = [](const char* entries) {
    return parse_text(std::string(R"({"universe": ["0", "1"], "parameters": ["t1", "t2"],
                                      "soft_set": {"t1": ["0", "1"], "t2": ["0", "1"]},
                                      "maps": {"m": )") +
                      entries + "}}");
  };
  REQUIRE_NOTHROW(parse_instance(with_map(
      R"([[["0","0"],["0","0"]], [["0","1"],["0","0"]],
          [["1","0"],["0","0"]], [["1","1"],["0","0"]]])")));

  REQUIRE_THROWS_WITH(parse_instance(with_map(R"([[["0","0"]]])")),
                      ContainsSubstring("map \"m\" entry must be a [from, to] pair of tuples"));
  REQUIRE_THROWS_WITH(parse_instance(with_map(R"([[["0"],["0","0"]]])")),
                      ContainsSubstring("map \"m\" source tuple must list one label per parameter"));
  REQUIRE_THROWS_WITH(
      parse_instance(with_map(
          R"([[["0","0"],["0","0"]], [["0","0"],["1","1"]]])")),
      ContainsSubstring("map \"m\" assigns (0, 0) twice"));
  REQUIRE_THROWS_WITH(parse_instance(with_map(
                          R"([[["0","0"],["0","0"]], [["0","1"],["0","0"]],
                              [["1","0"],["0","0"]]])")),
                      ContainsSubstring("map \"m\" is missing soft element (1, 1)"));

  ordered_json bad_label = parse_text(R"({
    "universe": ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"],
    "parameters": ["t1", "t2"],
    "soft_set": {"t1": ["e", "r2"], "t2": ["e", "r2"]},
    "maps": {"m": [[["s", "e"], ["e", "e"]]]}})");
  REQUIRE_THROWS_WITH(parse_instance(bad_label),
                      ContainsSubstring(
                          "map \"m\" source tuple: \"s\" is not in the section at parameter \"t1\""));
}

TEST_CASE("instances with an empty section have no soft elements") {
  ordered_json j = parse_text(R"({"universe": ["0", "1"], "parameters": ["t1", "t2"],
                                  "soft_set": {"t1": [], "t2": ["0"]}})");
  Instance inst = parse_instance(j);
  REQUIRE_FALSE(inst.space.has_value());
  REQUIRE_THROWS_AS(inst.require_space(), shape_error);

  ordered_json with_map = parse_text(R"({"universe": ["0"], "parameters": ["t1"],
                                         "soft_set": {"t1": []},
                                         "maps": {"m": []}})");
  REQUIRE_THROWS_WITH(parse_instance(with_map),
                      ContainsSubstring("map \"m\" cannot be defined"));
}

TEST_CASE("serialization round-trips every fixture") {
  for (const char* name : all_fixtures) {
    Instance inst = load_instance(fixture(name));
    ordered_json s1 = serialize_instance(inst);
    Instance again = parse_instance(s1);
    ordered_json s2 = serialize_instance(again);
    REQUIRE(s1.dump() == s2.dump());
  }

  // Symbolic discrete topologies keep the shorthand through the round trip.
  Instance d8 = load_instance(fixture("d8_example3.json"));
  ordered_json s = serialize_instance(d8);
  REQUIRE(s["topologies"]["tau2"] == "discrete");
  REQUIRE(s["group"]["identity"] == "e");
  REQUIRE(s["soft_set"]["t1"] == ordered_json::array({"e", "r", "r2", "r3"}));

  Instance z12 = load_instance(fixture("z12_sections.json"));
  ordered_json sz = serialize_instance(z12);
  REQUIRE(sz["maps"]["double"].size() == 24);
  REQUIRE(sz["maps"]["double"][0] ==
          ordered_json::array({ordered_json::array({"0", "0"}), ordered_json::array({"0", "0"})}));
}

TEST_CASE("cli: group and axiom checks") {
  auto r = run_cli("check " + fixture("d8_example3.json") + " axioms --no-timing");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "command: check axioms\n"
          "group table: holds (order 8)\n"
          "topology \"tau1\": holds (4 members)\n"
          "topology \"tau2\": holds (soft discrete, kept symbolic)\n"
          "verdict: holds\n");

  auto z36 = run_cli("check " + fixture("z36_incomparable.json") + " axioms --no-timing");
  REQUIRE(z36.exit_code == 0);
  REQUIRE_THAT(z36.out, ContainsSubstring("group table: holds (order 36)"));
  REQUIRE_THAT(z36.out, ContainsSubstring("topology \"tau1\": holds (16 members)"));
  REQUIRE_THAT(z36.out, ContainsSubstring("topology \"tau2\": holds (512 members)"));

  auto sg = run_cli("check " + fixture("d8_example3.json") + " soft-group --no-timing");
  REQUIRE(sg.exit_code == 0);
  REQUIRE(sg.out ==
          "command: check soft-group\n"
          "section at t1: subgroup\n"
          "section at t2: subgroup\n"
          "verdict: holds\n");

  auto stg = run_cli("check " + fixture("z36_incomparable.json") +
                     " stg --topologies tau2 --no-timing");
  REQUIRE(stg.exit_code == 0);
  REQUIRE_THAT(stg.out, ContainsSubstring("slice at t1: topological group"));
}

TEST_CASE("cli: sbtg criterion and the materialized oracle") {
  auto r = run_cli("check " + fixture("d8_example3.json") + " sbtg --no-timing");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "command: check sbtg\n"
          "topologies: tau1, tau2\n"
          "slice at t1: tau1 holds, tau2 holds\n"
          "slice at t2: tau1 holds, tau2 holds\n"
          "verdict: holds\n");

  auto oracle = run_cli("check " + fixture("trivial_group.json") + " sbtg-oracle --no-timing");
  REQUIRE(oracle.exit_code == 0);
  REQUIRE(oracle.out ==
          "command: check sbtg-oracle\n"
          "topologies: tau1, tau2\n"
          "materialized division continuity: first holds, second holds\n"
          "componentwise criterion: holds\n"
          "criteria agree: yes\n"
          "verdict: holds\n");
}

TEST_CASE("cli: separation reports slices, modes, and failing pairs") {
  auto r = run_cli("check " + fixture("d8_example3.json") +
                   " separation --level 2 --topologies tau1,tau1 --mode soft-element --no-timing");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.out ==
          "command: check separation\n"
          "topologies: tau1, tau1\n"
          "level: T2\n"
          "mode: soft-element\n"
          "slice at t1: fails\n"
          "slice at t2: fails\n"
          "other mode (sectionwise): fails\n"
          "witness: T2 fails at the pair (e, e), (e, r)\n"
          "verdict: fails\n");

  // Soft-discrete pair: only the soft-element reading of disjointness holds.
  auto dd = run_cli("check " + fixture("discrete_indiscrete.json") +
                    " separation --level 2 --topologies tau1,tau1 --no-timing");
  REQUIRE(dd.exit_code == 1);
  REQUIRE_THAT(dd.out, ContainsSubstring("mode: sectionwise"));
  REQUIRE_THAT(dd.out, ContainsSubstring("other mode (soft-element): holds"));
  REQUIRE_THAT(dd.out, ContainsSubstring("witness: T2 fails at the pair (0, 0), (0, 1)"));

  auto se = run_cli("check " + fixture("discrete_indiscrete.json") +
                    " separation --level 2 --topologies tau1,tau1 --mode soft-element --no-timing");
  REQUIRE(se.exit_code == 0);
  REQUIRE_THAT(se.out, ContainsSubstring("other mode (sectionwise): fails"));
  REQUIRE_THAT(se.out, ContainsSubstring("verdict: holds"));
}

TEST_CASE("cli: compactness transfer and connectedness") {
  auto r = run_cli("check " + fixture("sierpinski_pair.json") + " compactness --no-timing");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "command: check compactness\n"
          "topologies: tau1, tau2\n"
          "lifted slice covers: 8 cylinders, members verified, coverage verified\n"
          "restricted soft covers: 4, slice coverage verified\n"
          "verdict: holds\n");

  auto nc = run_cli("check " + fixture("converse_gap.json") + " compactness --no-timing");
  REQUIRE(nc.exit_code == 1);
  REQUIRE_THAT(nc.out, ContainsSubstring("cover lifting needs canonical topologies"));
  REQUIRE_THAT(nc.out, ContainsSubstring("witness: topology \"tau1\" is not canonical, "
                                         "e.g. it misses {t1: {1}; t2: {0, 1}}"));

  auto conn = run_cli("check " + fixture("discrete_indiscrete.json") + " connected --no-timing");
  REQUIRE(conn.exit_code == 1);
  REQUIRE(conn.out ==
          "command: check connected\n"
          "topologies: tau1, tau2\n"
          "materialized clopen crosscheck: agrees\n"
          "witness: the induced space of \"tau1\" has the proper clopen set {(0, 0)}\n"
          "verdict: fails\n");

  auto ind = run_cli("check " + fixture("discrete_indiscrete.json") +
                     " connected --topologies tau2,tau2 --no-timing");
  REQUIRE(ind.exit_code == 0);
  REQUIRE_THAT(ind.out, ContainsSubstring("materialized clopen crosscheck: agrees"));
  REQUIRE_THAT(ind.out, ContainsSubstring("verdict: holds"));
}

TEST_CASE("cli: homomorphism checks pick declared maps by name") {
  auto good = run_cli("check " + fixture("z12_sections.json") + " hom --map double --no-timing");
  REQUIRE(good.exit_code == 0);
  REQUIRE(good.out ==
          "command: check hom\n"
          "map: double\n"
          "topologies: tau1, tau2\n"
          "homomorphism: holds parameterwise\n"
          "kernel: 4 soft elements, normal subgroup\n"
          "image: 6 soft elements, subgroup\n"
          "continuity in tau1: holds\n"
          "continuity in tau2: holds\n"
          "verdict: holds\n");

  auto bad = run_cli("check " + fixture("z12_sections.json") + " hom --map shift6 --no-timing");
  REQUIRE(bad.exit_code == 1);
  REQUIRE_THAT(bad.out,
               ContainsSubstring("witness: at t1: phi(0 * 0) differs from phi(0) * phi(0)"));
  REQUIRE_THAT(bad.out, ContainsSubstring("verdict: fails"));

  auto nameless = run_cli("check " + fixture("z12_sections.json") + " hom --no-timing");
  REQUIRE(nameless.exit_code == 2);
  REQUIRE_THAT(nameless.out, ContainsSubstring("several maps are declared, pick one with --map"));
}

TEST_CASE("cli: witness searches") {
  auto su = run_cli("witness " + fixture("strict_union.json") + " strict-union --no-timing");
  REQUIRE(su.exit_code == 0);
  REQUIRE(su.out ==
          "command: witness strict-union\n"
          "candidates: 5 soft sets\n"
          "witness: (1, 1) picks from the union {t1: {0, 1}; t2: {0, 1}} but from neither "
          "{t1: {0}; t2: {0, 1}} nor {t1: {0, 1}; t2: {0}}\n"
          "element counts: 2 and 2 choice functions, union has 4\n"
          "verdict: found\n");

  auto npo = run_cli("witness " + fixture("d8_example3.json") +
                     " non-product-open --topologies tau1 --no-timing");
  REQUIRE(npo.exit_code == 0);
  REQUIRE_THAT(npo.out,
               ContainsSubstring("witness: an induced-open set of 16 soft elements with sections "
                                 "{t1: {e, r, r2, r3}; t2: {e, r, r2, r3, s, sr, sr2, sr3}} "
                                 "that is the soft-element set of no soft set"));
  REQUIRE_THAT(npo.out, ContainsSubstring(
                            "elements: {(e, e), (e, r), (e, r2), (e, r3), (r, s), (r, sr), "
                            "(r, sr2), (r, sr3), (r2, e), (r2, r), (r2, r2), (r2, r3), (r3, s), "
                            "(r3, sr), (r3, sr2), (r3, sr3)}"));

  auto gap = run_cli("witness " + fixture("d8_example3.json") +
                     " noncanonical-gap --topologies tau1 --no-timing");
  REQUIRE(gap.exit_code == 0);
  REQUIRE_THAT(gap.out,
               ContainsSubstring("witness: {t1: {e, r2}; t2: {s, sr, sr2, sr3}} is in the "
                                 "canonical enlargement but not in \"tau1\""));

  auto conv = run_cli("witness " + fixture("converse_gap.json") +
                      " prop3-converse --mode soft-element --no-timing");
  REQUIRE(conv.exit_code == 0);
  REQUIRE(conv.out ==
          "command: witness prop3-converse\n"
          "topologies: tau1, tau2\n"
          "mode: soft-element\n"
          "soft pairwise level: none\n"
          "induced pairwise level: T0\n"
          "witness: the induced bitopology is pairwise T0 but the soft space is only pairwise "
          "none, failing at (0, 0), (0, 1)\n"
          "verdict: found\n");

  auto too_big = run_cli("witness " + fixture("d8_example3.json") + " prop3-converse --no-timing");
  REQUIRE(too_big.exit_code == 1);
  REQUIRE_THAT(too_big.out,
               ContainsSubstring("space too large to materialize the induced topologies"));
  REQUIRE_THAT(too_big.out, ContainsSubstring("verdict: none-found"));
}

TEST_CASE("cli: soft element enumeration is exact and ordered") {
  auto r = run_cli("enumerate-se " + fixture("sierpinski_pair.json") + " --no-timing");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "command: enumerate-se\n"
          "count: 4\n"
          "0: (0, 0)\n"
          "1: (0, 1)\n"
          "2: (1, 0)\n"
          "3: (1, 1)\n"
          "verdict: enumerated\n");
}

TEST_CASE("cli: json output is structured and byte deterministic") {
  const std::string cmd =
      "check " + fixture("d8_example3.json") + " sbtg --format json --no-timing";
  auto first = run_cli(cmd);
  auto second = run_cli(cmd);
  REQUIRE(first.exit_code == 0);
  REQUIRE(first.out == second.out);

  ordered_json j = parse_text(first.out);
  REQUIRE(j["command"] == "check sbtg");
  REQUIRE(j["verdict"] == "holds");
  REQUIRE(j["witnesses"] == ordered_json::array());
  REQUIRE(j["slices"]["t1"]["tau1"] == "topological group");
  REQUIRE(j["caps"]["se"] == 4096);
  REQUIRE_FALSE(j.contains("elapsed_ms"));

  auto sep = run_cli("check " + fixture("d8_example3.json") +
                     " separation --level 0 --topologies tau1,tau1 --format json --no-timing");
  REQUIRE(sep.exit_code == 1);
  ordered_json js = parse_text(sep.out);
  REQUIRE(js["verdict"] == "fails");
  REQUIRE(js["witnesses"].size() == 1);
  REQUIRE(js["witnesses"][0]["kind"] == "unseparated-pair");
  REQUIRE(js["witnesses"][0]["first"] == ordered_json::array({"e", "e"}));
  REQUIRE(js["witnesses"][0]["second"] == ordered_json::array({"e", "r"}));

  auto timed = run_cli("check " + fixture("d8_example3.json") + " sbtg --format json");
  REQUIRE(parse_text(timed.out).contains("elapsed_ms"));
}

TEST_CASE("cli: every error path exits with code 2") {
  auto missing = run_cli("check /nonexistent/no.json sbtg --no-timing");
  REQUIRE(missing.exit_code == 2);
  REQUIRE_THAT(missing.out, ContainsSubstring("error: cannot open instance file"));

  auto unknown = run_cli("check " + fixture("d8_example3.json") + " frobnicate --no-timing");
  REQUIRE(unknown.exit_code == 2);
  REQUIRE_THAT(unknown.out, ContainsSubstring("error: unknown check \"frobnicate\""));

  auto badname = run_cli("check " + fixture("d8_example3.json") +
                         " separation --topologies tau9,tau1 --no-timing");
  REQUIRE(badname.exit_code == 2);
  REQUIRE_THAT(badname.out, ContainsSubstring("error: no topology named \"tau9\""));

  auto nogroup = run_cli("check " + fixture("sierpinski_pair.json") + " soft-group --no-timing");
  REQUIRE(nogroup.exit_code == 2);
  REQUIRE_THAT(nogroup.out, ContainsSubstring("error: instance declares no group"));

  auto capped = run_cli("enumerate-se " + fixture("z36_incomparable.json") +
                        " --cap-se 8 --no-timing");
  REQUIRE(capped.exit_code == 2);
  REQUIRE_THAT(capped.out, ContainsSubstring("error: soft-element space exceeds cap 8"));

  auto nosub = run_cli("");
  REQUIRE(nosub.exit_code == 2);
  REQUIRE_THAT(nosub.out, ContainsSubstring("A subcommand is required"));

  auto help = run_cli("--help");
  REQUIRE(help.exit_code == 0);
  REQUIRE_THAT(help.out, ContainsSubstring("check"));
  REQUIRE_THAT(help.out, ContainsSubstring("witness"));
  REQUIRE_THAT(help.out, ContainsSubstring("enumerate-se"));
}
