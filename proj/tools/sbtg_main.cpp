// Command line front end: loads an instance file and runs checks, witness
// searches, or the soft-element enumeration, as text or JSON.
//
// Exit codes: 0 when the property holds or a witness is found, 1 when it
// fails (or no witness exists within caps), 2 on any error.

#include <chrono>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbtg/runner.hpp"

namespace {

struct CliState {
  std::string file;
  std::string check;
  std::string target;
  std::string format = "text";
  bool no_timing = false;
  sbtg::RunOptions run;
};

void add_common_flags(CLI::App* cmd, CliState& st, bool with_check_flags) {
  cmd->add_option("--format", st.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cap-se", st.run.cap_se, "Largest soft-element space to enumerate");
  cmd->add_flag("--no-timing", st.no_timing, "Omit elapsed time from the report");
  if (!with_check_flags) return;
  cmd->add_option("--topologies", st.run.topologies,
                  "Topology names to use (comma separated)")
      ->delimiter(',');
  cmd->add_option("--level", st.run.level, "Separation level")->check(CLI::Range(0, 2));
  cmd->add_option("--mode", st.run.mode, "Disjointness mode")
      ->check(CLI::IsMember({"sectionwise", "soft-element"}));
  cmd->add_option("--map", st.run.map, "Name of a declared map");
}

void emit(const sbtg::Report& report, const CliState& st, long long elapsed_ms) {
  if (st.format == "json") {
    sbtg::ordered_json j = report.json;
    if (!st.no_timing) j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << report.text();
  if (!st.no_timing) std::cout << "elapsed: " << elapsed_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite soft set and soft bitopological group checker"};
  app.require_subcommand(1);
  CliState st;

  CLI::App* check = app.add_subcommand("check", "Run a named check on an instance file");
  check->add_option("file", st.file, "Instance file")->required();
  check->add_option("check", st.check, "One of: axioms, soft-group, stg, sbtg, sbtg-oracle, "
                    "separation, compactness, connected, hom")
      ->required();
  add_common_flags(check, st, true);

  CLI::App* witness = app.add_subcommand("witness", "Search for a named witness");
  witness->add_option("file", st.file, "Instance file")->required();
  witness->add_option("target", st.target, "One of: strict-union, non-product-open, "
                      "prop3-converse, noncanonical-gap")
      ->required();
  add_common_flags(witness, st, true);

  CLI::App* enumerate = app.add_subcommand("enumerate-se", "List every soft element");
  enumerate->add_option("file", st.file, "Instance file")->required();
  add_common_flags(enumerate, st, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    sbtg::Instance inst = sbtg::load_instance(st.file, st.run.cap_se);
    sbtg::Report report = check->parsed()     ? sbtg::run_check(inst, st.check, st.run)
                          : witness->parsed() ? sbtg::run_witness(inst, st.target, st.run)
                                              : sbtg::run_enumerate(inst, st.run);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    emit(report, st, elapsed);
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
