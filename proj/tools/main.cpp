#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace tracefree::cli;

  CLI::App app{"Trace-free slices, F2 varieties and 2-fold branched covers of knot diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tracefree 0.1.0");

  RunConfig config;
  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--tol", config.tolerance, "Residual and clustering tolerance")
        ->envname("TRACEFREE_TOL")
        ->capture_default_str();
    cmd->add_option("--precision", config.precision_bits, "Root refinement precision in bits")
        ->envname("TRACEFREE_PRECISION")
        ->capture_default_str();
    cmd->add_option("--gb-budget", config.gb_budget, "Maximum number of S-pairs per Groebner basis")
        ->envname("TRACEFREE_GB_BUDGET")
        ->capture_default_str();
    cmd->add_option("--format", config.format, "Output format")
        ->envname("TRACEFREE_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Seed for randomized steps")->envname("TRACEFREE_SEED")->capture_default_str();
  };
  auto add_solver = [&config](CLI::App* cmd) {
    cmd->add_option("--pivot", config.pivot, "Lifting pivot triple, e.g. 123")->envname("TRACEFREE_PIVOT");
    cmd->add_option("--param", config.parameter, "Eliminant variable, e.g. x13")->envname("TRACEFREE_PARAM");
  };

  std::string path;
  std::string which = "f2";

  auto* ideals = app.add_subcommand("ideals", "Print a relation family of a diagram");
  ideals->add_option("file", path, "Diagram file")->required();
  ideals->add_option("--which", which, "f2, f3, h, r or kch")
      ->check(CLI::IsMember({"f2", "f3", "h", "r", "kch"}))
      ->capture_default_str();
  add_common(ideals);

  auto* f2 = app.add_subcommand("f2", "Solve the fundamental relations");
  auto* s0 = app.add_subcommand("s0", "Compute the trace-free slice");
  auto* ghosts = app.add_subcommand("ghosts", "List F2 points that do not lift");
  for (auto* cmd : {f2, s0, ghosts}) {
    cmd->add_option("file", path, "Diagram file")->required();
    add_common(cmd);
    add_solver(cmd);
  }

  auto* cover = app.add_subcommand("cover", "Presentation and homology of the 2-fold branched cover");
  cover->add_option("file", path, "Diagram file")->required();
  cover->add_option("--drop-relator", config.drop_relator, "1-based Wirtinger relator to leave out")
      ->envname("TRACEFREE_DROP_RELATOR");
  add_common(cover);

  auto* census = app.add_subcommand("census", "Summarize every diagram file in a directory");
  census->add_option("dir", path, "Directory of diagram files")->required();
  census->add_flag("--timing", config.timing, "Include per-file runtime");
  add_common(census);
  add_solver(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  CommandResult result;
  if (ideals->parsed()) {
    result = cmd_ideals(path, which, config);
  } else if (f2->parsed()) {
    result = cmd_f2(path, config);
  } else if (s0->parsed()) {
    result = cmd_s0(path, config);
  } else if (ghosts->parsed()) {
    result = cmd_ghosts(path, config);
  } else if (cover->parsed()) {
    result = cmd_cover(path, config);
  } else {
    result = cmd_census(path, config);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
