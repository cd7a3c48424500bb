#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cvnet/entanglement.hpp"
#include "cvnet/netfile.hpp"
#include "cvnet/sweep.hpp"
#include "cvnet/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw cvnet::IOFailure("cannot open '" + path + "'");
  }
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out;
}

int cmd_run(const std::string& file) {
  const auto netfile = cvnet::parse_netfile(read_file(file));
  const auto spec = netfile.build();
  const auto run = cvnet::run_network(spec);
  for (const auto& r : cvnet::evaluate_reports(run, spec)) {
    std::printf("%s %s:%s = %s\n", cvnet::metric_name(r.request.metric),
                join_labels(r.request.party_a).c_str(),
                join_labels(r.request.party_b).c_str(),
                cvnet::format_cell(r.value).c_str());
  }
  return kExitSuccess;
}

int cmd_sweep(const std::string& file, const std::string& var, double from,
              double to, int steps, const std::string& out_path) {
  const auto netfile = cvnet::parse_netfile(read_file(file));
  const auto result = cvnet::sweep(netfile, var, from, to, steps);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw cvnet::IOFailure("cannot open '" + out_path + "' for writing");
  }
  out << cvnet::to_csv(result);
  if (!out) {
    throw cvnet::IOFailure("write failed for '" + out_path + "'");
  }
  return kExitSuccess;
}

int cmd_figure(const std::string& name, const std::string& out_dir) {
  for (const auto& path : cvnet::write_figure(name, out_dir)) {
    std::printf("%s\n", path.c_str());
  }
  return kExitSuccess;
}

int cmd_verify(std::uint64_t seed, int cases, const std::string& check,
               bool as_json) {
  cvnet::VerifyConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  const auto outcomes = cvnet::run_all_checks(cfg, check);
  bool all_pass = true;
  if (as_json) {
    std::printf("%s\n", cvnet::outcomes_to_json(outcomes).c_str());
    for (const auto& o : outcomes) all_pass = all_pass && o.pass;
  } else {
    for (const auto& o : outcomes) {
      all_pass = all_pass && o.pass;
      std::printf("[%s] %-28s cases=%d max_dev=%.3e tol=%.1e%s%s\n",
                  o.pass ? "PASS" : "FAIL", o.name.c_str(), o.cases_run,
                  o.max_deviation, o.tolerance, o.notes.empty() ? "" : "  -- ",
                  o.notes.c_str());
      if (!o.pass && !o.counterexample.empty()) {
        std::printf("       counterexample: %s\n", o.counterexample.c_str());
      }
    }
  }
  return all_pass ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gaussian entanglement distribution in beam-splitter networks"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "evaluate a netfile's reports");
  std::string run_file;
  run_cmd->add_option("file", run_file, "netfile to evaluate")->required();

  auto* sweep_cmd =
      app.add_subcommand("sweep", "sweep one $variable over a uniform grid");
  std::string sweep_file, sweep_var, sweep_out;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0;
  sweep_cmd->add_option("file", sweep_file, "netfile with a placeholder")
      ->required();
  sweep_cmd->add_option("--var", sweep_var, "placeholder name")->required();
  sweep_cmd->add_option("--from", sweep_from, "grid start")->required();
  sweep_cmd->add_option("--to", sweep_to, "grid end")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "grid points")->required();
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

  auto* figure_cmd =
      app.add_subcommand("figure", "write the built-in figure CSVs");
  std::string figure_name, figure_dir = ".";
  figure_cmd->add_option("name", figure_name, "fig3 or fig6")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig6"}));
  figure_cmd->add_option("--out-dir", figure_dir, "output directory");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the randomized oracle suite");
  std::uint64_t verify_seed = 42;
  int verify_cases = 200;
  std::string verify_check;
  bool verify_json = false;
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_option("--cases", verify_cases, "cases per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--check", verify_check,
                         "run one check group only (block_theorems, "
                         "distribution, tracenorm, monogamy, phi2, ancillas)");
  verify_cmd->add_flag("--json", verify_json,
                       "machine-readable outcome report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (*run_cmd) return cmd_run(run_file);
    if (*sweep_cmd) {
      return cmd_sweep(sweep_file, sweep_var, sweep_from, sweep_to,
                       sweep_steps, sweep_out);
    }
    if (*figure_cmd) return cmd_figure(figure_name, figure_dir);
    if (*verify_cmd) {
      return cmd_verify(verify_seed, verify_cases, verify_check, verify_json);
    }
  } catch (const cvnet::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsageError;
  }
  return kExitUsageError;
}
