// plasmon-dimer: run catalog scenarios, list them, or run the acceptance checks.
//
// Exit status: 0 success, 1 physics or configuration error, 2 I/O error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pdimer/acceptance.hpp"
#include "pdimer/config.hpp"
#include "pdimer/csv.hpp"
#include "pdimer/error.hpp"
#include "pdimer/scenarios.hpp"

namespace {

using namespace pdimer;

struct RunArgs {
  std::string scenario;
  std::string config;
  std::string out;
  bool verify = false;
  std::optional<double> dt;
  bool raw = false;
};

int cmd_run(const RunArgs& a) {
  auto cfg = find_scenario(a.scenario);
  if (!cfg) throw Error(ErrorKind::ConfigError, "unknown scenario '" + a.scenario + "' (see `plasmon-dimer list`)");
  if (!a.config.empty()) *cfg = load_config_file(a.config, *cfg);
  if (a.dt) cfg->dt = *a.dt;
  cfg->verify = a.verify;
  cfg->raw_elements = a.raw;
  cfg->validate();

  const auto point = resolve_point(*cfg, cfg->sweep.values().front());
  if (point.collective.below_validity_range) {
    std::cerr << "warning: separation " << cfg->separation
              << " is below 1/4 plasmon wavelength; the plasmon-only coupling model is unreliable there\n";
  }

  const auto result = run_scenario(*cfg);
  if (a.out.empty()) {
    write_csv(std::cout, result);
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::IoError, "write to stdout failed");
  } else {
    emit_csv(result, a.out);
    std::cerr << "wrote " << result.row_count() << " rows to " << a.out << '\n';
  }
  return 0;
}

int cmd_list() {
  for (const auto& c : scenario_catalog()) {
    std::cout << c.name << "\t" << c.description;
    if (c.sweep.axis != SweepAxis::None) {
      std::cout << " [" << sweep_column(c.sweep.axis) << " " << c.sweep.min << ".." << c.sweep.max << ", "
                << c.sweep.points << " points]";
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_check() {
  AcceptanceOptions opts;
  opts.on_result = [](const CriterionResult& r) {
    print_criterion(std::cout, r);
    std::cout.flush();
  };
  const auto results = run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (failed ? "FAILED " : "all passed ") << "(" << results.size() - failed << "/" << results.size()
            << ")\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plasmon-coupled emitter dimer: correlation dynamics"};
  app.require_subcommand(1);

  RunArgs run;
  double dt = 0.0;
  auto* run_cmd = app.add_subcommand("run", "run a named scenario and write CSV");
  run_cmd->add_option("scenario", run.scenario, "scenario name")->required();
  run_cmd->add_option("--config", run.config, "JSON overlay applied to the scenario");
  run_cmd->add_option("--out", run.out, "CSV destination (default: stdout)");
  run_cmd->add_flag("--verify", run.verify, "cross-check closed forms against the integrator");
  auto* dt_opt = run_cmd->add_option("--dt", dt, "maximum RK4 step");
  run_cmd->add_flag("--raw-elements", run.raw, "append density-matrix element columns");

  auto* list_cmd = app.add_subcommand("list", "print the scenario catalog");
  auto* check_cmd = app.add_subcommand("check", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) {
      if (*dt_opt) run.dt = dt;
      return cmd_run(run);
    }
    if (*list_cmd) return cmd_list();
    if (*check_cmd) return cmd_check();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_io() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
