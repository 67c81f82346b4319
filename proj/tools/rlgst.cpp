// Copyright 2026 The rlgst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: gen-circuits, simulate, estimate, predict,
// gauge-check, bootstrap, run.

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <optional>

#include "rlgst/pipeline.hpp"

namespace {

using rlgst::Json;

constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitFile = 4;

struct CommonArgs {
  std::string config_path;
  std::string circuits_path;
  std::string counts_path;
  std::string report_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<long long> shots;
  std::optional<double> sv_tol;
  std::optional<int> bootstrap_b;
  std::string kind = "tomographic";
  std::string dump_design_path;
};

std::string now_utc() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

rlgst::ExperimentConfig load_config(const CommonArgs& args) {
  rlgst::ExperimentConfig cfg = rlgst::read_config(args.config_path);
  if (args.shots) cfg.shots = *args.shots;
  if (args.sv_tol) cfg.sv_tol_rel = *args.sv_tol;
  if (args.bootstrap_b) cfg.bootstrap_samples = *args.bootstrap_b;
  return cfg;
}

int cmd_gen_circuits(const CommonArgs& args) {
  rlgst::ExperimentConfig cfg = load_config(args);
  const rlgst::GateSet gs = rlgst::build_gateset(cfg.gate_set);
  std::vector<rlgst::Circuit> circuits;
  if (args.kind == "test") {
    if (!cfg.test_circuits) throw rlgst::ValidationError("config has no test_circuits block");
    if (args.seed) cfg.test_circuits->seed = *args.seed;
    circuits = rlgst::make_test_circuits(gs, *cfg.test_circuits);
  } else {
    if (!cfg.circuits) throw rlgst::ValidationError("config has no circuits block");
    if (args.seed) cfg.circuits->seed = *args.seed;
    circuits = rlgst::make_tomographic_circuits(gs, *cfg.circuits);
  }
  rlgst::write_circuits(args.out_path, circuits);
  std::cout << "wrote " << circuits.size() << " circuits to " << args.out_path << "\n";
  return 0;
}

int cmd_simulate(const CommonArgs& args) {
  rlgst::ExperimentConfig cfg = load_config(args);
  if (!cfg.true_noise) throw rlgst::ValidationError("simulate needs a true_noise block");
  if (args.seed) cfg.sampling_seed = *args.seed;
  if (!cfg.sampling_seed) throw rlgst::ValidationError("simulate needs a sampling seed");

  const rlgst::GateSet gs = rlgst::build_gateset(cfg.gate_set);
  const rlgst::TruthModel truth = rlgst::build_truth(gs, *cfg.true_noise);
  const auto circuits = rlgst::read_circuits(args.circuits_path);
  const auto table = rlgst::simulate_counts(truth, circuits, cfg.shots, *cfg.sampling_seed);
  rlgst::write_counts(args.out_path, table, gs.n_qubits(),
                      rlgst::CountsMeta{cfg.shots, *cfg.sampling_seed, now_utc()});
  std::cout << "simulated " << circuits.size() << " circuits (true AGsI " << truth.agsi_true
            << ", shots " << cfg.shots << ") -> " << args.out_path << "\n";
  return 0;
}

int cmd_estimate(const CommonArgs& args) {
  const rlgst::ExperimentConfig cfg = load_config(args);
  const auto circuits = rlgst::read_circuits(args.circuits_path);
  std::string counts_path = args.counts_path;
  if (counts_path.empty()) {
    if (!cfg.counts_path)
      throw rlgst::ValidationError("estimate needs --counts or a counts_path in the config");
    counts_path = *cfg.counts_path;
  }
  const auto table = rlgst::read_counts(counts_path);
  const rlgst::EstimateOutput out = rlgst::run_estimate(cfg, circuits, table);
  rlgst::write_json(args.out_path, out.report);
  if (!args.dump_design_path.empty())
    rlgst::write_json(args.dump_design_path, rlgst::design_to_json(out.design));
  std::cout << "rank " << out.estimate.rank << ", null dim " << out.estimate.null_dim()
            << ", report -> " << args.out_path << "\n";
  return 0;
}

int cmd_predict(const CommonArgs& args) {
  const rlgst::ExperimentConfig cfg = load_config(args);
  const Json report = rlgst::read_json(args.report_path);
  const auto tests = rlgst::read_circuits(args.circuits_path);
  std::optional<rlgst::ProbabilityTable> reference;
  if (!args.counts_path.empty()) reference = rlgst::read_counts(args.counts_path);
  const Json out =
      rlgst::run_predict(cfg, report, tests, reference ? &*reference : nullptr);
  rlgst::write_json(args.out_path, out);
  std::cout << "predicted " << tests.size() << " circuits -> " << args.out_path << "\n";
  return 0;
}

int cmd_gauge_check(const CommonArgs& args) {
  const Json report = rlgst::read_json(args.report_path);
  if (!report.contains("gauge"))
    throw rlgst::FileFormatError("report has no gauge diagnostics");
  const Json& gauge = report.at("gauge");
  Json out{{"schema_version", 1},
           {"kind", "rlgst.gauge_check"},
           {"null_dim", report["estimate"]["null_dim"]},
           {"expected_gauge_dim", report["estimate"]["expected_gauge_dim"]},
           {"all_gauge", gauge.at("all_gauge")},
           {"diagnostics", gauge.at("diagnostics")}};
  if (!args.out_path.empty()) rlgst::write_json(args.out_path, out);
  std::cout << "null dim " << out["null_dim"] << ", all generated by gauge freedom: "
            << (gauge.at("all_gauge").get<bool>() ? "yes" : "no") << "\n";
  return gauge.at("all_gauge").get<bool>() ? 0 : 1;
}

int cmd_bootstrap(const CommonArgs& args) {
  rlgst::ExperimentConfig cfg = load_config(args);
  if (args.seed) cfg.bootstrap_seed = *args.seed;
  if (!cfg.bootstrap_seed) throw rlgst::ValidationError("bootstrap needs a seed");
  const auto circuits = rlgst::read_circuits(args.circuits_path);
  const auto table = rlgst::read_counts(args.counts_path);
  const Json out = rlgst::run_bootstrap(cfg, circuits, table, cfg.bootstrap_samples,
                                        *cfg.bootstrap_seed);
  rlgst::write_json(args.out_path, out);
  if (cfg.bootstrap_samples == 0)
    std::cout << "warning: 0 bootstrap samples requested, nothing done\n";
  else
    std::cout << "bootstrap AGsI " << out["agsi"]["mean"] << " +/- " << out["agsi"]["std"]
              << " (" << cfg.bootstrap_samples << " samples) -> " << args.out_path << "\n";
  return 0;
}

int cmd_run(const CommonArgs& args) {
  const rlgst::ExperimentConfig cfg = load_config(args);
  const std::string report = rlgst::run_full_pipeline(cfg, args.out_path);
  std::cout << "pipeline complete, report at " << report << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized linear gate set tomography"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* sub, bool needs_config = true) {
    if (needs_config)
      sub->add_option("--config", args.config_path, "experiment config (JSON)")->required();
    sub->add_option("--seed", args.seed, "override the command-relevant seed");
    sub->add_option("--shots", args.shots, "override shot count (0 = exact probabilities)");
    sub->add_option("--sv-tol", args.sv_tol, "relative singular-value zero threshold");
    sub->add_option("--bootstrap", args.bootstrap_b, "number of bootstrap samples");
  };

  CLI::App* gen = app.add_subcommand("gen-circuits", "draw random tomographic/test circuits");
  add_common(gen);
  gen->add_option("--out", args.out_path, "output circuits file (JSON lines)")->required();
  gen->add_option("--kind", args.kind, "tomographic or test")
      ->check(CLI::IsMember({"tomographic", "test"}));

  CLI::App* sim = app.add_subcommand("simulate", "simulate noisy counts for circuits");
  add_common(sim);
  sim->add_option("--circuits", args.circuits_path, "circuits file")->required();
  sim->add_option("--out", args.out_path, "output counts file")->required();

  CLI::App* est = app.add_subcommand("estimate", "assemble the design system and solve");
  add_common(est);
  est->add_option("--circuits", args.circuits_path, "circuits file")->required();
  est->add_option("--counts", args.counts_path, "counts file");
  est->add_option("--out", args.out_path, "output report file")->required();
  est->add_option("--dump-design", args.dump_design_path, "also dump the design system (JSON)");

  CLI::App* pred = app.add_subcommand("predict", "predict outcomes of test circuits");
  add_common(pred);
  pred->add_option("--report", args.report_path, "estimation report")->required();
  pred->add_option("--circuits", args.circuits_path, "test circuits file")->required();
  pred->add_option("--counts", args.counts_path, "reference counts for scoring");
  pred->add_option("--out", args.out_path, "output predictions file")->required();

  CLI::App* gauge = app.add_subcommand("gauge-check", "summarize gauge diagnostics of a report");
  gauge->add_option("--report", args.report_path, "estimation report")->required();
  gauge->add_option("--out", args.out_path, "optional diagnostics file");

  CLI::App* boot = app.add_subcommand("bootstrap", "bootstrap error bars for the estimate");
  add_common(boot);
  boot->add_option("--circuits", args.circuits_path, "circuits file")->required();
  boot->add_option("--counts", args.counts_path, "counts file")->required();
  boot->add_option("--out", args.out_path, "output error-bar file")->required();

  CLI::App* run = app.add_subcommand("run", "full pipeline: gen-circuits + simulate + estimate");
  add_common(run);
  run->add_option("--out", args.out_path, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_circuits(args);
    if (sim->parsed()) return cmd_simulate(args);
    if (est->parsed()) return cmd_estimate(args);
    if (pred->parsed()) return cmd_predict(args);
    if (gauge->parsed()) return cmd_gauge_check(args);
    if (boot->parsed()) return cmd_bootstrap(args);
    if (run->parsed()) return cmd_run(args);
  } catch (const rlgst::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const rlgst::DegenerateSystemError& e) {
    std::cerr << "degenerate linear system: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const rlgst::FileFormatError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
