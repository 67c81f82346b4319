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

#include "rlgst/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <map>

#include "rlgst/rng.hpp"

namespace rlgst {

namespace {

SpamModel truth_spam(int n_qubits, double a) {
  return n_qubits == 1 ? spam_tilted(a) : spam_tensor(spam_tilted(a), n_qubits);
}

std::vector<Superop> explicit_noise_maps(const GateSet& ideal,
                                         const std::map<std::string, std::vector<double>>& params) {
  std::vector<Superop> maps;
  maps.reserve(ideal.size());
  for (const auto& gate : ideal.gates()) {
    const auto it = params.find(gate.label);
    if (it == params.end())
      throw ValidationError("true_noise.params: missing gate '" + gate.label + "'");
    const auto& p = it->second;
    if (ideal.n_qubits() == 1 && p.size() == 7) {
      maps.push_back(noise_1q(NoiseModel1Q{p[0], p[1], p[2], p[3], p[4], p[5], p[6]}));
    } else if (ideal.n_qubits() == 2 && p.size() == 23) {
      NoiseModel2Q m;
      std::copy(p.begin(), p.end(), m.params.begin());
      maps.push_back(noise_2q(m));
    } else {
      throw ValidationError("true_noise.params: gate '" + gate.label +
                            "' needs 7 (1-qubit) or 23 (2-qubit) parameters");
    }
  }
  return maps;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

GateSet build_gateset(const GateSetConfig& cfg) {
  if (!cfg.name.empty()) return standard_gateset(cfg.name);
  std::vector<Gate> gates;
  gates.reserve(cfg.unitaries.size());
  for (const auto& [label, u] : cfg.unitaries) gates.push_back({label, unitary_to_superop(u)});
  return GateSet(cfg.n_qubits, std::move(gates), spam_computational(cfg.n_qubits));
}

std::vector<Superop> noise_maps_at_scale(const GateSet& ideal, std::uint64_t seed, double scale) {
  std::vector<Superop> maps;
  maps.reserve(ideal.size());
  for (int gamma = 0; gamma < ideal.size(); ++gamma) {
    Rng rng(derive_seed(seed, "noise", static_cast<std::uint64_t>(gamma)));
    if (ideal.n_qubits() == 1) {
      maps.push_back(noise_1q(scale_noise(random_noise_1q(rng, 1.0), scale)));
    } else if (ideal.n_qubits() == 2) {
      maps.push_back(noise_2q(scale_noise(random_noise_2q(rng, 1.0), scale)));
    } else {
      throw ValidationError("random true noise supports 1- or 2-qubit gate sets only");
    }
  }
  return maps;
}

TruthModel build_truth(const GateSet& ideal, const TrueNoiseConfig& cfg) {
  const SpamModel spam = truth_spam(ideal.n_qubits(), cfg.spam_a);

  if (!cfg.explicit_params.empty()) {
    GateSet noisy = ideal.with_noise(explicit_noise_maps(ideal, cfg.explicit_params), spam);
    const double a = agsi(noisy);
    return TruthModel{std::move(noisy), a, 0.0, false};
  }

  const RandomNoiseConfig& rc = *cfg.random;
  const auto agsi_at = [&](double scale) {
    return agsi(ideal.with_noise(noise_maps_at_scale(ideal, rc.seed, scale), spam));
  };

  // Bracket the target, then bisect the common parameter scale.
  double lo = 0.0, hi = 1e-6;
  while (agsi_at(hi) < rc.target_agsi) {
    hi *= 2.0;
    if (hi > 0.25) throw ValidationError("build_truth: target AGsI out of reach");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (agsi_at(mid) < rc.target_agsi ? lo : hi) = mid;
  }
  GateSet noisy = ideal.with_noise(noise_maps_at_scale(ideal, rc.seed, hi), spam);
  const double a = agsi(noisy);
  return TruthModel{std::move(noisy), a, hi, true};
}

std::vector<Circuit> make_tomographic_circuits(const GateSet& gs, const CircuitGenConfig& cfg) {
  return random_circuits(gs, cfg.lengths, cfg.count_per_length, cfg.seed, cfg.include_null);
}

std::vector<Circuit> make_test_circuits(const GateSet& gs, const TestCircuitConfig& cfg) {
  return random_circuits_mixed(gs, cfg.lengths, cfg.count, cfg.seed);
}

ProbabilityTable simulate_counts(const TruthModel& truth, const std::vector<Circuit>& circuits,
                                 long long shots, std::uint64_t sampling_seed) {
  ProbabilityTable table;
  table.shots = shots;
  for (const auto& c : circuits) {
    const Vec p = simulate(truth.noisy, c, /*use_noisy=*/true);
    if (shots > 0) {
      const auto counts = sample_counts(p, shots, derive_seed(sampling_seed, "sample:" + c.id));
      Vec freq(p.size());
      for (int mu = 0; mu < p.size(); ++mu)
        freq(mu) = static_cast<double>(counts[mu]) / static_cast<double>(shots);
      table.counts[c.id] = counts;
      table.probs[c.id] = std::move(freq);
    } else {
      table.probs[c.id] = p;
    }
  }
  return table;
}

EstimateOutput run_estimate(const ExperimentConfig& cfg, const std::vector<Circuit>& circuits,
                            const ProbabilityTable& measured) {
  const GateSet gs = build_gateset(cfg.gate_set);

  DesignSystem ds = assemble(gs, circuits, measured);
  EstimationReport est = solve(ds, cfg.sv_tol_rel);
  audit_gauge(est, gs);
  const CompletenessReport comp = completeness_check(gs, 4 * pauli_count(gs.n_qubits()));
  const NullSpaceAudit audit = null_space_audit(est, gs, comp);
  const auto warnings = length_budget_check(circuits, cfg.epsilon_estimate);

  Json report;
  report["schema_version"] = 1;
  report["kind"] = "rlgst.report";

  Json labels = Json::array();
  for (const auto& g : gs.gates()) labels.push_back(g.label);
  report["gate_set"] = Json{{"name", cfg.gate_set.name},
                            {"n_qubits", gs.n_qubits()},
                            {"labels", labels},
                            {"n_outcomes", gs.n_outcomes()}};

  Json seeds = Json::object();
  if (cfg.circuits) seeds["circuits"] = cfg.circuits->seed;
  if (cfg.sampling_seed) seeds["sampling"] = *cfg.sampling_seed;
  report["settings"] = Json{{"shots", measured.shots},
                            {"sv_tol_rel", cfg.sv_tol_rel},
                            {"epsilon_estimate", cfg.epsilon_estimate},
                            {"seeds", seeds}};

  report["design"] = Json{{"n_circuits", circuits.size()},
                          {"n_rows", ds.C.rows()},
                          {"n_cols", ds.C.cols()}};

  std::vector<double> svs(est.singular_values.data(),
                          est.singular_values.data() + est.singular_values.size());
  report["estimate"] = Json{{"singular_values", svs},
                            {"rank", est.rank},
                            {"null_dim", est.null_dim()},
                            {"expected_gauge_dim", est.expected_gauge_dim},
                            {"e_hat", noise_vector_to_json(est.e_hat)}};

  bool all_gauge = true;
  Json diags = Json::array();
  for (const auto& d : est.gauge_diagnostics) {
    all_gauge = all_gauge && d.is_gauge;
    diags.push_back(Json{{"is_gauge", d.is_gauge}, {"residual", d.residual}});
  }
  report["gauge"] = Json{{"all_gauge", all_gauge}, {"diagnostics", diags}};

  report["completeness"] =
      Json{{"complete", comp.complete}, {"reached_rank", comp.reached_rank}};
  report["null_space_audit"] = Json{{"null_dim", audit.null_dim},
                                    {"expectation_applies", audit.expectation_applies},
                                    {"extra_null_dim", audit.extra_null_dim},
                                    {"advice", audit.advice}};

  Json metrics = Json{{"agsi_estimate", agsi_from_estimate(gs, est.e_hat)}};
  if (measured.shots > 0) {
    const FitReport fit = goodness_of_fit(ds, est.e_hat, est.rank, measured.shots);
    metrics["chi2"] = fit.chi2;
    metrics["dof"] = fit.dof;
    metrics["n_sigma"] = fit.n_sigma;
  }
  if (cfg.true_noise) {
    const TruthModel truth = build_truth(gs, *cfg.true_noise);
    metrics["agsi_true"] = truth.agsi_true;
    Json tn = Json{{"spam_a", cfg.true_noise->spam_a}};
    if (truth.random_sampling) {
      // The sampling law is a stand-in: parameters are drawn uniformly at a
      // common scale calibrated to the target infidelity.
      tn["sampling"] = "uniform-scaled-bisection";
      tn["target_agsi"] = cfg.true_noise->random->target_agsi;
      tn["seed"] = cfg.true_noise->random->seed;
      tn["calibrated_scale"] = truth.scale;
    } else {
      tn["sampling"] = "explicit";
    }
    report["true_noise"] = tn;
  }
  report["metrics"] = metrics;
  report["warnings"] = warnings;

  return EstimateOutput{std::move(ds), std::move(est), comp, audit, std::move(report)};
}

Json run_predict(const ExperimentConfig& cfg, const Json& report,
                 const std::vector<Circuit>& test_circuits, const ProbabilityTable* reference) {
  const GateSet gs = build_gateset(cfg.gate_set);
  const ColumnLayout layout = layout_for(gs);

  if (!report.contains("estimate") || !report["estimate"].contains("e_hat"))
    throw FileFormatError("predict: report lacks an estimate");
  const Json& rg = report.at("gate_set");
  if (rg.at("n_qubits").get<int>() != gs.n_qubits())
    throw ValidationError("predict: report gate set does not match the configured one");
  const NoiseVector e_hat = noise_vector_from_json(report["estimate"]["e_hat"], layout);

  Json predictions = Json::array();
  std::map<int, std::pair<double, int>> by_length;  // length -> (delta sum, count)
  double delta_sum = 0.0;
  int delta_count = 0;
  for (const auto& c : test_circuits) {
    const LinearPrediction pred = predict_linear(gs, c, e_hat);
    std::vector<double> p(pred.probs.data(), pred.probs.data() + pred.probs.size());
    Json entry{{"id", c.id},
               {"length", c.length()},
               {"p_hat", p},
               {"clip_magnitude", pred.clip_magnitude}};
    if (reference) {
      const double delta = stat_distance(pred.probs, reference->probs_for(c.id));
      entry["delta"] = delta;
      auto& bucket = by_length[c.length()];
      bucket.first += delta;
      bucket.second += 1;
      delta_sum += delta;
      ++delta_count;
    }
    predictions.push_back(std::move(entry));
  }

  Json out;
  out["schema_version"] = 1;
  out["kind"] = "rlgst.predictions";
  out["predictions"] = std::move(predictions);
  if (reference) {
    Json buckets = Json::array();
    for (const auto& [length, acc] : by_length)
      buckets.push_back(Json{{"length", length},
                             {"mean_delta", acc.first / acc.second},
                             {"count", acc.second}});
    out["aggregates"] = Json{{"by_length", buckets},
                             {"overall_mean_delta", delta_sum / std::max(delta_count, 1)}};
  }
  return out;
}

Json run_bootstrap(const ExperimentConfig& cfg, const std::vector<Circuit>& circuits,
                   const ProbabilityTable& measured, int n_replicates, std::uint64_t seed) {
  Json out;
  out["schema_version"] = 1;
  out["kind"] = "rlgst.bootstrap";
  out["samples"] = n_replicates;
  out["seed"] = seed;
  if (n_replicates == 0) {
    out["warning"] = "no replicates requested; nothing resampled";
    return out;
  }
  const GateSet gs = build_gateset(cfg.gate_set);
  const BootstrapResult result =
      bootstrap(gs, circuits, measured, n_replicates, seed, cfg.sv_tol_rel);
  std::vector<double> agsis;
  agsis.reserve(result.replicates.size());
  for (const auto& rep : result.replicates) agsis.push_back(rep.agsi);
  out["agsi"] = Json{{"replicates", agsis}, {"mean", result.agsi_mean}, {"std", result.agsi_std}};
  return out;
}

std::string run_full_pipeline(const ExperimentConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  if (!cfg.circuits) throw ValidationError("run: config has no circuit-generation block");
  if (!cfg.true_noise) throw ValidationError("run: config has no true_noise block (simulation mode only)");
  fs::create_directories(out_dir);

  const GateSet gs = build_gateset(cfg.gate_set);
  const TruthModel truth = build_truth(gs, *cfg.true_noise);

  const auto circuits = make_tomographic_circuits(gs, *cfg.circuits);
  const std::string circuits_path = (fs::path(out_dir) / "circuits.jsonl").string();
  write_circuits(circuits_path, circuits);

  const auto table = simulate_counts(truth, read_circuits(circuits_path), cfg.shots,
                                     *cfg.sampling_seed);
  const std::string counts_path = (fs::path(out_dir) / "counts.json").string();
  write_counts(counts_path, table, gs.n_qubits(),
               CountsMeta{cfg.shots, *cfg.sampling_seed, utc_timestamp()});

  const EstimateOutput est = run_estimate(cfg, read_circuits(circuits_path),
                                          read_counts(counts_path));
  const std::string report_path = (fs::path(out_dir) / "report.json").string();
  write_json(report_path, est.report);

  if (cfg.test_circuits) {
    const auto tests = make_test_circuits(gs, *cfg.test_circuits);
    const std::string tests_path = (fs::path(out_dir) / "test_circuits.jsonl").string();
    write_circuits(tests_path, tests);

    // Exact reference probabilities for prediction scoring.
    const auto reference = simulate_counts(truth, tests, 0, *cfg.sampling_seed);
    const std::string ref_path = (fs::path(out_dir) / "test_reference.json").string();
    write_counts(ref_path, reference, gs.n_qubits(),
                 CountsMeta{0, *cfg.sampling_seed, utc_timestamp()});

    const ProbabilityTable ref = read_counts(ref_path);
    const Json pred = run_predict(cfg, read_json(report_path), read_circuits(tests_path), &ref);
    write_json((fs::path(out_dir) / "predictions.json").string(), pred);
  }
  return report_path;
}

Json design_to_json(const DesignSystem& ds) {
  Json rows = Json::array();
  for (const auto& [id, mu] : ds.rows) rows.push_back(Json{{"circuit", id}, {"outcome", mu}});
  Json cols = Json::array();
  for (int c = 0; c < ds.layout.size(); ++c) cols.push_back(ds.layout.column_label(c));

  Json matrix = Json::array();
  for (int r = 0; r < ds.C.rows(); ++r) {
    std::vector<double> row(ds.C.cols());
    for (int c = 0; c < ds.C.cols(); ++c) row[c] = ds.C(r, c);
    matrix.push_back(row);
  }
  std::vector<double> p(ds.p_ideal.data(), ds.p_ideal.data() + ds.p_ideal.size());
  std::vector<double> pt(ds.p_measured.data(), ds.p_measured.data() + ds.p_measured.size());
  return Json{{"schema_version", 1}, {"kind", "rlgst.design"},
              {"rows", rows},       {"columns", cols},
              {"C", matrix},        {"p_ideal", p},
              {"p_measured", pt}};
}

}  // namespace rlgst
