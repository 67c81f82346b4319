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

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rlgst/io.hpp"
#include "rlgst/pipeline.hpp"

using namespace rlgst;

namespace {

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "rlgst_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

Json minimal_config() {
  return Json{
      {"schema_version", 1},
      {"gate_set", {{"name", "i_x90_y90"}}},
      {"true_noise",
       {{"spam_a", 0.01}, {"random", {{"target_agsi", 1.1e-4}, {"seed", 11}}}}},
      {"circuits",
       {{"lengths", {8, 16}}, {"count_per_length", 5}, {"include_null", true}, {"seed", 1}}},
      {"shots", 512},
      {"sampling_seed", 3},
  };
}

}  // namespace

TEST_CASE("circuit files round trip") {
  const auto path = (temp_dir() / "circuits.jsonl").string();
  const GateSet gs = standard_gateset(StandardGateSet::IX90Y90);
  const auto circuits = random_circuits(gs, {4, 8}, 5, 2, true);
  write_circuits(path, circuits);
  const auto loaded = read_circuits(path);
  REQUIRE(loaded.size() == circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    CHECK(loaded[i].id == circuits[i].id);
    CHECK(loaded[i].gates == circuits[i].gates);
  }
}

TEST_CASE("circuit files without a header are rejected") {
  const auto path = (temp_dir() / "headerless.jsonl").string();
  std::ofstream(path) << R"({"id":"c0","gates":["gx"]})" << "\n";
  CHECK_THROWS_AS(read_circuits(path), FileFormatError);
}

TEST_CASE("counts files round trip in both modes") {
  const auto path = (temp_dir() / "counts.json").string();
  ProbabilityTable table;
  table.shots = 100;
  table.counts["c0"] = {75, 25};
  Vec p(2);
  p << 0.75, 0.25;
  table.probs["c0"] = p;
  write_counts(path, table, 1, CountsMeta{100, 7, "2026-01-01T00:00:00Z"});
  const ProbabilityTable loaded = read_counts(path);
  CHECK(loaded.shots == 100);
  CHECK(loaded.counts.at("c0") == std::vector<long long>{75, 25});
  CHECK((loaded.probs_for("c0") - p).cwiseAbs().maxCoeff() == 0.0);

  // Exact mode stores probabilities directly.
  ProbabilityTable exact;
  exact.shots = 0;
  Vec q(4);
  q << 0.5, 0.25, 0.125, 0.125;
  exact.probs["null"] = q;
  const auto exact_path = (temp_dir() / "exact.json").string();
  write_counts(exact_path, exact, 2, CountsMeta{0, 7, "2026-01-01T00:00:00Z"});
  const ProbabilityTable exact_loaded = read_counts(exact_path);
  CHECK(exact_loaded.exact());
  CHECK((exact_loaded.probs_for("null") - q).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("externally produced counts are ingestible") {
  // The documented schema: circuit ids at top level, outcomes by bitstring.
  const auto path = (temp_dir() / "device.json").string();
  std::ofstream(path) << R"({
    "meta": {"schema_version": 1, "shots": 10, "seed": 0, "timestamp": "x"},
    "c0": {"00": 4, "11": 6},
    "c1": {"01": 10}
  })";
  const ProbabilityTable t = read_counts(path);
  CHECK(t.shots == 10);
  CHECK(t.probs_for("c0")(0) == doctest::Approx(0.4));
  CHECK(t.probs_for("c0")(3) == doctest::Approx(0.6));
  CHECK(t.probs_for("c1")(1) == doctest::Approx(1.0));
}

TEST_CASE("malformed counts files are rejected") {
  const auto path = (temp_dir() / "bad.json").string();
  std::ofstream(path) << R"({"c0": {"0": 1}})";  // no meta
  CHECK_THROWS_AS(read_counts(path), FileFormatError);

  std::ofstream(path) << R"(not json)";
  CHECK_THROWS_AS(read_counts(path), FileFormatError);

  CHECK_THROWS_AS(read_counts((temp_dir() / "missing.json").string()), FileFormatError);
}

TEST_CASE("noise vectors round trip through labeled blocks") {
  const GateSet gs = standard_gateset(StandardGateSet::IX90Y90);
  const ColumnLayout layout = layout_for(gs);
  Rng rng(91);
  NoiseVector e{layout, Vec(layout.size())};
  for (int i = 0; i < e.values.size(); ++i) e.values(i) = rng.uniform(-1, 1);
  const Json j = noise_vector_to_json(e);
  const NoiseVector back = noise_vector_from_json(j, layout);
  CHECK((back.values - e.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("config parsing and validation") {
  const ExperimentConfig cfg = parse_config(minimal_config());
  CHECK(cfg.gate_set.name == "i_x90_y90");
  CHECK(cfg.shots == 512);
  REQUIRE(cfg.true_noise.has_value());
  CHECK(cfg.true_noise->random->target_agsi == doctest::Approx(1.1e-4));

  // Both data sources at once.
  Json both = minimal_config();
  both["counts_path"] = "somewhere.json";
  CHECK_THROWS_AS(parse_config(both), ValidationError);

  // Neither data source.
  Json neither = minimal_config();
  neither.erase("true_noise");
  CHECK_THROWS_AS(parse_config(neither), ValidationError);

  // Seeds are mandatory.
  Json unseeded = minimal_config();
  unseeded["circuits"].erase("seed");
  CHECK_THROWS_AS(parse_config(unseeded), FileFormatError);
  Json nosample = minimal_config();
  nosample.erase("sampling_seed");
  CHECK_THROWS_AS(parse_config(nosample), ValidationError);

  // Unknown schema version.
  Json vnext = minimal_config();
  vnext["schema_version"] = 99;
  CHECK_THROWS_AS(parse_config(vnext), FileFormatError);
}

TEST_CASE("explicit gate sets parse from unitaries") {
  Json j = minimal_config();
  j["gate_set"] = Json{
      {"n_qubits", 1},
      {"gates",
       Json::array({Json{{"label", "X"},
                         {"unitary", Json::array({Json::array({0.0, 0.0}), Json::array({1.0, 0.0}),
                                                  Json::array({1.0, 0.0}),
                                                  Json::array({0.0, 0.0})})}}})},
  };
  const ExperimentConfig cfg = parse_config(j);
  const GateSet gs = build_gateset(cfg.gate_set);
  CHECK(gs.size() == 1);
  const Mat expected = standard_gateset(StandardGateSet::PauliXYZ).gate(0).ideal.matrix();
  CHECK((gs.gate(0).ideal.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("design system export carries labels and data") {
  const GateSet gs = standard_gateset(StandardGateSet::IX90Y90);
  const std::vector<Circuit> circuits{{"null", {}}};
  ProbabilityTable table;
  table.shots = 0;
  table.probs["null"] = simulate(gs, circuits[0], false);
  const DesignSystem ds = assemble(gs, circuits, table);
  const Json j = design_to_json(ds);
  CHECK(j["rows"].size() == 1);
  CHECK(j["columns"].size() == 43);
  CHECK(j["C"][0].size() == 43);
  CHECK(j["p_ideal"][0].get<double>() == doctest::Approx(1.0));
}
