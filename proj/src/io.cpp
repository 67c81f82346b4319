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

#include "rlgst/io.hpp"

#include <fstream>
#include <sstream>

namespace rlgst {

namespace {

constexpr int kSchemaVersion = 1;

Json must_parse(const std::string& text, const std::string& where) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw FileFormatError("invalid JSON in " + where);
  return j;
}

template <typename T>
T require_field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw FileFormatError("missing field '" + key + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw FileFormatError("bad type for field '" + key + "' in " + where);
  }
}

void check_schema(const Json& j, const std::string& where) {
  const int version = require_field<int>(j, "schema_version", where);
  if (version != kSchemaVersion) {
    std::ostringstream msg;
    msg << where << ": unsupported schema_version " << version;
    throw FileFormatError(msg.str());
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (gate_set.name.empty() && gate_set.unitaries.empty())
    throw ValidationError("config: gate_set needs a name or explicit gates");
  if (true_noise.has_value() == counts_path.has_value())
    throw ValidationError("config: exactly one of true_noise and counts_path must be present");
  if (true_noise && true_noise->random && !true_noise->explicit_params.empty())
    throw ValidationError("config: true_noise cannot be both random and explicit");
  if (true_noise && !true_noise->random && true_noise->explicit_params.empty())
    throw ValidationError("config: true_noise needs 'random' or 'params'");
  if (circuits && circuits->count_per_length < 1)
    throw ValidationError("config: circuits.count_per_length must be >= 1");
  if (shots < 0) throw ValidationError("config: shots must be >= 0");
  if (!(sv_tol_rel > 0.0 && sv_tol_rel < 1.0))
    throw ValidationError("config: sv_tol_rel must be in (0, 1)");
  if (!(epsilon_estimate > 0.0)) throw ValidationError("config: epsilon_estimate must be positive");
  if (true_noise && !sampling_seed.has_value())
    throw ValidationError("config: sampling_seed is mandatory in simulation mode");
}

ExperimentConfig parse_config(const Json& j) {
  check_schema(j, "config");
  ExperimentConfig cfg;

  const Json& gj = j.contains("gate_set") ? j.at("gate_set") : Json::object();
  if (gj.contains("name")) {
    cfg.gate_set.name = require_field<std::string>(gj, "name", "gate_set");
  } else if (gj.contains("gates")) {
    cfg.gate_set.n_qubits = require_field<int>(gj, "n_qubits", "gate_set");
    const int d = hilbert_dim(cfg.gate_set.n_qubits);
    for (const auto& item : gj.at("gates")) {
      const auto label = require_field<std::string>(item, "label", "gate_set.gates");
      const auto flat = require_field<std::vector<std::vector<double>>>(item, "unitary",
                                                                        "gate_set.gates");
      if (static_cast<int>(flat.size()) != d * d)
        throw FileFormatError("gate '" + label + "': unitary needs " + std::to_string(d * d) +
                              " row-major [re, im] pairs");
      CMat u(d, d);
      for (int k = 0; k < d * d; ++k) {
        if (flat[k].size() != 2)
          throw FileFormatError("gate '" + label + "': entries must be [re, im] pairs");
        u(k / d, k % d) = std::complex<double>(flat[k][0], flat[k][1]);
      }
      cfg.gate_set.unitaries.emplace_back(label, std::move(u));
    }
  } else {
    throw FileFormatError("config: gate_set needs 'name' or 'gates'");
  }

  if (j.contains("true_noise")) {
    const Json& tn = j.at("true_noise");
    TrueNoiseConfig noise;
    noise.spam_a = tn.value("spam_a", 0.0);
    if (tn.contains("random")) {
      const Json& rj = tn.at("random");
      noise.random = RandomNoiseConfig{
          require_field<double>(rj, "target_agsi", "true_noise.random"),
          require_field<std::uint64_t>(rj, "seed", "true_noise.random")};
    }
    if (tn.contains("params")) {
      for (const auto& [label, arr] : tn.at("params").items())
        noise.explicit_params[label] = arr.get<std::vector<double>>();
    }
    cfg.true_noise = std::move(noise);
  }
  if (j.contains("counts_path"))
    cfg.counts_path = require_field<std::string>(j, "counts_path", "config");

  if (j.contains("circuits")) {
    const Json& cj = j.at("circuits");
    cfg.circuits = CircuitGenConfig{
        require_field<std::vector<int>>(cj, "lengths", "circuits"),
        require_field<int>(cj, "count_per_length", "circuits"),
        cj.value("include_null", true),
        require_field<std::uint64_t>(cj, "seed", "circuits"),
    };
  }
  if (j.contains("test_circuits")) {
    const Json& tj = j.at("test_circuits");
    cfg.test_circuits = TestCircuitConfig{
        require_field<std::vector<int>>(tj, "lengths", "test_circuits"),
        require_field<int>(tj, "count", "test_circuits"),
        require_field<std::uint64_t>(tj, "seed", "test_circuits"),
    };
  }

  cfg.shots = j.value("shots", 8192LL);
  if (j.contains("sampling_seed")) cfg.sampling_seed = j.at("sampling_seed").get<std::uint64_t>();
  cfg.sv_tol_rel = j.value("sv_tol_rel", 1e-10);
  cfg.epsilon_estimate = j.value("epsilon_estimate", 1e-4);
  if (j.contains("bootstrap")) {
    const Json& bj = j.at("bootstrap");
    cfg.bootstrap_samples = bj.value("samples", 100);
    if (bj.contains("seed")) cfg.bootstrap_seed = bj.at("seed").get<std::uint64_t>();
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig read_config(const std::string& path) {
  return parse_config(read_json(path));
}

void write_circuits(const std::string& path, const std::vector<Circuit>& circuits) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  Json header{{"schema_version", kSchemaVersion}, {"kind", "rlgst.circuits"}};
  out << header.dump() << "\n";
  for (const auto& c : circuits) {
    Json line{{"id", c.id}, {"gates", c.gates}};
    out << line.dump() << "\n";
  }
}

std::vector<Circuit> read_circuits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open circuits file '" + path + "'");
  std::vector<Circuit> out;
  std::string line;
  bool saw_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const Json j = must_parse(line, path + ":" + std::to_string(lineno));
    if (j.contains("schema_version")) {
      check_schema(j, path);
      saw_header = true;
      continue;
    }
    out.push_back({require_field<std::string>(j, "id", path),
                   require_field<std::vector<std::string>>(j, "gates", path)});
  }
  if (!saw_header) throw FileFormatError("circuits file '" + path + "' has no header line");
  return out;
}

void write_counts(const std::string& path, const ProbabilityTable& table, int n_qubits,
                  const CountsMeta& meta) {
  Json j;
  j["meta"] = Json{{"schema_version", kSchemaVersion},
                   {"kind", "rlgst.counts"},
                   {"shots", table.shots},
                   {"seed", meta.seed},
                   {"timestamp", meta.timestamp},
                   {"exact", table.exact()}};
  for (const auto& [id, p] : table.probs) {
    Json entry = Json::object();
    if (table.exact()) {
      for (int mu = 0; mu < p.size(); ++mu) entry[outcome_bitstring(mu, n_qubits)] = p(mu);
    } else {
      const auto& counts = table.counts.at(id);
      for (int mu = 0; mu < static_cast<int>(counts.size()); ++mu)
        if (counts[mu] != 0) entry[outcome_bitstring(mu, n_qubits)] = counts[mu];
    }
    j[id] = std::move(entry);
  }
  write_json(path, j);
}

ProbabilityTable read_counts(const std::string& path) {
  const Json j = read_json(path);
  if (!j.contains("meta")) throw FileFormatError("counts file '" + path + "' lacks 'meta'");
  const Json& meta = j.at("meta");
  check_schema(meta, path);
  const bool exact = meta.value("exact", false);
  const long long shots = require_field<long long>(meta, "shots", path + " meta");
  if (!exact && shots <= 0)
    throw FileFormatError("counts file '" + path + "': shots must be positive unless exact");

  ProbabilityTable table;
  table.shots = exact ? 0 : shots;
  int n_qubits = -1;
  for (const auto& [key, entry] : j.items()) {
    if (key == "meta") continue;
    if (!entry.is_object()) throw FileFormatError("counts for '" + key + "' must be an object");
    for (const auto& [bits, value] : entry.items()) {
      (void)value;
      const int n = static_cast<int>(bits.size());
      if (n_qubits == -1) n_qubits = n;
      if (n != n_qubits)
        throw FileFormatError("counts file '" + path + "': inconsistent bitstring lengths");
    }
    if (n_qubits == -1) throw FileFormatError("counts for '" + key + "' are empty");
    const int m = 1 << n_qubits;
    Vec probs = Vec::Zero(m);
    std::vector<long long> counts(m, 0);
    for (const auto& [bits, value] : entry.items()) {
      const int mu = outcome_index(bits);
      if (exact) {
        probs(mu) = value.get<double>();
      } else {
        counts[mu] = value.get<long long>();
        probs(mu) = static_cast<double>(counts[mu]) / static_cast<double>(shots);
      }
    }
    table.probs[key] = std::move(probs);
    if (!exact) table.counts[key] = std::move(counts);
  }
  table.validate();
  return table;
}

Json noise_vector_to_json(const NoiseVector& e) {
  const ColumnLayout& layout = e.layout;
  Json gates = Json::object();
  for (int gamma = 0; gamma < layout.n_gates(); ++gamma) {
    std::vector<double> block(layout.gate_block_size());
    for (int k = 0; k < layout.gate_block_size(); ++k)
      block[k] = e.values(layout.gate_block_start(gamma) + k);
    gates[layout.gate_labels()[gamma]] = std::move(block);
  }
  std::vector<double> prep(layout.prep_block_size());
  for (int k = 0; k < layout.prep_block_size(); ++k)
    prep[k] = e.values(layout.prep_block_start() + k);
  Json meas = Json::object();
  for (int mu = 0; mu <= layout.n_outcomes() - 2; ++mu) {
    std::vector<double> block(layout.meas_block_size());
    for (int k = 0; k < layout.meas_block_size(); ++k)
      block[k] = e.values(layout.meas_block_start(mu) + k);
    meas[outcome_bitstring(mu, layout.n_qubits())] = std::move(block);
  }
  return Json{{"gates", gates}, {"prep", prep}, {"meas", meas}};
}

NoiseVector noise_vector_from_json(const Json& j, const ColumnLayout& layout) {
  NoiseVector e{layout, Vec::Zero(layout.size())};
  const Json& gates = j.at("gates");
  for (int gamma = 0; gamma < layout.n_gates(); ++gamma) {
    const std::string& label = layout.gate_labels()[gamma];
    if (!gates.contains(label)) throw FileFormatError("e_hat: missing gate block '" + label + "'");
    const auto block = gates.at(label).get<std::vector<double>>();
    if (static_cast<int>(block.size()) != layout.gate_block_size())
      throw FileFormatError("e_hat: bad gate block size for '" + label + "'");
    for (int k = 0; k < layout.gate_block_size(); ++k)
      e.values(layout.gate_block_start(gamma) + k) = block[k];
  }
  const auto prep = j.at("prep").get<std::vector<double>>();
  if (static_cast<int>(prep.size()) != layout.prep_block_size())
    throw FileFormatError("e_hat: bad prep block size");
  for (int k = 0; k < layout.prep_block_size(); ++k)
    e.values(layout.prep_block_start() + k) = prep[k];
  const Json& meas = j.at("meas");
  for (int mu = 0; mu <= layout.n_outcomes() - 2; ++mu) {
    const std::string key = outcome_bitstring(mu, layout.n_qubits());
    if (!meas.contains(key)) throw FileFormatError("e_hat: missing meas block '" + key + "'");
    const auto block = meas.at(key).get<std::vector<double>>();
    if (static_cast<int>(block.size()) != layout.meas_block_size())
      throw FileFormatError("e_hat: bad meas block size for '" + key + "'");
    for (int k = 0; k < layout.meas_block_size(); ++k)
      e.values(layout.meas_block_start(mu) + k) = block[k];
  }
  return e;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << j.dump(1) << "\n";
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return must_parse(buf.str(), path);
}

}  // namespace rlgst
