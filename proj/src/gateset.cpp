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

#include "rlgst/gateset.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rlgst {

namespace {

CMat cnot_unitary() {
  CMat u = CMat::Zero(4, 4);
  u(0, 0) = 1;
  u(1, 1) = 1;
  u(2, 3) = 1;
  u(3, 2) = 1;
  return u;
}

CMat hadamard_unitary() {
  CMat u(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  u << s, s, s, -s;
  return u;
}

CMat t_unitary() {
  CMat u = CMat::Zero(2, 2);
  u(0, 0) = 1;
  u(1, 1) = std::exp(std::complex<double>(0.0, M_PI / 4));
  return u;
}

}  // namespace

GateSet::GateSet(int n_qubits, std::vector<Gate> gates, SpamModel spam_ideal)
    : n_qubits_(n_qubits),
      gates_(std::move(gates)),
      spam_ideal_(std::move(spam_ideal)),
      spam_(spam_ideal_) {
  if (gates_.empty()) throw std::invalid_argument("GateSet: need at least one gate");
  for (int i = 0; i < size(); ++i) {
    const Gate& g = gates_[i];
    if (g.ideal.n_qubits() != n_qubits_)
      throw std::invalid_argument("GateSet: gate '" + g.label + "' has wrong qubit count");
    const Mat& m = g.ideal.matrix();
    const double ortho_dev =
        (m.transpose() * m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    if (ortho_dev > 1e-10)
      throw std::invalid_argument("GateSet: ideal gate '" + g.label + "' is not unitary");
    if (!index_.emplace(g.label, i).second)
      throw std::invalid_argument("GateSet: duplicate label '" + g.label + "'");
  }
  spam_ideal_.validate();
  if (spam_ideal_.rho.n_qubits != n_qubits_)
    throw std::invalid_argument("GateSet: SPAM qubit count mismatch");
}

int GateSet::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end())
    throw std::invalid_argument("GateSet: unknown gate label '" + label + "'");
  return it->second;
}

const Superop& GateSet::noisy(int idx) const {
  if (!has_noise()) throw std::logic_error("GateSet: no noise attached");
  return noisy_.at(idx);
}

GateSet GateSet::with_noise(const std::vector<Superop>& noise_maps, SpamModel spam_noisy) const {
  if (static_cast<int>(noise_maps.size()) != size())
    throw std::invalid_argument("with_noise: need exactly one noise map per gate");
  GateSet out(n_qubits_, gates_, spam_ideal_);
  out.noisy_.reserve(noise_maps.size());
  for (int i = 0; i < size(); ++i) {
    const Superop noisy = compose(noise_maps[i], gates_[i].ideal);
    if (!check_structure(noisy).is_tp)
      throw std::invalid_argument("with_noise: noisy gate '" + gates_[i].label +
                                  "' is not trace preserving");
    out.noisy_.push_back(noisy);
  }
  spam_noisy.validate();
  if (spam_noisy.rho.n_qubits != n_qubits_)
    throw std::invalid_argument("with_noise: SPAM qubit count mismatch");
  out.spam_ = std::move(spam_noisy);
  return out;
}

GateSet attach_noise(const GateSet& gs, const std::vector<Superop>& noise_maps,
                     SpamModel spam_noisy) {
  return gs.with_noise(noise_maps, std::move(spam_noisy));
}

GateSet standard_gateset(StandardGateSet which) {
  switch (which) {
    case StandardGateSet::PauliXYZ: {
      std::vector<Gate> gates;
      gates.push_back({"X", unitary_to_superop(sigma_matrix(1, 1))});
      gates.push_back({"Y", unitary_to_superop(sigma_matrix(1, 2))});
      gates.push_back({"Z", unitary_to_superop(sigma_matrix(1, 3))});
      return GateSet(1, std::move(gates), spam_computational(1));
    }
    case StandardGateSet::IX90Y90: {
      std::vector<Gate> gates;
      gates.push_back({"I", Superop::identity(1)});
      gates.push_back({"gx", rotation(Axis::X, M_PI / 2)});
      gates.push_back({"gy", rotation(Axis::Y, M_PI / 2)});
      return GateSet(1, std::move(gates), spam_computational(1));
    }
    case StandardGateSet::IHT: {
      std::vector<Gate> gates;
      gates.push_back({"I", Superop::identity(1)});
      gates.push_back({"H", unitary_to_superop(hadamard_unitary())});
      gates.push_back({"T", unitary_to_superop(t_unitary())});
      return GateSet(1, std::move(gates), spam_computational(1));
    }
    case StandardGateSet::TwoQubitIXYCnot: {
      const Superop singles[3] = {Superop::identity(1), rotation(Axis::X, M_PI / 2),
                                  rotation(Axis::Y, M_PI / 2)};
      const char* tags = "0xy";
      std::vector<Gate> gates;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          std::string label = std::string("g") + tags[i] + tags[j];
          gates.push_back({std::move(label), tensor(singles[i], singles[j])});
        }
      gates.push_back({"CNOT", unitary_to_superop(cnot_unitary())});
      return GateSet(2, std::move(gates), spam_computational(2));
    }
  }
  throw std::invalid_argument("standard_gateset: unknown selector");
}

GateSet standard_gateset(const std::string& name) {
  if (name == "pauli_xyz") return standard_gateset(StandardGateSet::PauliXYZ);
  if (name == "i_x90_y90") return standard_gateset(StandardGateSet::IX90Y90);
  if (name == "i_h_t") return standard_gateset(StandardGateSet::IHT);
  if (name == "twoqubit_ixy_cnot") return standard_gateset(StandardGateSet::TwoQubitIXYCnot);
  throw std::invalid_argument("standard_gateset: unknown name '" + name + "'");
}

std::vector<ErrorMap> error_maps(const GateSet& gs, double tol) {
  if (!gs.has_noise()) throw std::logic_error("error_maps: no noise attached");
  std::vector<ErrorMap> out;
  out.reserve(gs.size());
  for (int i = 0; i < gs.size(); ++i) {
    Mat e = gs.noisy(i).matrix() * gs.gate(i).ideal.matrix().transpose() -
            Mat::Identity(gs.gate(i).ideal.size(), gs.gate(i).ideal.size());
    const double row0 = e.row(0).cwiseAbs().maxCoeff();
    if (row0 > tol) {
      std::ostringstream msg;
      msg << "error_maps: first row of deviation for '" << gs.gate(i).label
          << "' is not zero (" << row0 << ")";
      throw std::runtime_error(msg.str());
    }
    e.row(0).setZero();
    out.push_back({gs.gate(i).label, std::move(e)});
  }
  return out;
}

CompletenessReport completeness_check(const GateSet& gs, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("completeness_check: max_depth must be >= 1");
  const int s = pauli_count(gs.n_qubits());

  // Basis of the span reached so far; applying each gate to a span basis
  // reaches the same space as applying it to every individual word.
  auto rank_of = [](const Mat& cols) {
    if (cols.cols() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(cols);
    const double cutoff = 1e-8 * svd.singularValues()(0);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > cutoff) ++r;
    return r;
  };
  auto orth_basis = [](const Mat& cols, int rank) {
    Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeThinU);
    return Mat(svd.matrixU().leftCols(rank));
  };

  Mat reached = gs.spam_ideal().rho.coords;
  int rank = 1;
  int depth = 0;
  for (int level = 1; level <= max_depth; ++level) {
    Mat basis = orth_basis(reached, rank);
    Mat grown(s, basis.cols() * (gs.size() + 1));
    grown.leftCols(basis.cols()) = basis;
    for (int g = 0; g < gs.size(); ++g)
      grown.middleCols((g + 1) * basis.cols(), basis.cols()) =
          gs.gate(g).ideal.matrix() * basis;
    const int new_rank = rank_of(grown);
    reached = std::move(grown);
    depth = level;
    if (new_rank == rank || new_rank == s) {
      rank = new_rank;
      break;
    }
    rank = new_rank;
  }
  return CompletenessReport{rank == s, rank, depth};
}

}  // namespace rlgst
