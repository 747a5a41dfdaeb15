// Copyright 2026 The cqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include "cqkd/channels.h"

namespace cqkd::channels {

namespace {

const WireList& key_wires() {
  static const WireList wires{protocol::kKeyA, protocol::kKeyB};
  return wires;
}

}  // namespace

void DegradedKeyModel::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("DegradedKeyModel: epsilon must lie in [0, 1]");
  }
  if (contaminant.num_qubits() != 2 || !contaminant.has_wire(protocol::kKeyA) ||
      !contaminant.has_wire(protocol::kKeyB)) {
    throw std::invalid_argument("DegradedKeyModel: contaminant must be a state on keyA, keyB");
  }
}

DensityMatrix degrade_key(const DegradedKeyModel& model) {
  model.validate();
  const DensityMatrix phi = to_density(epr_phi_plus(protocol::kKeyA, protocol::kKeyB));
  const Matrix rho1 = reorder(model.contaminant, key_wires()).matrix();
  return DensityMatrix(key_wires(), (1.0 - model.epsilon) * phi.matrix() + model.epsilon * rho1);
}

double failure_probability_bound(const DegradedKeyModel& model) {
  model.validate();
  return model.epsilon;
}

PureState sample_degraded_key(const DegradedKeyModel& model, RandomStream& rng) {
  model.validate();
  if (!rng.bernoulli(model.epsilon)) return epr_phi_plus(protocol::kKeyA, protocol::kKeyB);
  const Matrix rho1 = reorder(model.contaminant, key_wires()).matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho1);
  const Eigen::VectorXd& w = solver.eigenvalues();
  const double u = rng.uniform();
  double acc = 0.0;
  Eigen::Index pick = w.size() - 1;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    acc += std::max(w[i], 0.0);
    if (u < acc) {
      pick = i;
      break;
    }
  }
  Vector v = solver.eigenvectors().col(pick);
  v /= v.norm();
  return PureState(key_wires(), std::move(v));
}

}  // namespace cqkd::channels
