// Copyright 2026 The mczeno Authors.
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

/**
 * @file
 * Discretized adiabatic evolution along a PathHamiltonian:
 *
 *   |psi(T)> = e^{-i H(T) dT} e^{-i H(T - dT) dT} ... e^{-i H(dT) dT} |psi(0)>,
 *
 * each factor the exact exponential of the instantaneous Hamiltonian.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <string>

#include "mczeno/error.hpp"
#include "mczeno/path.hpp"
#include "mczeno/spectral.hpp"
#include "mczeno/state.hpp"

namespace mczeno {

struct QaeResult {
  StateVector final_state;
  double final_energy = 0.0;   // <psi(T)|H_final|psi(T)>
  double ground_energy = 0.0;  // lowest eigenvalue of H_final
  double ground_fidelity = 0.0;
  std::size_t step_count = 0;
  double norm_drift = 0.0;  // | ||psi(T)|| - 1 |
};

/// Number of steps T / dT; throws unless it is a positive integer.
inline std::size_t qae_step_count(double total_time, double delta_t) {
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
    throw DomainError("evolve: time step must be positive");
  }
  const double ratio = total_time / delta_t;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw DomainError("evolve: T / dT = " + std::to_string(ratio) + " is not a positive integer");
  }
  return static_cast<std::size_t>(rounded);
}

/// One exact propagator step e^{-i H dt} applied through H's eigenbasis.
inline Eigen::VectorXcd propagate(const EigenSolution& es, const Eigen::VectorXcd& psi,
                                  double dt) {
  Eigen::VectorXcd c = es.eigenvectors.adjoint() * psi;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    c(j) *= std::polar(1.0, -es.eigenvalues(j) * dt);
  }
  return es.eigenvectors * c;
}

inline QaeResult evolve(const PathHamiltonian& p, double delta_t, const StateVector& psi0,
                        std::size_t qubit_cap = kDefaultQubitCap) {
  if (psi0.n_qubits() != p.n_qubits()) {
    throw DimensionError("evolve: initial state has " + std::to_string(psi0.n_qubits()) +
                         " qubits, path " + std::to_string(p.n_qubits()));
  }
  const std::size_t steps = qae_step_count(p.total_time(), delta_t);
  Eigen::VectorXcd psi = psi0.amplitudes();
  EigenSolution last;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double s = k == steps ? 1.0 : static_cast<double>(k) / static_cast<double>(steps);
    last = eig(h_at(p, s), qubit_cap);
    psi = propagate(last, psi, delta_t);
  }
  const double drift = std::abs(psi.norm() - 1.0);
  StateVector final_state(psi);
  QaeResult out{final_state, 0.0, last.ground_energy(), 0.0, steps, drift};
  out.final_energy = energy_expectation(final_state, p.h_final());
  out.ground_fidelity = ground_fidelity(final_state, last);
  return out;
}

}  // namespace mczeno
