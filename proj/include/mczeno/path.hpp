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
 * Interpolating Hamiltonian path
 *
 *   H(s) = (1 - s) H_initial + s H_final + alpha s (1 - s) sum_q X_q,
 *
 * with s = t / T, and its uniform discretization.
 */

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mczeno/error.hpp"
#include "mczeno/pauli.hpp"

namespace mczeno {

class PathHamiltonian {
 public:
  PathHamiltonian(PauliHamiltonian h_initial, PauliHamiltonian h_final, double alpha = 0.0,
                  double total_time = 1.0)
      : h_initial_(std::move(h_initial)),
        h_final_(std::move(h_final)),
        alpha_(alpha),
        total_time_(total_time) {
    if (h_initial_.n_qubits() != h_final_.n_qubits()) {
      throw DimensionError("PathHamiltonian: initial and final Hamiltonians act on " +
                           std::to_string(h_initial_.n_qubits()) + " and " +
                           std::to_string(h_final_.n_qubits()) + " qubits");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
      throw DomainError("PathHamiltonian: alpha must be finite and non-negative");
    }
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
      throw DomainError("PathHamiltonian: total time must be positive");
    }
  }

  const PauliHamiltonian& h_initial() const noexcept { return h_initial_; }
  const PauliHamiltonian& h_final() const noexcept { return h_final_; }
  double alpha() const noexcept { return alpha_; }
  double total_time() const noexcept { return total_time_; }
  std::size_t n_qubits() const noexcept { return h_final_.n_qubits(); }

  PathHamiltonian with_alpha(double alpha) const {
    return {h_initial_, h_final_, alpha, total_time_};
  }
  PathHamiltonian with_total_time(double total_time) const {
    return {h_initial_, h_final_, alpha_, total_time};
  }

  /// Driver strength alpha s (1 - s) at path parameter s.
  double driver_strength(double s) const noexcept { return alpha_ * s * (1.0 - s); }

 private:
  PauliHamiltonian h_initial_;
  PauliHamiltonian h_final_;
  double alpha_;
  double total_time_;
};

/// Instantaneous Hamiltonian at s in [0, 1].
inline PauliHamiltonian h_at(const PathHamiltonian& p, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("h_at: s = " + std::to_string(s) + " outside [0, 1]");
  }
  std::vector<PauliTerm> terms;
  terms.reserve(p.h_initial().size() + p.h_final().size() + p.n_qubits());
  if (s < 1.0) {
    for (const auto& t : p.h_initial()) terms.push_back(t.with_coefficient((1.0 - s) * t.coefficient()));
  }
  if (s > 0.0) {
    for (const auto& t : p.h_final()) terms.push_back(t.with_coefficient(s * t.coefficient()));
  }
  if (const double g = p.driver_strength(s); g != 0.0) {
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
      terms.push_back(PauliTerm::single(p.n_qubits(), q, 'X', g));
    }
  }
  return {p.n_qubits(), std::move(terms)};
}

/// H at s = k / n_steps for k = 0..n_steps.
inline std::vector<PauliHamiltonian> discretize(const PathHamiltonian& p, std::size_t n_steps) {
  if (n_steps == 0) throw DomainError("discretize: need at least one step");
  std::vector<PauliHamiltonian> out;
  out.reserve(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) {
    const double s = k == n_steps ? 1.0 : static_cast<double>(k) / static_cast<double>(n_steps);
    out.push_back(h_at(p, s));
  }
  return out;
}

}  // namespace mczeno
