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

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mczeno/error.hpp"
#include "mczeno/pauli.hpp"
#include "mczeno/spectral.hpp"

namespace mczeno {

inline constexpr double kNormTolerance = 1e-9;
/// Eigenvalues closer than this are treated as one degenerate level.
inline constexpr double kEigenvalueTolerance = 1e-9;

/// Normalized amplitude vector over 2^n basis states.
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    const auto dim = static_cast<std::size_t>(amplitudes_.size());
    if (dim < 2 || !std::has_single_bit(dim)) {
      throw DimensionError("StateVector: length " + std::to_string(dim) +
                           " is not a power of two >= 2");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
      throw DomainError("StateVector: norm " + std::to_string(amplitudes_.norm()) + " != 1");
    }
  }

  /// Rescales `v` to unit norm first.
  static StateVector normalized(const Eigen::VectorXcd& v) {
    const double n = v.norm();
    if (n == 0.0) throw DomainError("StateVector::normalized: zero vector");
    return StateVector(v / n);
  }

  static StateVector basis(std::size_t n_qubits, Mask index) {
    if (n_qubits == 0 || n_qubits > kMaxMaskQubits || index >= (Mask{1} << n_qubits)) {
      throw DimensionError("StateVector::basis: index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(Mask{1} << n_qubits));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
  }

  /// Basis state from a bit string, qubit 0 rightmost.
  static StateVector from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxMaskQubits) {
      throw ParseError("bad basis string '" + std::string(bits) + "'");
    }
    Mask index = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ParseError("bad basis string '" + std::string(bits) + "'");
      index = (index << 1) | (c == '1' ? 1U : 0U);
    }
    return basis(bits.size(), index);
  }

  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  std::size_t n_qubits() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(dimension()));
  }
  double norm() const { return amplitudes_.norm(); }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// |<a|b>|^2
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("fidelity: dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

inline constexpr double kExpectationImagTolerance = 1e-10;

/// Re <psi|H|psi>; a larger imaginary residue than 1e-10 is an error.
inline double energy_expectation(const StateVector& psi, const PauliHamiltonian& h) {
  if (psi.n_qubits() != h.n_qubits()) {
    throw DimensionError("energy_expectation: state has " + std::to_string(psi.n_qubits()) +
                         " qubits, Hamiltonian " + std::to_string(h.n_qubits()));
  }
  const Complex e = psi.amplitudes().dot(mczeno::apply(h, psi.amplitudes()));
  if (std::abs(e.imag()) > kExpectationImagTolerance) {
    throw DomainError("energy_expectation: imaginary residue " + std::to_string(e.imag()));
  }
  return e.real();
}

/// Eigensolution with a reproducible ordering of degenerate levels. For a
/// diagonal Hamiltonian the eigenvectors are basis states, ordered by
/// energy and, within a degenerate level, by ascending basis index. Other
/// Hamiltonians go through eig().
inline EigenSolution ordered_eig(const PauliHamiltonian& h,
                                 std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  if (!is_all_z(h)) return eig(h, qubit_cap);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  std::vector<double> energy(dim);
  for (std::size_t b = 0; b < dim; ++b) energy[b] = diagonal_energy(h, b);
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return energy[a] < energy[b]; });
  for (std::size_t start = 0; start < dim;) {
    std::size_t stop = start + 1;
    while (stop < dim && energy[order[stop]] - energy[order[start]] <= kEigenvalueTolerance) ++stop;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(stop));
    start = stop;
  }
  EigenSolution out;
  const auto n = static_cast<Eigen::Index>(dim);
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix::Zero(n, n);
  for (std::size_t j = 0; j < dim; ++j) {
    out.eigenvalues(static_cast<Eigen::Index>(j)) = energy[order[j]];
    out.eigenvectors(static_cast<Eigen::Index>(order[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return out;
}

/// Half-open index ranges of eigenvalues within kEigenvalueTolerance of
/// the first member of their level.
inline std::vector<std::pair<std::size_t, std::size_t>> degenerate_levels(
    const Eigen::VectorXd& eigenvalues, double tolerance = kEigenvalueTolerance) {
  std::vector<std::pair<std::size_t, std::size_t>> levels;
  const auto n = static_cast<std::size_t>(eigenvalues.size());
  for (std::size_t start = 0; start < n;) {
    std::size_t stop = start + 1;
    while (stop < n && eigenvalues(static_cast<Eigen::Index>(stop)) -
                               eigenvalues(static_cast<Eigen::Index>(start)) <=
                           tolerance)
      ++stop;
    levels.emplace_back(start, stop);
    start = stop;
  }
  return levels;
}

/// Weight of psi in the ground eigenspace of `es`.
inline double ground_fidelity(const StateVector& psi, const EigenSolution& es) {
  if (psi.dimension() != es.size()) throw DimensionError("ground_fidelity: dimension mismatch");
  const auto [begin, end] = degenerate_levels(es.eigenvalues).front();
  const auto width = static_cast<Eigen::Index>(end - begin);
  return (es.eigenvectors.middleCols(static_cast<Eigen::Index>(begin), width).adjoint() *
          psi.amplitudes())
      .squaredNorm();
}

}  // namespace mczeno
