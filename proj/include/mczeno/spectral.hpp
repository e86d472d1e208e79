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
 * Exact eigensolutions of small Hamiltonians and level spectra along a path.
 *
 * Dense LAPACK divide-and-conquer drivers do the work: dsyevd when the
 * Hamiltonian is real (even number of Y factors in every term), zheevd
 * otherwise.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Dense>

#include "mczeno/error.hpp"
#include "mczeno/path.hpp"
#include "mczeno/pauli.hpp"
#include "mczeno/text.hpp"

namespace mczeno {

/// Ascending eigenvalues; column j of eigenvectors belongs to eigenvalue j.
struct EigenSolution {
  Eigen::VectorXd eigenvalues;
  DenseMatrix eigenvectors;

  std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
  double ground_energy() const { return eigenvalues(0); }
  Eigen::VectorXcd vector(std::size_t j) const {
    return eigenvectors.col(static_cast<Eigen::Index>(j));
  }
};

inline constexpr double kHermiticityTolerance = 1e-12;

namespace detail {

inline void check_lapack(lapack_int info, const char* routine) {
  if (info != 0) {
    throw Error(std::string(routine) + " failed with info = " + std::to_string(info));
  }
}

inline EigenSolution eig_real(Eigen::MatrixXd a) {
  const auto n = static_cast<lapack_int>(a.rows());
  EigenSolution out;
  out.eigenvalues.resize(n);
  if (n > 0) {
    check_lapack(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, out.eigenvalues.data()),
                 "dsyevd");
  }
  out.eigenvectors = a.cast<Complex>();
  return out;
}

inline EigenSolution eig_complex(DenseMatrix a) {
  const auto n = static_cast<lapack_int>(a.rows());
  EigenSolution out;
  out.eigenvalues.resize(n);
  if (n > 0) {
    check_lapack(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, out.eigenvalues.data()),
                 "zheevd");
  }
  out.eigenvectors = std::move(a);
  return out;
}

}  // namespace detail

/// Eigendecomposition of an explicit matrix; rejects non-Hermitian input.
inline EigenSolution eig(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eig: matrix is not square");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.size() > 0 && defect > kHermiticityTolerance) {
    throw DomainError("eig: matrix is not Hermitian (max |M - M^H| = " + std::to_string(defect) +
                      ")");
  }
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) return detail::eig_real(m.real());
  return detail::eig_complex(m);
}

/// Full spectrum of a Pauli Hamiltonian.
inline EigenSolution eig(const PauliHamiltonian& h, std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  if (is_real(h)) return detail::eig_real(real_dense_matrix(h, qubit_cap));
  return detail::eig_complex(dense_matrix(h, qubit_cap));
}

/// The k lowest eigenpairs.
inline EigenSolution lowest_k(const PauliHamiltonian& h, std::size_t k,
                              std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (k == 0 || k > dim) {
    throw DomainError("lowest_k: k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(dim) + "]");
  }
  EigenSolution full = eig(h, qubit_cap);
  const auto kk = static_cast<Eigen::Index>(k);
  return {full.eigenvalues.head(kk), full.eigenvectors.leftCols(kk)};
}

struct PathSpectrum {
  std::vector<double> s_values;
  std::vector<std::vector<double>> levels;  // levels[j] ascending, at s_values[j]

  bool operator==(const PathSpectrum&) const = default;

  /// Smallest E1 - E0 over the sampled points (needs k >= 2).
  double min_gap() const {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& l : levels) {
      if (l.size() < 2) throw DomainError("min_gap: need at least two levels");
      gap = std::min(gap, l[1] - l[0]);
    }
    return gap;
  }
};

namespace detail {

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Lowest k levels at s = j / (n_points - 1), j = 0..n_points-1.
inline PathSpectrum path_spectrum(const PathHamiltonian& p, std::size_t n_points, std::size_t k,
                                  std::size_t qubit_cap = kDefaultQubitCap) {
  if (n_points < 2) throw DomainError("path_spectrum: need at least two points");
  detail::check_cap(p.n_qubits(), qubit_cap);
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  if (k == 0 || k > dim) throw DomainError("path_spectrum: k outside [1, 2^n]");
  PathSpectrum out;
  out.s_values.resize(n_points);
  out.levels.resize(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    out.s_values[j] =
        j + 1 == n_points ? 1.0 : static_cast<double>(j) / static_cast<double>(n_points - 1);
  }
  detail::parallel_for(n_points, [&](std::size_t j) {
    const EigenSolution es = eig(h_at(p, out.s_values[j]), qubit_cap);
    out.levels[j].assign(es.eigenvalues.data(), es.eigenvalues.data() + k);
  });
  return out;
}

/// CSV with header `s,E0_Ha,...`; values at full round-trip precision.
inline void write_csv(std::ostream& out, const PathSpectrum& spectrum) {
  out << "s";
  const std::size_t k = spectrum.levels.empty() ? 0 : spectrum.levels.front().size();
  for (std::size_t i = 0; i < k; ++i) out << ",E" << i << "_Ha";
  out << '\n';
  for (std::size_t j = 0; j < spectrum.s_values.size(); ++j) {
    out << detail::format_double(spectrum.s_values[j]);
    for (double e : spectrum.levels[j]) out << ',' << detail::format_double(e);
    out << '\n';
  }
}

}  // namespace mczeno
