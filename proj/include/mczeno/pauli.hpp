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
 * Weighted Pauli products in symplectic (x, z) bit-mask form, Hermitian sums
 * of them, and their matrix realizations.
 *
 * Qubit 0 is the least significant bit of both masks and of computational
 * basis indices, and the rightmost character of a label: "ZI" is Z on
 * qubit 1. Z|0> = +|0>, so basis index b has Z_q eigenvalue (-1)^{b_q}.
 * A term with masks (x, z) denotes the plain tensor product of single-qubit
 * Paulis, i.e. i^{|x & z|} X^x Z^z.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "mczeno/error.hpp"

namespace mczeno {

using Mask = std::uint64_t;
using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using DenseMatrix = Eigen::MatrixXcd;

/// Hard limit imposed by the 64-bit masks.
inline constexpr std::size_t kMaxMaskQubits = 62;
/// Default cap for anything that materializes a 2^n-dimensional object.
inline constexpr std::size_t kDefaultQubitCap = 14;
/// Merged coefficients at or below this magnitude are dropped.
inline constexpr double kDropTolerance = 1e-13;

namespace detail {

inline constexpr Mask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool parity(Mask m) noexcept { return (std::popcount(m) & 1) != 0; }

/// i^k for integer k.
inline Complex i_pow(int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline void check_cap(std::size_t n_qubits, std::size_t qubit_cap) {
  if (n_qubits > qubit_cap) {
    throw DimensionError("dimension cap exceeded: " + std::to_string(n_qubits) +
                         " qubits > cap " + std::to_string(qubit_cap));
  }
}

}  // namespace detail

/// One weighted n-qubit Pauli product.
class PauliTerm {
 public:
  PauliTerm(std::size_t n_qubits, Mask x_mask, Mask z_mask, double coefficient)
      : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask), coefficient_(coefficient) {
    if (n_qubits == 0 || n_qubits > kMaxMaskQubits) {
      throw DimensionError("PauliTerm: qubit count must be in [1, " +
                           std::to_string(kMaxMaskQubits) + "], got " +
                           std::to_string(n_qubits));
    }
    const Mask outside = ~detail::low_bits(n_qubits);
    if ((x_mask & outside) != 0 || (z_mask & outside) != 0) {
      throw DomainError("PauliTerm: mask bits set beyond qubit " + std::to_string(n_qubits - 1));
    }
    if (!std::isfinite(coefficient)) {
      throw DomainError("PauliTerm: coefficient is not finite");
    }
  }

  static PauliTerm identity(std::size_t n_qubits, double coefficient = 1.0) {
    return {n_qubits, 0, 0, coefficient};
  }

  /// `op` in {I, X, Y, Z} acting on `qubit`, identity elsewhere.
  static PauliTerm single(std::size_t n_qubits, std::size_t qubit, char op,
                          double coefficient = 1.0) {
    if (qubit >= n_qubits) throw DimensionError("PauliTerm::single: qubit out of range");
    const Mask bit = Mask{1} << qubit;
    switch (op) {
      case 'I': return {n_qubits, 0, 0, coefficient};
      case 'X': return {n_qubits, bit, 0, coefficient};
      case 'Y': return {n_qubits, bit, bit, coefficient};
      case 'Z': return {n_qubits, 0, bit, coefficient};
      default: throw DomainError(std::string("PauliTerm::single: illegal operator '") + op + "'");
    }
  }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  Mask x_mask() const noexcept { return x_mask_; }
  Mask z_mask() const noexcept { return z_mask_; }
  double coefficient() const noexcept { return coefficient_; }

  bool is_identity() const noexcept { return x_mask_ == 0 && z_mask_ == 0; }
  bool is_diagonal() const noexcept { return x_mask_ == 0; }
  int y_count() const noexcept { return std::popcount(x_mask_ & z_mask_); }

  char op(std::size_t qubit) const noexcept {
    const bool x = ((x_mask_ >> qubit) & 1U) != 0;
    const bool z = ((z_mask_ >> qubit) & 1U) != 0;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  std::string label() const {
    std::string out(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) out[n_qubits_ - 1 - q] = op(q);
    return out;
  }

  PauliTerm with_coefficient(double coefficient) const {
    return {n_qubits_, x_mask_, z_mask_, coefficient};
  }

  bool same_operator(const PauliTerm& other) const noexcept {
    return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
  }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  std::size_t n_qubits_;
  Mask x_mask_;
  Mask z_mask_;
  double coefficient_;
};

/// True iff the two Pauli products commute.
inline bool commutes(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("commutes: qubit counts differ (" + std::to_string(a.n_qubits()) +
                         " vs " + std::to_string(b.n_qubits()) + ")");
  }
  return detail::parity(a.x_mask() & b.z_mask()) == detail::parity(a.z_mask() & b.x_mask());
}

/// Weighted sum of Pauli products with real coefficients.
///
/// Always canonical: duplicates merged, near-zero terms dropped, sorted by
/// (z_mask, x_mask).
class PauliHamiltonian {
 public:
  explicit PauliHamiltonian(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxMaskQubits) {
      throw DimensionError("PauliHamiltonian: invalid qubit count " + std::to_string(n_qubits));
    }
  }

  PauliHamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms)
      : PauliHamiltonian(n_qubits) {
    for (const auto& t : terms) {
      if (t.n_qubits() != n_qubits) {
        throw DimensionError("PauliHamiltonian: term " + t.label() + " has " +
                             std::to_string(t.n_qubits()) + " qubits, expected " +
                             std::to_string(n_qubits));
      }
    }
    terms_ = canonicalize(std::move(terms));
  }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const PauliTerm& operator[](std::size_t i) const { return terms_.at(i); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::optional<double> coefficient_of(Mask x_mask, Mask z_mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{z_mask, x_mask},
                               [](const PauliTerm& t, const std::pair<Mask, Mask>& key) {
                                 return std::pair{t.z_mask(), t.x_mask()} < key;
                               });
    if (it != terms_.end() && it->z_mask() == z_mask && it->x_mask() == x_mask) {
      return it->coefficient();
    }
    return std::nullopt;
  }

  double identity_coefficient() const { return coefficient_of(0, 0).value_or(0.0); }

  /// Sum of |coefficient| over all terms.
  double one_norm() const noexcept {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient());
    return s;
  }

  PauliHamiltonian scaled(double factor) const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.with_coefficient(t.coefficient() * factor));
    return {n_qubits_, std::move(out)};
  }

  friend PauliHamiltonian operator+(const PauliHamiltonian& a, const PauliHamiltonian& b) {
    if (a.n_qubits_ != b.n_qubits_) {
      throw DimensionError("PauliHamiltonian +: qubit counts differ");
    }
    std::vector<PauliTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return {a.n_qubits_, std::move(all)};
  }

  friend PauliHamiltonian operator*(double factor, const PauliHamiltonian& h) {
    return h.scaled(factor);
  }

  friend bool operator==(const PauliHamiltonian&, const PauliHamiltonian&) = default;

 private:
  static std::vector<PauliTerm> canonicalize(std::vector<PauliTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
      return std::pair{a.z_mask(), a.x_mask()} < std::pair{b.z_mask(), b.x_mask()};
    });
    std::vector<PauliTerm> merged;
    merged.reserve(terms.size());
    for (const auto& t : terms) {
      if (!merged.empty() && merged.back().same_operator(t)) {
        merged.back() = t.with_coefficient(merged.back().coefficient() + t.coefficient());
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const PauliTerm& t) {
      return std::abs(t.coefficient()) <= kDropTolerance;
    });
    return merged;
  }

  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Every term is a product of Z and identity factors (vacuously true when empty).
inline bool is_all_z(const PauliHamiltonian& h) noexcept {
  return std::all_of(h.begin(), h.end(), [](const PauliTerm& t) { return t.is_diagonal(); });
}

/// The matrix is real symmetric: no term carries an odd number of Y factors.
inline bool is_real(const PauliHamiltonian& h) noexcept {
  return std::all_of(h.begin(), h.end(), [](const PauliTerm& t) { return t.y_count() % 2 == 0; });
}

/// Transverse driver sum_q X_q.
inline PauliHamiltonian x_driver(std::size_t n_qubits) {
  std::vector<PauliTerm> terms;
  terms.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) terms.push_back(PauliTerm::single(n_qubits, q, 'X'));
  return {n_qubits, std::move(terms)};
}

namespace detail {

/// Matrix element <b ^ x| P |b> of the unit-coefficient product.
inline Complex column_value(const PauliTerm& t, Mask column) noexcept {
  const Complex phase = i_pow(t.y_count());
  return parity(t.z_mask() & column) ? -phase : phase;
}

}  // namespace detail

/// Sparse matrix of one term: exactly one nonzero per row.
inline SparseMatrix term_matrix(const PauliTerm& t, std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(t.n_qubits(), qubit_cap);
  const auto dim = static_cast<Eigen::Index>(Mask{1} << t.n_qubits());
  SparseMatrix m(dim, dim);
  m.reserve(Eigen::VectorXi::Constant(dim, 1));
  for (Mask row = 0; row < static_cast<Mask>(dim); ++row) {
    const Mask col = row ^ t.x_mask();
    m.insert(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        t.coefficient() * detail::column_value(t, col);
  }
  m.makeCompressed();
  return m;
}

/// Sparse matrix of the whole sum.
inline SparseMatrix ham_matrix(const PauliHamiltonian& h, std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  const Mask dim = Mask{1} << h.n_qubits();
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(h.size() * dim);
  for (const auto& t : h) {
    for (Mask col = 0; col < dim; ++col) {
      triplets.emplace_back(static_cast<int>(col ^ t.x_mask()), static_cast<int>(col),
                            t.coefficient() * detail::column_value(t, col));
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

/// Dense complex matrix of the sum.
inline DenseMatrix dense_matrix(const PauliHamiltonian& h, std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  const Mask dim = Mask{1} << h.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : h) {
    for (Mask col = 0; col < dim; ++col) {
      m(static_cast<Eigen::Index>(col ^ t.x_mask()), static_cast<Eigen::Index>(col)) +=
          t.coefficient() * detail::column_value(t, col);
    }
  }
  return m;
}

/// Dense real matrix; requires is_real(h).
inline Eigen::MatrixXd real_dense_matrix(const PauliHamiltonian& h,
                                         std::size_t qubit_cap = kDefaultQubitCap) {
  detail::check_cap(h.n_qubits(), qubit_cap);
  if (!is_real(h)) throw DomainError("real_dense_matrix: Hamiltonian has imaginary entries");
  const Mask dim = Mask{1} << h.n_qubits();
  Eigen::MatrixXd m =
      Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : h) {
    for (Mask col = 0; col < dim; ++col) {
      m(static_cast<Eigen::Index>(col ^ t.x_mask()), static_cast<Eigen::Index>(col)) +=
          t.coefficient() * detail::column_value(t, col).real();
    }
  }
  return m;
}

/// H|v> without materializing H.
inline Eigen::VectorXcd apply(const PauliHamiltonian& h, const Eigen::VectorXcd& v) {
  const Mask dim = Mask{1} << h.n_qubits();
  if (static_cast<Mask>(v.size()) != dim) {
    throw DimensionError("apply: vector length " + std::to_string(v.size()) + " != 2^" +
                         std::to_string(h.n_qubits()));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& t : h) {
    for (Mask col = 0; col < dim; ++col) {
      out(static_cast<Eigen::Index>(col ^ t.x_mask())) +=
          t.coefficient() * detail::column_value(t, col) * v(static_cast<Eigen::Index>(col));
    }
  }
  return out;
}

/// Energy of computational basis state `b` under the diagonal part of h.
inline double diagonal_energy(const PauliHamiltonian& h, Mask b) noexcept {
  double e = 0.0;
  for (const auto& t : h) {
    if (!t.is_diagonal()) continue;
    e += detail::parity(t.z_mask() & b) ? -t.coefficient() : t.coefficient();
  }
  return e;
}

}  // namespace mczeno
