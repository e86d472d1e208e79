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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mczeno/pauli.hpp"
#include "mczeno/pauli_io.hpp"
#include "test_support.hpp"

using namespace mczeno;

namespace {

PauliHamiltonian two_qubit() {
  return {2, {parse_pauli("2 II"), parse_pauli("3 IX"), parse_pauli("-4 IZ"), parse_pauli("5 ZI")}};
}

std::vector<std::string> all_labels(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("IXYZ")) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(PauliTerm, RejectsBadConstruction) {
  EXPECT_THROW(PauliTerm(0, 0, 0, 1.0), DimensionError);
  EXPECT_THROW(PauliTerm(2, 0b100, 0, 1.0), DomainError);
  EXPECT_THROW(PauliTerm(2, 0, 0, std::nan("")), DomainError);
  EXPECT_THROW(PauliTerm::single(2, 2, 'X'), DimensionError);
  EXPECT_THROW(PauliTerm::single(2, 0, 'Q'), DomainError);
}

TEST(PauliTerm, LabelAndOps) {
  const auto t = PauliTerm(3, 0b011, 0b110, 1.0);  // q0 X, q1 Y, q2 Z
  EXPECT_EQ(t.label(), "ZYX");
  EXPECT_EQ(t.op(0), 'X');
  EXPECT_EQ(t.y_count(), 1);
  EXPECT_FALSE(t.is_diagonal());
  EXPECT_TRUE(PauliTerm::identity(3).is_identity());
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(parse_label("II"), parse_label("IX")));
  EXPECT_FALSE(commutes(parse_label("IX"), parse_label("IZ")));
  EXPECT_TRUE(commutes(parse_label("XY"), parse_label("YX")));
  EXPECT_THROW(commutes(parse_label("X"), parse_label("XX")), DimensionError);
}

TEST(Commutes, ExhaustiveAgainstMatrices) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto labels = all_labels(n);
    std::vector<Eigen::MatrixXcd> mats;
    for (const auto& l : labels) mats.push_back(oracle::label_matrix(l));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        const bool by_matrix = (mats[i] * mats[j] - mats[j] * mats[i]).norm() < 1e-10;
        const auto a = parse_label(labels[i]);
        const auto b = parse_label(labels[j]);
        ASSERT_EQ(commutes(a, b), by_matrix) << labels[i] << " " << labels[j];
        ASSERT_EQ(commutes(a, b), commutes(b, a));
      }
    }
  }
}

TEST(TermMatrix, Examples) {
  const auto z = dense_matrix(PauliHamiltonian(1, {parse_label("Z")}));
  EXPECT_EQ(z, (Eigen::Matrix2cd() << 1, 0, 0, -1).finished());
  const auto x = dense_matrix(PauliHamiltonian(1, {parse_label("X")}));
  EXPECT_EQ(x, (Eigen::Matrix2cd() << 0, 1, 1, 0).finished());
  const auto zz = dense_matrix(PauliHamiltonian(2, {parse_label("ZZ", 2.0)}));
  EXPECT_EQ(zz, Eigen::Vector4cd(2, -2, -2, 2).asDiagonal().toDenseMatrix());
}

TEST(TermMatrix, MatchesKroneckerOracleWithOneEntryPerRow) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& l : all_labels(n)) {
      const auto t = parse_label(l, 0.75);
      const SparseMatrix m = term_matrix(t);
      EXPECT_LT((DenseMatrix(m) - 0.75 * oracle::label_matrix(l)).norm(), 1e-14) << l;
      for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
        EXPECT_EQ(m.innerVector(r).nonZeros(), 1) << l;
      }
    }
  }
}

TEST(TermMatrix, CapIsEnforced) {
  EXPECT_THROW(term_matrix(PauliTerm::identity(15)), DimensionError);
  EXPECT_NO_THROW(term_matrix(PauliTerm::identity(3), 3));
  EXPECT_THROW(ham_matrix(PauliHamiltonian(4), 3), DimensionError);
}

TEST(HamMatrix, TwoQubitSpectrumFromKroneckerOracle) {
  const auto h = two_qubit();
  const DenseMatrix m = dense_matrix(h);
  EXPECT_LT((m - oracle::matrix(h)).norm(), 1e-14);
  EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  // Block diagonal in the Z eigenvalue of qubit 1: 7 + 3X - 4Z and -3 + 3X - 4Z,
  // each with eigenvalues centre +- 5.
  const Eigen::VectorXd ev = oracle::eigenvalues(m);
  const Eigen::Vector4d expected(-8, 2, 2, 12);
  EXPECT_LT((ev - expected).norm(), 1e-12);
}

TEST(HamMatrix, EmptyAndIdentity) {
  EXPECT_EQ(dense_matrix(PauliHamiltonian(2)), DenseMatrix::Zero(4, 4));
  EXPECT_EQ(dense_matrix(PauliHamiltonian(1, {PauliTerm::identity(1)})), DenseMatrix::Identity(2, 2));
}

TEST(HamMatrix, LinearAndAllZIsDiagonal) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = oracle::random_hamiltonian(3, 6, rng);
    const auto b = oracle::random_hamiltonian(3, 6, rng);
    EXPECT_LT((dense_matrix(a + b) - dense_matrix(a) - dense_matrix(b)).cwiseAbs().maxCoeff(), 1e-12);
  }
  const PauliHamiltonian diag(3, {parse_label("ZZI", 1.5), parse_label("IIZ", -0.5),
                                  parse_label("ZIZ", 0.25), PauliTerm::identity(3, 2.0)});
  const DenseMatrix m = dense_matrix(diag);
  EXPECT_EQ((m - DenseMatrix(m.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(HamMatrix, ApplyAndDiagonalEnergyAgreeWithMatrix) {
  std::mt19937_64 rng(5);
  const auto h = oracle::random_hamiltonian(4, 10, rng);
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(16);
  EXPECT_LT((mczeno::apply(h, v) - oracle::matrix(h) * v).norm(), 1e-12);
  const PauliHamiltonian z(2, {parse_label("ZI", 5), parse_label("IZ", -4), PauliTerm::identity(2, 2)});
  for (Mask b = 0; b < 4; ++b) EXPECT_DOUBLE_EQ(diagonal_energy(z, b), oracle::matrix(z)(b, b).real());
}

TEST(PauliHamiltonian, CanonicalMergesAndDrops) {
  const PauliHamiltonian h(2, {parse_label("XI", 1.0), parse_label("IZ", 2.0), parse_label("XI", -1.0),
                               parse_label("IZ", 0.5), parse_label("ZZ", 1e-15)});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].label(), "IZ");
  EXPECT_DOUBLE_EQ(h[0].coefficient(), 2.5);
  EXPECT_THROW(PauliHamiltonian(2, {parse_label("XII")}), DimensionError);
}

TEST(PauliHamiltonian, OrderIndependent) {
  std::mt19937_64 rng(3);
  auto h = oracle::random_hamiltonian(3, 12, rng);
  std::vector<PauliTerm> shuffled(h.begin(), h.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_EQ(PauliHamiltonian(3, shuffled), h);
}

TEST(IsAllZ, Examples) {
  EXPECT_TRUE(is_all_z(PauliHamiltonian(2, {parse_label("II"), parse_label("IZ"), parse_label("ZI")})));
  EXPECT_FALSE(is_all_z(PauliHamiltonian(2, {parse_label("IX")})));
  EXPECT_TRUE(is_all_z(PauliHamiltonian(2)));
}

TEST(ParsePauli, Examples) {
  const auto t = parse_pauli("5.0 ZI");
  EXPECT_EQ(t.z_mask(), 0b10u);
  EXPECT_EQ(t.x_mask(), 0u);
  EXPECT_EQ(t.coefficient(), 5.0);
  EXPECT_TRUE(parse_pauli("1.0 II").is_identity());
  const auto xy = parse_pauli("2.5 XY");
  EXPECT_EQ(xy.x_mask(), 0b11u);
  EXPECT_EQ(xy.z_mask(), 0b01u);
  EXPECT_EQ(parse_pauli("-4.0 IZ").coefficient(), -4.0);
}

TEST(ParsePauli, Errors) {
  EXPECT_THROW(parse_pauli("1.0 XQ"), ParseError);
  EXPECT_THROW(parse_pauli("abc XZ"), ParseError);
  EXPECT_THROW(parse_pauli("1.0"), ParseError);
  EXPECT_THROW(parse_pauli("inf X"), ParseError);
  EXPECT_THROW(parse_pauli("1.0 X extra"), ParseError);
}

TEST(ParsePauli, RoundTripProperty) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int rep = 0; rep < 500; ++rep) {
    const auto label = oracle::random_label(1 + rng() % 8, rng);
    const auto t = parse_label(label, u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10));
    EXPECT_EQ(parse_pauli(format_pauli(t)), t) << format_pauli(t);
  }
}

TEST(PauliText, RoundTripThroughStreamAndJson) {
  std::mt19937_64 rng(23);
  const auto h = oracle::random_hamiltonian(4, 9, rng);
  std::stringstream ss;
  write_pauli_text(ss, h);
  EXPECT_EQ(read_pauli_text(ss), h);
  EXPECT_EQ(hamiltonian_from_json(to_json(h)), h);
  std::stringstream empty;
  write_pauli_text(empty, PauliHamiltonian(3));
  EXPECT_EQ(read_pauli_text(empty), PauliHamiltonian(3));
}

TEST(PauliText, CommentsAndErrors) {
  std::stringstream ok("# comment\n  2 II  # trailing\n\n3 IX\n");
  const auto h = read_pauli_text(ok);
  EXPECT_EQ(h.size(), 2u);
  std::stringstream mixed("1 X\n1 XX\n");
  EXPECT_THROW(read_pauli_text(mixed), ParseError);
  std::stringstream width("# n_qubits = 3\n1 XX\n");
  EXPECT_THROW(read_pauli_text(width), ParseError);
}

TEST(PauliText, BundledFileLoads) {
  const auto h = load_hamiltonian(oracle::data("clique_2q.pauli"));
  EXPECT_EQ(h, two_qubit());
  EXPECT_THROW(load_hamiltonian(oracle::data("missing.pauli")), ParseError);
}
