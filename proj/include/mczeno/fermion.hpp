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
 * Second-quantized molecular integrals and their qubit encodings.
 *
 * The Hamiltonian is
 *
 *   H = core + sum_{ab} t_ab a+_a a_b
 *            + 1/2 sum_{abcd} u_abcd a+_a a+_c a_d a_b,
 *
 * with u_abcd = (ab|cd) in chemist order over spin-orbitals. Spin-orbitals
 * are blocked: spatial orbital p gives alpha spin-orbital p and beta
 * spin-orbital p + norb.
 */

#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mczeno/error.hpp"
#include "mczeno/pauli.hpp"
#include "mczeno/pauli_io.hpp"
#include "mczeno/text.hpp"

namespace mczeno {

/// One- and two-body integrals over spin-orbitals, in Hartree.
class FermionIntegrals {
 public:
  explicit FermionIntegrals(std::size_t n_orbitals, double core_energy = 0.0)
      : n_(n_orbitals),
        one_body_(n_orbitals * n_orbitals, 0.0),
        two_body_(n_orbitals * n_orbitals * n_orbitals * n_orbitals, 0.0),
        core_energy_(core_energy) {
    if (n_orbitals == 0) throw DomainError("FermionIntegrals: need at least one orbital");
  }

  std::size_t n_orbitals() const noexcept { return n_; }
  double core_energy() const noexcept { return core_energy_; }
  void set_core_energy(double e) noexcept { core_energy_ = e; }

  double one_body(std::size_t a, std::size_t b) const { return one_body_.at(a * n_ + b); }
  double two_body(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return two_body_.at(((a * n_ + b) * n_ + c) * n_ + d);
  }
  double& one_body(std::size_t a, std::size_t b) { return one_body_.at(a * n_ + b); }
  double& two_body(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return two_body_.at(((a * n_ + b) * n_ + c) * n_ + d);
  }

  /// Max deviation of t from symmetry and of u from the (ab|cd) = (ba|dc) = (cd|ab)
  /// relations that make H Hermitian.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        worst = std::max(worst, std::abs(one_body(a, b) - one_body(b, a)));
        for (std::size_t c = 0; c < n_; ++c)
          for (std::size_t d = 0; d < n_; ++d) {
            const double u = two_body(a, b, c, d);
            worst = std::max(worst, std::abs(u - two_body(b, a, d, c)));
            worst = std::max(worst, std::abs(u - two_body(c, d, a, b)));
          }
      }
    return worst;
  }

  friend bool operator==(const FermionIntegrals&, const FermionIntegrals&) = default;

 private:
  std::size_t n_;
  std::vector<double> one_body_;
  std::vector<double> two_body_;
  double core_energy_;
};

namespace detail {

inline std::size_t namelist_int(const std::string& header, const std::string& key, bool required,
                                std::size_t fallback = 0) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const bool starts_word =
        pos == 0 || !(std::isalnum(static_cast<unsigned char>(header[pos - 1])) ||
                      header[pos - 1] == '_');
    std::size_t eq = pos + key.size();
    while (eq < header.size() && std::isspace(static_cast<unsigned char>(header[eq]))) ++eq;
    if (starts_word && eq < header.size() && header[eq] == '=') {
      std::size_t begin = eq + 1;
      while (begin < header.size() && std::isspace(static_cast<unsigned char>(header[begin])))
        ++begin;
      std::size_t end = begin;
      while (end < header.size() && (std::isdigit(static_cast<unsigned char>(header[end])) ||
                                     header[end] == '-'))
        ++end;
      const double v = parse_double(std::string_view(header).substr(begin, end - begin), key);
      if (v < 0) throw ParseError("FCIDUMP header: negative " + key);
      return static_cast<std::size_t>(v);
    }
    pos += key.size();
  }
  if (required) throw ParseError("FCIDUMP header: missing " + key);
  return fallback;
}

}  // namespace detail

/// Reads an FCIDUMP stream over spatial orbitals (restricted, real) and
/// expands it to spin-orbital integrals.
///
/// Records are `value i j k l` with 1-based indices: all-zero indices give
/// the core energy, `i j 0 0` a one-body integral, `i j k l` the two-body
/// integral (ij|kl). Permutational symmetry is filled in; `i 0 0 0`
/// (orbital energy) records are ignored.
inline FermionIntegrals parse_fcidump(std::istream& in) {
  std::string header;
  std::string line;
  bool closed = false;
  while (std::getline(in, line)) {
    header += line;
    header += ' ';
    std::string upper = line;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    // Namelist terminators: &END, or a trailing '/'.
    if (upper.find("&END") != std::string::npos || detail::trim(upper).ends_with('/')) {
      closed = true;
      break;
    }
  }
  std::string upper_header = header;
  for (auto& c : upper_header) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (!closed || upper_header.find("&FCI") == std::string::npos) {
    throw ParseError("FCIDUMP: malformed header (expected &FCI ... &END)");
  }
  const std::size_t norb = detail::namelist_int(upper_header, "NORB", true);
  if (norb == 0) throw ParseError("FCIDUMP: NORB must be positive");
  if (detail::namelist_int(upper_header, "IUHF", false, 0) != 0) {
    throw ParseError("FCIDUMP: unrestricted (IUHF) files are not supported");
  }

  const std::size_t n = 2 * norb;
  FermionIntegrals f(n);
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    std::istringstream fields{std::string(view)};
    std::string tok[5];
    for (auto& t : tok) {
      if (!(fields >> t)) {
        throw ParseError("FCIDUMP record " + std::to_string(line_no) + ": expected 5 fields");
      }
    }
    for (auto& c : tok[0]) {
      if (c == 'D' || c == 'd') c = 'e';  // Fortran exponent
    }
    const double value = detail::parse_double(tok[0], "FCIDUMP value");
    std::size_t idx[4];
    for (int k = 0; k < 4; ++k) {
      const double v = detail::parse_double(tok[k + 1], "FCIDUMP index");
      if (v < 0 || v != std::floor(v) || v > static_cast<double>(norb)) {
        throw ParseError("FCIDUMP record " + std::to_string(line_no) + ": index out of range");
      }
      idx[k] = static_cast<std::size_t>(v);
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      f.set_core_energy(value);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      for (std::size_t s = 0; s < 2; ++s) {
        const std::size_t p = i - 1 + s * norb;
        const std::size_t q = j - 1 + s * norb;
        f.one_body(p, q) = value;
        f.one_body(q, p) = value;
      }
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      const std::size_t a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      const std::size_t perms[8][4] = {{a, b, c, d}, {b, a, c, d}, {a, b, d, c}, {b, a, d, c},
                                       {c, d, a, b}, {d, c, a, b}, {c, d, b, a}, {d, c, b, a}};
      for (const auto& p : perms) {
        for (std::size_t s1 = 0; s1 < 2; ++s1) {
          for (std::size_t s2 = 0; s2 < 2; ++s2) {
            f.two_body(p[0] + s1 * norb, p[1] + s1 * norb, p[2] + s2 * norb, p[3] + s2 * norb) =
                value;
          }
        }
      }
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy; not part of the Hamiltonian
    } else {
      throw ParseError("FCIDUMP record " + std::to_string(line_no) + ": unsupported index pattern");
    }
  }
  return f;
}

inline FermionIntegrals load_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_fcidump(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

enum class Mapping { jordan_wigner, parity };

inline std::string to_string(Mapping m) { return m == Mapping::parity ? "parity" : "jw"; }

inline Mapping parse_mapping(std::string_view s) {
  if (s == "jw" || s == "jordan_wigner" || s == "jordan-wigner") return Mapping::jordan_wigner;
  if (s == "parity") return Mapping::parity;
  throw ParseError("unknown mapping '" + std::string(s) + "' (expected jw or parity)");
}

namespace detail {

struct MaskPairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
    return std::hash<Mask>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

/// Pauli sum with complex coefficients, used only while mapping fermion
/// operators; keyed by (x_mask, z_mask) of plain tensor-product terms.
using ComplexPauliSum = std::unordered_map<std::pair<Mask, Mask>, Complex, MaskPairHash>;

/// Product of two tensor-product Pauli strings: phase and resulting masks.
inline Complex pauli_product_phase(Mask x1, Mask z1, Mask x2, Mask z2) noexcept {
  const int a1 = std::popcount(x1 & z1);
  const int a2 = std::popcount(x2 & z2);
  const int a3 = std::popcount((x1 ^ x2) & (z1 ^ z2));
  const int swap = parity(z1 & x2) ? 2 : 0;
  return i_pow(a1 + a2 - a3 + swap);
}

inline ComplexPauliSum multiply(const ComplexPauliSum& a, const ComplexPauliSum& b) {
  ComplexPauliSum out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const Complex phase = pauli_product_phase(ka.first, ka.second, kb.first, kb.second);
      out[{ka.first ^ kb.first, ka.second ^ kb.second}] += phase * ca * cb;
    }
  }
  return out;
}

/// Annihilation operator a_j (conjugate = false) or creation operator.
inline ComplexPauliSum ladder(Mapping mapping, std::size_t n, std::size_t j, bool creation) {
  const Mask bit = Mask{1} << j;
  const Complex im = creation ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
  ComplexPauliSum op;
  if (mapping == Mapping::jordan_wigner) {
    // Z_{<j} (X_j +- i Y_j) / 2
    const Mask below = bit - 1;
    op[{bit, below}] += 0.5;
    op[{bit, below | bit}] += im;
  } else {
    // X_{>j} (X_j Z_{j-1} +- i Y_j) / 2; qubit q holds the parity of modes 0..q
    const Mask above = low_bits(n) & ~(bit | (bit - 1));
    const Mask prev = j == 0 ? Mask{0} : (bit >> 1);
    op[{above | bit, prev}] += 0.5;
    op[{above | bit, bit}] += im;
  }
  return op;
}

inline constexpr double kImaginaryTolerance = 1e-12;

}  // namespace detail

/// Qubit Hamiltonian of the integrals under the chosen encoding. Spectrum
/// equals the Fock-space spectrum over all particle numbers.
inline PauliHamiltonian map_to_qubits(const FermionIntegrals& f, Mapping mapping,
                                      std::size_t qubit_cap = kDefaultQubitCap) {
  const std::size_t n = f.n_orbitals();
  detail::check_cap(n, qubit_cap);

  std::vector<detail::ComplexPauliSum> create(n), annihilate(n);
  for (std::size_t j = 0; j < n; ++j) {
    create[j] = detail::ladder(mapping, n, j, true);
    annihilate[j] = detail::ladder(mapping, n, j, false);
  }
  // E_ab = a+_a a_b
  std::vector<detail::ComplexPauliSum> excitation(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      excitation[a * n + b] = detail::multiply(create[a], annihilate[b]);

  detail::ComplexPauliSum total;
  total[{0, 0}] += f.core_energy();
  auto accumulate = [&total](const detail::ComplexPauliSum& op, double w) {
    for (const auto& [key, c] : op) total[key] += w * c;
  };
  // a+_a a+_c a_d a_b = E_ab E_cd - delta_bc E_ad
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double one = f.one_body(a, b);
      for (std::size_t c = 0; c < n; ++c) one -= 0.5 * f.two_body(a, c, c, b);
      if (one != 0.0) accumulate(excitation[a * n + b], one);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const double u = f.two_body(a, b, c, d);
          if (u == 0.0) continue;
          accumulate(detail::multiply(excitation[a * n + b], excitation[c * n + d]), 0.5 * u);
        }
      }
    }
  }

  std::vector<PauliTerm> terms;
  terms.reserve(total.size());
  for (const auto& [key, c] : total) {
    if (std::abs(c.imag()) > detail::kImaginaryTolerance) {
      throw DomainError("map_to_qubits: residual imaginary coefficient " +
                        std::to_string(c.imag()) + " on " +
                        PauliTerm(n, key.first, key.second, 0.0).label() +
                        " (integrals not Hermitian)");
    }
    if (std::abs(c.real()) > kDropTolerance) {
      terms.emplace_back(n, key.first, key.second, c.real());
    }
  }
  return {n, std::move(terms)};
}

inline PauliHamiltonian jordan_wigner(const FermionIntegrals& f,
                                      std::size_t qubit_cap = kDefaultQubitCap) {
  return map_to_qubits(f, Mapping::jordan_wigner, qubit_cap);
}

inline PauliHamiltonian parity_map(const FermionIntegrals& f,
                                   std::size_t qubit_cap = kDefaultQubitCap) {
  return map_to_qubits(f, Mapping::parity, qubit_cap);
}

}  // namespace mczeno
