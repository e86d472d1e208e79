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
 * Text and JSON forms of Pauli Hamiltonians.
 *
 * Text: one `<coefficient> <label>` per line, `#` starts a comment. The
 * optional directive `# n_qubits = N` fixes the width, which is otherwise
 * taken from the labels; the writer always emits it so that an empty
 * Hamiltonian survives a round trip.
 *
 * JSON: {"n_qubits": N, "terms": [{"coeff": c, "label": "ZI"}, ...]}.
 */

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mczeno/error.hpp"
#include "mczeno/pauli.hpp"
#include "mczeno/text.hpp"

namespace mczeno {

/// Masks from a label such as "XIZY"; the rightmost character is qubit 0.
inline PauliTerm parse_label(std::string_view label, double coefficient = 1.0) {
  if (label.empty()) throw ParseError("empty Pauli label");
  if (label.size() > kMaxMaskQubits) throw ParseError("Pauli label too long");
  Mask x = 0;
  Mask z = 0;
  const std::size_t n = label.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    const Mask bit = Mask{1} << (n - 1 - pos);
    switch (label[pos]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError(std::string("illegal character '") + label[pos] + "' in Pauli label '" +
                         std::string(label) + "'");
    }
  }
  return {n, x, z, coefficient};
}

/// Parses "<coefficient> <label>", e.g. "-4.0 IZ".
inline PauliTerm parse_pauli(std::string_view text) {
  text = detail::trim(text);
  const auto split = text.find_first_of(" \t");
  if (split == std::string_view::npos) {
    throw ParseError("expected '<coefficient> <label>', got '" + std::string(text) + "'");
  }
  const double coeff = detail::parse_double(text.substr(0, split), "coefficient");
  return parse_label(detail::trim(text.substr(split)), coeff);
}

/// Inverse of parse_pauli.
inline std::string format_pauli(const PauliTerm& t) {
  return detail::format_double(t.coefficient()) + " " + t.label();
}

inline PauliHamiltonian read_pauli_text(std::istream& in) {
  std::optional<std::size_t> n_qubits;
  std::vector<PauliTerm> terms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      std::string_view comment = detail::trim(view.substr(hash + 1));
      if (comment.starts_with("n_qubits")) {
        comment.remove_prefix(8);
        comment = detail::trim(comment);
        if (comment.starts_with("=") || comment.starts_with(":")) comment.remove_prefix(1);
        const double n = detail::parse_double(detail::trim(comment), "n_qubits directive");
        if (n < 1 || n != std::floor(n)) throw ParseError("bad n_qubits directive");
        n_qubits = static_cast<std::size_t>(n);
      }
      view = view.substr(0, hash);
    }
    view = detail::trim(view);
    if (view.empty()) continue;
    try {
      terms.push_back(parse_pauli(view));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!n_qubits) {
    if (terms.empty()) throw ParseError("no terms and no n_qubits directive");
    n_qubits = terms.front().n_qubits();
  }
  for (const auto& t : terms) {
    if (t.n_qubits() != *n_qubits) {
      throw ParseError("label '" + t.label() + "' does not match width " +
                       std::to_string(*n_qubits));
    }
  }
  return {*n_qubits, std::move(terms)};
}

inline void write_pauli_text(std::ostream& out, const PauliHamiltonian& h) {
  out << "# n_qubits = " << h.n_qubits() << '\n';
  for (const auto& t : h) out << format_pauli(t) << '\n';
}

inline nlohmann::json to_json(const PauliHamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : h) terms.push_back({{"coeff", t.coefficient()}, {"label", t.label()}});
  return {{"n_qubits", h.n_qubits()}, {"terms", std::move(terms)}};
}

inline PauliHamiltonian hamiltonian_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n_qubits").get<std::size_t>();
    std::vector<PauliTerm> terms;
    for (const auto& item : j.at("terms")) {
      const auto label = item.at("label").get<std::string>();
      if (label.size() != n) throw ParseError("label '" + label + "' does not match n_qubits");
      terms.push_back(parse_label(label, item.at("coeff").get<double>()));
    }
    return {n, std::move(terms)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Pauli JSON: ") + e.what());
  }
}

/// Reads either format; `.json` files are parsed as JSON.
inline PauliHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  if (path.extension() == ".json") {
    try {
      return hamiltonian_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return read_pauli_text(in);
}

inline void save_hamiltonian(const std::filesystem::path& path, const PauliHamiltonian& h) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_json(h).dump(2) << '\n';
  } else {
    write_pauli_text(out, h);
  }
}

}  // namespace mczeno
