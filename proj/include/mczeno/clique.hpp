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
 * Commutation graph of a Pauli Hamiltonian and its maximum-weight cliques.
 *
 * Vertices are terms weighted by |coefficient|; an edge joins two commuting
 * terms, so cliques are commuting sets. The greedy search yields the
 * initial (maximum commuting) Hamiltonian; the exact branch-and-bound
 * search is an oracle for small graphs.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mczeno/error.hpp"
#include "mczeno/pauli.hpp"

namespace mczeno {

/// Weighted commutation graph; vertex v stands for term term_index[v].
class CommutationGraph {
 public:
  CommutationGraph() = default;

  /// Graph from explicit weights and a symmetric adjacency relation.
  CommutationGraph(std::vector<double> weights, std::vector<std::vector<bool>> adjacency,
                   std::vector<std::string> labels = {})
      : weights_(std::move(weights)), labels_(std::move(labels)) {
    const std::size_t n = weights_.size();
    if (adjacency.size() != n) throw DimensionError("CommutationGraph: adjacency size mismatch");
    if (labels_.empty()) {
      for (std::size_t v = 0; v < n; ++v) labels_.push_back("v" + std::to_string(v));
    }
    if (labels_.size() != n) throw DimensionError("CommutationGraph: label count mismatch");
    adjacency_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (weights_[i] < 0.0 || !std::isfinite(weights_[i])) {
        throw DomainError("CommutationGraph: weights must be finite and non-negative");
      }
      if (adjacency[i].size() != n) throw DimensionError("CommutationGraph: ragged adjacency");
      for (std::size_t j = 0; j < n; ++j) {
        if (adjacency[i][j] != adjacency[j][i]) {
          throw DomainError("CommutationGraph: adjacency not symmetric");
        }
        if (i != j && adjacency[i][j]) adjacency_[i * n + j] = 1;
      }
    }
    term_index_.resize(n);
    std::iota(term_index_.begin(), term_index_.end(), std::size_t{0});
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double weight(std::size_t v) const { return weights_.at(v); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::size_t term_index(std::size_t v) const { return term_index_.at(v); }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return adjacency_[u * weights_.size() + v] != 0;
  }

  std::size_t edge_count() const noexcept {
    return static_cast<std::size_t>(std::count(adjacency_.begin(), adjacency_.end(), 1)) / 2;
  }

  /// Copy without vertex `v` (indices above it shift down by one).
  CommutationGraph without_vertex(std::size_t v) const {
    CommutationGraph g;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      g.weights_.push_back(weights_[i]);
      g.labels_.push_back(labels_[i]);
      g.term_index_.push_back(term_index_[i]);
    }
    g.adjacency_.assign((n - 1) * (n - 1), 0);
    for (std::size_t i = 0, gi = 0; i < n; ++i) {
      if (i == v) continue;
      for (std::size_t j = 0, gj = 0; j < n; ++j) {
        if (j == v) continue;
        g.adjacency_[gi * (n - 1) + gj] = adjacency_[i * n + j];
        ++gj;
      }
      ++gi;
    }
    return g;
  }

  friend CommutationGraph build_graph(const PauliHamiltonian& h);

 private:
  std::vector<double> weights_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> term_index_;
  std::vector<std::uint8_t> adjacency_;  // row-major, zero diagonal
};

/// One vertex per term, an edge per commuting pair.
inline CommutationGraph build_graph(const PauliHamiltonian& h) {
  CommutationGraph g;
  const std::size_t n = h.size();
  g.adjacency_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    g.weights_.push_back(std::abs(h[i].coefficient()));
    g.labels_.push_back(h[i].label());
    g.term_index_.push_back(i);
    for (std::size_t j = 0; j < i; ++j) {
      if (commutes(h[i], h[j])) g.adjacency_[i * n + j] = g.adjacency_[j * n + i] = 1;
    }
  }
  return g;
}

struct CliqueResult {
  std::vector<std::size_t> vertices;  // ascending
  double weight = 0.0;
  /// Adjacency lookups spent by the search.
  std::size_t adjacency_checks = 0;
};

inline bool is_clique(const CommutationGraph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

/// No outside vertex is adjacent to every member.
inline bool is_maximal_clique(const CommutationGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<bool> member(g.size(), false);
  for (auto v : vertices) member[v] = true;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (member[u]) continue;
    if (std::all_of(vertices.begin(), vertices.end(),
                    [&](std::size_t v) { return g.adjacent(u, v); })) {
      return false;
    }
  }
  return true;
}

/// Repeatedly takes the heaviest remaining candidate, then discards the
/// candidates it is not adjacent to. Weight ties go to the lowest index.
inline CliqueResult greedy_max_clique(const CommutationGraph& g) {
  CliqueResult result;
  std::vector<std::size_t> candidates(g.size());
  std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  while (!candidates.empty()) {
    auto best = candidates.begin();
    for (auto it = candidates.begin(); it != candidates.end(); ++it) {
      if (g.weight(*it) > g.weight(*best)) best = it;
    }
    const std::size_t chosen = *best;
    result.vertices.push_back(chosen);
    result.weight += g.weight(chosen);
    candidates.erase(best);
    // Survivors were adjacent to all earlier picks already.
    std::erase_if(candidates, [&](std::size_t u) {
      ++result.adjacency_checks;
      return !g.adjacent(u, chosen);
    });
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

inline constexpr std::size_t kDefaultCliqueVertexCap = 24;

namespace detail {

/// Weighted maximum clique by branch and bound with a greedy-colouring
/// upper bound (each colour class contributes its heaviest member).
class CliqueSearch {
 public:
  explicit CliqueSearch(const CommutationGraph& g) : g_(g) {}

  CliqueResult run() {
    std::vector<std::size_t> order(g_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
      return g_.weight(a) > g_.weight(b);
    });
    std::vector<std::size_t> current;
    expand(current, 0.0, order);
    if (best_.weight < 0.0) best_.weight = 0.0;
    std::sort(best_.vertices.begin(), best_.vertices.end());
    best_.adjacency_checks = checks_;
    return best_;
  }

 private:
  bool adjacent(std::size_t a, std::size_t b) {
    ++checks_;
    return g_.adjacent(a, b);
  }

  void expand(std::vector<std::size_t>& current, double weight,
              std::vector<std::size_t> candidates) {
    if (candidates.empty()) {
      // Lexicographic tie-break keeps the answer independent of search order.
      std::vector<std::size_t> sorted = current;
      std::sort(sorted.begin(), sorted.end());
      const bool better =
          weight > best_.weight || (weight == best_.weight && sorted < best_.vertices);
      if (better && is_maximal_clique(g_, sorted)) best_ = {std::move(sorted), weight, 0};
      return;
    }
    while (!candidates.empty()) {
      if (weight + colour_bound(candidates) < best_.weight) return;
      const std::size_t v = candidates.front();
      candidates.erase(candidates.begin());
      std::vector<std::size_t> next;
      for (auto u : candidates)
        if (adjacent(u, v)) next.push_back(u);
      current.push_back(v);
      expand(current, weight + g_.weight(v), std::move(next));
      current.pop_back();
    }
    if (current.empty() || weight < best_.weight) return;
    // Every candidate was branched on and dropped; current may still be
    // maximal when all of them were non-adjacent to some member.
    expand(current, weight, {});
  }

  double colour_bound(const std::vector<std::size_t>& candidates) {
    // candidates are sorted by descending weight, so the first member of a
    // class is its heaviest.
    std::vector<std::vector<std::size_t>> classes;
    double bound = 0.0;
    for (auto v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        bool independent = true;
        for (auto u : cls) {
          if (adjacent(u, v)) {
            independent = false;
            break;
          }
        }
        if (independent) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({v});
        bound += g_.weight(v);
      }
    }
    return bound;
  }

  const CommutationGraph& g_;
  CliqueResult best_{{}, -1.0, 0};
  std::size_t checks_ = 0;
};

}  // namespace detail

/// Exact maximum-weight clique. Among equal-weight optima the
/// lexicographically smallest vertex set is returned.
inline CliqueResult brute_force_max_clique(const CommutationGraph& g,
                                           std::size_t vertex_cap = kDefaultCliqueVertexCap) {
  if (g.size() > vertex_cap) {
    throw DimensionError("brute_force_max_clique: " + std::to_string(g.size()) +
                         " vertices > cap " + std::to_string(vertex_cap));
  }
  return detail::CliqueSearch(g).run();
}

/// Sub-Hamiltonian of the clique's terms with their signed coefficients.
inline PauliHamiltonian mc_hamiltonian(const PauliHamiltonian& h, const CliqueResult& c) {
  std::vector<PauliTerm> terms;
  for (auto v : c.vertices) {
    if (v >= h.size()) {
      throw DomainError("mc_hamiltonian: vertex " + std::to_string(v) +
                        " does not index a term of the Hamiltonian");
    }
    terms.push_back(h[v]);
  }
  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = a + 1; b < terms.size(); ++b)
      if (!commutes(terms[a], terms[b])) {
        throw DomainError("mc_hamiltonian: " + terms[a].label() + " and " + terms[b].label() +
                          " do not commute; clique does not belong to this Hamiltonian");
      }
  return {h.n_qubits(), std::move(terms)};
}

/// Greedy clique followed by mc_hamiltonian.
inline PauliHamiltonian extract_mc_hamiltonian(const PauliHamiltonian& h) {
  return mc_hamiltonian(h, greedy_max_clique(build_graph(h)));
}

inline constexpr double kDegeneracyTolerance = 1e-12;

struct DiagonalGroundState {
  Mask basis_index = 0;
  std::string bitstring;  // qubit 0 rightmost
  double energy = 0.0;
  std::size_t degeneracy = 0;
  std::vector<Mask> minimizers;  // ascending basis indices
};

inline std::string bitstring(Mask b, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q)
    if ((b >> q) & 1U) s[n_qubits - 1 - q] = '1';
  return s;
}

/// Exhaustive minimization of a Z-only Hamiltonian over basis states.
inline DiagonalGroundState diagonal_ground_state(const PauliHamiltonian& h,
                                                 std::size_t qubit_cap = kDefaultQubitCap) {
  if (!is_all_z(h)) throw DomainError("diagonal_ground_state: Hamiltonian has X/Y factors");
  detail::check_cap(h.n_qubits(), qubit_cap);
  const Mask dim = Mask{1} << h.n_qubits();
  std::vector<double> energies(dim);
  double lowest = std::numeric_limits<double>::infinity();
  for (Mask b = 0; b < dim; ++b) {
    energies[b] = diagonal_energy(h, b);
    lowest = std::min(lowest, energies[b]);
  }
  DiagonalGroundState out;
  out.energy = lowest;
  for (Mask b = 0; b < dim; ++b) {
    if (energies[b] - lowest <= kDegeneracyTolerance) out.minimizers.push_back(b);
  }
  out.degeneracy = out.minimizers.size();
  out.basis_index = out.minimizers.front();
  out.energy = energies[out.basis_index];
  out.bitstring = bitstring(out.basis_index, h.n_qubits());
  return out;
}

}  // namespace mczeno
