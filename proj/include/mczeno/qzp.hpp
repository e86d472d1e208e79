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
 * Zeno-style projection along a discretized path: start in an eigenstate
 * of H_0 and measure successively in the eigenbases of H_1 ... H_N, each
 * outcome drawn by the Born rule. A degenerate level is measured as a
 * whole; the state collapses onto its normalized projection and the level
 * is reported by its lowest rank.
 */

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mczeno/error.hpp"
#include "mczeno/path.hpp"
#include "mczeno/random.hpp"
#include "mczeno/spectral.hpp"
#include "mczeno/state.hpp"

namespace mczeno {

inline constexpr std::size_t kDefaultZenoSteps = 20;
inline constexpr std::size_t kDefaultRepetitions = 40;

struct Projection {
  std::size_t index = 0;  // lowest rank of the selected level
  StateVector state;
  double probability = 0.0;
};

namespace detail {

/// Samples a level from overlaps c = V^H psi; returns (level begin, level end).
inline std::pair<std::size_t, std::size_t> sample_level(
    const Eigen::VectorXcd& overlaps, const std::vector<std::pair<std::size_t, std::size_t>>& levels,
    RandomStream& stream, double* probability) {
  std::vector<double> weight(levels.size(), 0.0);
  double total = 0.0;
  for (std::size_t g = 0; g < levels.size(); ++g) {
    for (std::size_t j = levels[g].first; j < levels[g].second; ++j)
      weight[g] += std::norm(overlaps(static_cast<Eigen::Index>(j)));
    total += weight[g];
  }
  const double u = stream.uniform() * total;
  double cumulative = 0.0;
  std::size_t chosen = levels.size();
  for (std::size_t g = 0; g < levels.size(); ++g) {
    cumulative += weight[g];
    if (weight[g] > 0.0 && u < cumulative) {
      chosen = g;
      break;
    }
  }
  if (chosen == levels.size()) {  // u rounded up to total
    for (std::size_t g = levels.size(); g-- > 0;)
      if (weight[g] > 0.0) {
        chosen = g;
        break;
      }
  }
  if (probability) *probability = weight[chosen] / total;
  return levels[chosen];
}

inline Eigen::VectorXcd collapse(const EigenSolution& es, const Eigen::VectorXcd& overlaps,
                                 std::pair<std::size_t, std::size_t> level) {
  const auto begin = static_cast<Eigen::Index>(level.first);
  const auto width = static_cast<Eigen::Index>(level.second - level.first);
  Eigen::VectorXcd v = es.eigenvectors.middleCols(begin, width) * overlaps.segment(begin, width);
  return v / v.norm();
}

}  // namespace detail

/// One Born-rule measurement of psi in the eigenbasis `es`.
inline Projection project(const StateVector& psi, const EigenSolution& es, RandomStream& stream) {
  if (psi.dimension() != es.size()) {
    throw DimensionError("project: state dimension " + std::to_string(psi.dimension()) +
                         " != eigenbasis dimension " + std::to_string(es.size()));
  }
  const Eigen::VectorXcd overlaps = es.eigenvectors.adjoint() * psi.amplitudes();
  const auto levels = degenerate_levels(es.eigenvalues);
  double probability = 0.0;
  const auto level = detail::sample_level(overlaps, levels, stream, &probability);
  return {level.first, StateVector(detail::collapse(es, overlaps, level)), probability};
}

struct ZenoTrial {
  std::size_t final_index = 0;
  double final_energy = 0.0;  // <psi|H_N|psi> of the final collapsed state
  std::vector<std::size_t> trajectory;  // measured level per projection
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

/// Eigenbases of H_0..H_N, computed once and shared by all trials.
///
/// While a trial sits in a non-degenerate eigenvector of H_{k-1}, the
/// overlaps with H_k's eigenbasis depend only on that eigenvector, so they
/// are memoized per (k, index).
class ZenoPath {
 public:
  ZenoPath(const PathHamiltonian& p, std::size_t n_steps,
           std::size_t qubit_cap = kDefaultQubitCap)
      : final_hamiltonian_(p.h_final()) {
    const auto hamiltonians = discretize(p, n_steps);
    steps_.resize(hamiltonians.size());
    detail::parallel_for(hamiltonians.size(), [&](std::size_t k) {
      steps_[k].basis = ordered_eig(hamiltonians[k], qubit_cap);
      steps_[k].levels = degenerate_levels(steps_[k].basis.eigenvalues);
      steps_[k].level_of.resize(steps_[k].basis.size());
      for (std::size_t g = 0; g < steps_[k].levels.size(); ++g)
        for (std::size_t j = steps_[k].levels[g].first; j < steps_[k].levels[g].second; ++j)
          steps_[k].level_of[j] = g;
      steps_[k].cache = std::make_unique<Cache>();
    });
  }

  std::size_t n_steps() const noexcept { return steps_.size() - 1; }
  std::size_t dimension() const noexcept { return steps_.front().basis.size(); }
  const EigenSolution& basis(std::size_t k) const { return steps_.at(k).basis; }
  const PauliHamiltonian& final_hamiltonian() const noexcept { return final_hamiltonian_; }

  /// Starts in eigenvector `initial_index` of H_0 and projects on H_1..H_N.
  ZenoTrial run(std::size_t initial_index, std::uint64_t seed, std::uint64_t trial = 0) const {
    if (initial_index >= dimension()) {
      throw DomainError("zeno_run: initial index " + std::to_string(initial_index) +
                        " >= dimension " + std::to_string(dimension()));
    }
    return walk(initial_index, std::nullopt, 1, seed, trial);
  }

  /// Starts from an arbitrary state; it is projected onto H_0's eigenbasis
  /// first.
  ZenoTrial run_from_state(const StateVector& psi, std::uint64_t seed,
                           std::uint64_t trial = 0) const {
    if (psi.dimension() != dimension()) throw DimensionError("zeno_run: dimension mismatch");
    return walk(kMixed, psi.amplitudes(), 0, seed, trial);
  }

 private:
  // Marks a state that is not a single eigenvector of the previous step.
  static constexpr std::size_t kMixed = static_cast<std::size_t>(-1);

  struct Cache {
    std::mutex mutex;
    std::unordered_map<std::size_t, std::shared_ptr<const Eigen::VectorXcd>> overlaps;
  };

  struct Step {
    EigenSolution basis;
    std::vector<std::pair<std::size_t, std::size_t>> levels;
    std::vector<std::size_t> level_of;
    std::unique_ptr<Cache> cache;
  };

  /// Overlaps of eigenvector `from` of H_{k-1} with the eigenbasis of H_k.
  std::shared_ptr<const Eigen::VectorXcd> cached_overlaps(std::size_t k, std::size_t from) const {
    Cache& cache = *steps_[k].cache;
    {
      std::lock_guard lock(cache.mutex);
      if (auto it = cache.overlaps.find(from); it != cache.overlaps.end()) return it->second;
    }
    auto value = std::make_shared<const Eigen::VectorXcd>(
        steps_[k].basis.eigenvectors.adjoint() *
        steps_[k - 1].basis.eigenvectors.col(static_cast<Eigen::Index>(from)));
    std::lock_guard lock(cache.mutex);
    return cache.overlaps.emplace(from, std::move(value)).first->second;
  }

  ZenoTrial walk(std::size_t pure, std::optional<Eigen::VectorXcd> psi,
                 std::size_t first_step, std::uint64_t seed, std::uint64_t trial) const {
    RandomStream stream(seed, trial);
    ZenoTrial out;
    out.seed = seed;
    out.trial = trial;
    for (std::size_t k = first_step; k < steps_.size(); ++k) {
      const Step& step = steps_[k];
      std::shared_ptr<const Eigen::VectorXcd> shared;
      Eigen::VectorXcd local;
      if (pure != kMixed) {
        shared = cached_overlaps(k, pure);
      } else {
        local = step.basis.eigenvectors.adjoint() * *psi;
      }
      const Eigen::VectorXcd& overlaps = pure != kMixed ? *shared : local;
      const auto level = detail::sample_level(overlaps, step.levels, stream, nullptr);
      out.trajectory.push_back(level.first);
      if (level.second - level.first == 1) {
        pure = level.first;
        psi.reset();
      } else {
        psi = detail::collapse(step.basis, overlaps, level);
        pure = kMixed;
      }
    }
    const EigenSolution& last = steps_.back().basis;
    const Eigen::VectorXcd final_vector =
        pure != kMixed ? Eigen::VectorXcd(last.eigenvectors.col(static_cast<Eigen::Index>(pure)))
             : *psi;
    out.final_index = out.trajectory.back();
    out.final_energy = energy_expectation(StateVector(final_vector), final_hamiltonian_);
    return out;
  }

  PauliHamiltonian final_hamiltonian_;
  std::vector<Step> steps_;
};

inline ZenoTrial zeno_run(const PathHamiltonian& p, std::size_t n_steps, std::size_t initial_index,
                          std::uint64_t seed, std::size_t qubit_cap = kDefaultQubitCap) {
  if (n_steps == 0) throw DomainError("zeno_run: need at least one step");
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  if (initial_index >= dim) {
    throw DomainError("zeno_run: initial index " + std::to_string(initial_index) +
                      " >= dimension " + std::to_string(dim));
  }
  return ZenoPath(p, n_steps, qubit_cap).run(initial_index, seed);
}

struct ZenoDistribution {
  std::size_t initial_index = 0;
  std::size_t trials = 0;
  std::map<std::size_t, std::size_t> counts;  // final index -> occurrences

  std::size_t count(std::size_t final_index) const {
    auto it = counts.find(final_index);
    return it == counts.end() ? 0 : it->second;
  }
  double frequency(std::size_t final_index) const {
    return trials == 0 ? 0.0 : static_cast<double>(count(final_index)) / static_cast<double>(trials);
  }
};

/// Trial t of initial position i uses the stream (seed, i * trials + t).
inline std::vector<ZenoDistribution> zeno_statistics(const ZenoPath& path,
                                                     const std::vector<std::size_t>& initial_indices,
                                                     std::size_t trials_per_initial,
                                                     std::uint64_t seed) {
  if (trials_per_initial == 0) throw DomainError("zeno_statistics: need at least one trial");
  for (auto i : initial_indices) {
    if (i >= path.dimension()) {
      throw DomainError("zeno_statistics: initial index " + std::to_string(i) + " out of range");
    }
  }
  const std::size_t total = initial_indices.size() * trials_per_initial;
  std::vector<std::size_t> finals(total);
  detail::parallel_for(total, [&](std::size_t id) {
    finals[id] = path.run(initial_indices[id / trials_per_initial], seed, id).final_index;
  });
  std::vector<ZenoDistribution> out;
  for (std::size_t i = 0; i < initial_indices.size(); ++i) {
    ZenoDistribution d{initial_indices[i], trials_per_initial, {}};
    for (std::size_t t = 0; t < trials_per_initial; ++t) ++d.counts[finals[i * trials_per_initial + t]];
    out.push_back(std::move(d));
  }
  return out;
}

inline std::vector<ZenoDistribution> zeno_statistics(const PathHamiltonian& p, std::size_t n_steps,
                                                     const std::vector<std::size_t>& initial_indices,
                                                     std::size_t trials_per_initial,
                                                     std::uint64_t seed,
                                                     std::size_t qubit_cap = kDefaultQubitCap) {
  return zeno_statistics(ZenoPath(p, n_steps, qubit_cap), initial_indices, trials_per_initial,
                         seed);
}

struct ObservedLevel {
  double energy = 0.0;
  std::size_t multiplicity = 0;  // times observed
  std::size_t final_index = 0;
};

struct LowestKResult {
  std::vector<ObservedLevel> levels;  // ascending energy, at most k
  bool incomplete = false;            // fewer than k distinct levels seen
};

/// Runs `repetitions` trials, cycling over the k lowest initial
/// eigenstates, and keeps the k lowest distinct final levels.
inline LowestKResult lowest_k_energies(const ZenoPath& path, std::size_t k,
                                       std::size_t repetitions, std::uint64_t seed) {
  if (k == 0 || k > path.dimension()) throw DomainError("lowest_k_energies: k out of range");
  if (repetitions < k) throw DomainError("lowest_k_energies: repetitions must be >= k");
  std::vector<ZenoTrial> trials(repetitions);
  detail::parallel_for(repetitions, [&](std::size_t r) { trials[r] = path.run(r % k, seed, r); });
  std::map<std::size_t, ObservedLevel> seen;
  for (const auto& t : trials) {
    auto& level = seen[t.final_index];
    level.final_index = t.final_index;
    level.energy = t.final_energy;
    ++level.multiplicity;
  }
  LowestKResult out;
  for (const auto& [index, level] : seen) out.levels.push_back(level);
  std::stable_sort(out.levels.begin(), out.levels.end(),
                   [](const ObservedLevel& a, const ObservedLevel& b) { return a.energy < b.energy; });
  if (out.levels.size() > k) out.levels.resize(k);
  out.incomplete = out.levels.size() < k;
  return out;
}

inline LowestKResult lowest_k_energies(const PathHamiltonian& p, std::size_t n_steps, std::size_t k,
                                       std::size_t repetitions, std::uint64_t seed,
                                       std::size_t qubit_cap = kDefaultQubitCap) {
  return lowest_k_energies(ZenoPath(p, n_steps, qubit_cap), k, repetitions, seed);
}

}  // namespace mczeno
