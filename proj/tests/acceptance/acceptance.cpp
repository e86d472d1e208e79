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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mczeno/clique.hpp"
#include "mczeno/driver.hpp"
#include "mczeno/fermion.hpp"
#include "mczeno/pauli_io.hpp"
#include "mczeno/qae.hpp"
#include "mczeno/qzp.hpp"
#include "mczeno/spectral.hpp"
#include "test_support.hpp"

using namespace mczeno;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::string> pauli_fixtures() {
  return {"clique_2q.pauli", "gapped_4q.pauli", "crossing_3q.pauli"};
}

std::vector<std::string> fcidump_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(MCZENO_DATA_DIR)) {
    if (e.path().extension() == ".fcidump") out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PauliHamiltonian load_fixture(const std::string& name) {
  return load_problem({oracle::data(name), Mapping::jordan_wigner});
}

PathHamiltonian mc_path(const PauliHamiltonian& hp, double alpha, double total_time = 1.0) {
  return {extract_mc_hamiltonian(hp), hp, alpha, total_time};
}

double nearest_distance(double e, const Eigen::VectorXd& spectrum) {
  return (spectrum.array() - e).abs().minCoeff();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1: clique golden values.
Outcome two_qubit_cliques() {
  const auto h = load_fixture("clique_2q.pauli");
  const auto g = build_graph(h);
  const auto greedy = greedy_max_clique(g);
  const auto exact = brute_force_max_clique(g);
  auto labels = [&](const CliqueResult& c) {
    std::vector<std::string> out;
    for (auto v : c.vertices) out.push_back(g.label(v));
    return out;
  };
  const std::vector<std::string> want{"II", "IZ", "ZI"};
  // Best clique once IZ is excluded: the alternative {II, IX, ZI}.
  std::size_t iz = 0;
  while (g.label(iz) != "IZ") ++iz;
  const auto without = g.without_vertex(iz);
  const auto alt = brute_force_max_clique(without);
  std::vector<std::string> alt_labels;
  for (auto v : alt.vertices) alt_labels.push_back(without.label(v));
  const bool pass = labels(greedy) == want && labels(exact) == want && greedy.weight == 11.0 &&
                    exact.weight == 11.0 && alt.weight == 10.0 &&
                    alt_labels == std::vector<std::string>{"II", "IX", "ZI"};
  return {pass, "greedy " + fmt("%g", greedy.weight) + ", exact " + fmt("%g", exact.weight) +
                    ", alternative " + fmt("%g", alt.weight)};
}

// 2: both mappings against the Fock-space oracle.
Outcome mapping_soundness() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  const int sets = 25;
  for (int rep = 0; rep < sets; ++rep) {
    const auto f = oracle::random_integrals(4, rng);
    const auto fock = oracle::fock_spectrum(f);
    for (auto m : {Mapping::jordan_wigner, Mapping::parity}) {
      const auto spectrum = eig(map_to_qubits(f, m)).eigenvalues;
      worst = std::max(worst, (spectrum - fock).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-8, std::to_string(sets) + " sets, max deviation " + fmt("%.2e", worst)};
}

// 3: every QZP final energy is an eigenvalue of H_p.
Outcome qzp_exactness() {
  double worst = 0.0;
  std::size_t fixtures = 0;
  std::size_t max_qubits = 0;
  std::vector<std::string> names = pauli_fixtures();
  for (const auto& f : fcidump_fixtures()) names.push_back(f);
  for (const auto& name : names) {
    const auto hp = load_fixture(name);
    const auto spectrum = eig(hp).eigenvalues;
    for (double alpha : {0.0, 0.5}) {
      const ZenoPath path(mc_path(hp, alpha), kDefaultZenoSteps);
      std::vector<double> energies(1000);
      detail::parallel_for(energies.size(), [&](std::size_t t) {
        energies[t] = path.run(0, 3, t).final_energy;
      });
      for (double e : energies) worst = std::max(worst, nearest_distance(e, spectrum));
    }
    ++fixtures;
    max_qubits = std::max(max_qubits, hp.n_qubits());
  }
  return {worst <= 1e-10, std::to_string(fixtures) + " fixtures up to " +
                              std::to_string(max_qubits) + " qubits, 2 x 1000 trials each, max " +
                              "distance to spectrum " + fmt("%.2e", worst)};
}

// 4: Zeno convergence on the gapped fixture.
Outcome zeno_convergence() {
  const auto p = mc_path(load_fixture("gapped_4q.pauli"), 0.0);
  const double gap = path_spectrum(p, 201, 2).min_gap();
  const std::size_t trials = 1000;
  std::vector<double> freq;
  for (std::size_t n : {5u, 20u, 80u}) {
    freq.push_back(zeno_statistics(p, n, {0}, trials, 0).front().frequency(0));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < freq.size(); ++i) {
    const double tolerance = 2 * std::hypot(oracle::sigma(freq[i], trials),
                                            oracle::sigma(freq[i - 1], trials));
    monotone = monotone && freq[i] >= freq[i - 1] - tolerance;
  }
  return {gap >= 0.5 && freq[1] >= 0.9 && monotone,
          "min gap " + fmt("%.4f", gap) + ", frequency N=5 " + fmt("%.3f", freq[0]) + ", N=20 " +
              fmt("%.3f", freq[1]) + ", N=80 " + fmt("%.3f", freq[2])};
}

double crossing_frequency(double alpha) {
  return zeno_statistics(mc_path(load_fixture("crossing_3q.pauli"), alpha), kDefaultZenoSteps, {0},
                         1000, 0)
      .front()
      .frequency(0);
}

// 5: the driver improves the ground frequency through the degeneracy.
Outcome alpha_improvement() {
  const auto h = load_fixture("crossing_3q.pauli");
  const auto ground = diagonal_ground_state(extract_mc_hamiltonian(h));
  const double f0 = crossing_frequency(0.0);
  const double f5 = crossing_frequency(0.5);
  return {ground.degeneracy > 1 && f5 > f0,
          "initial ground degeneracy " + std::to_string(ground.degeneracy) + ", frequency alpha=0 " +
              fmt("%.3f", f0) + ", alpha=0.5 " + fmt("%.3f", f5)};
}

// 6: QAE error shrinks with T.
Outcome qae_accuracy() {
  const auto hp = load_fixture("gapped_4q.pauli");
  double drift = 0.0;
  std::vector<double> err;
  for (double t : {10.0, 40.0}) {
    const auto p = mc_path(hp, 0.0, t);
    const auto r = evolve(p, 0.5, StateVector(ordered_eig(p.h_initial()).vector(0)));
    err.push_back(r.final_energy - r.ground_energy);
    drift = std::max(drift, r.norm_drift);
  }
  return {err[0] <= 1e-2 && err[1] < err[0] && drift <= 1e-9,
          "error T=10 " + fmt("%.3e", err[0]) + " Ha, T=40 " + fmt("%.3e", err[1]) +
              " Ha, norm drift " + fmt("%.1e", drift)};
}

// 7: QAE fails at the degenerate crossing while QZP with a driver does not.
Outcome qae_degeneracy_failure() {
  const auto p = mc_path(load_fixture("crossing_3q.pauli"), 0.0, 160.0);
  const auto r = evolve(p, 0.5, StateVector(ordered_eig(p.h_initial()).vector(0)));
  const double f0 = crossing_frequency(0.0);
  const double f5 = crossing_frequency(0.5);
  return {r.ground_fidelity < 0.99 && f5 > f0,
          "QAE fidelity alpha=0 T=160 " + fmt("%.4f", r.ground_fidelity) +
              ", QZP alpha=0.5 frequency " + fmt("%.3f", f5)};
}

// 8: four lowest levels from 40 repetitions.
Outcome excited_states() {
  const auto hp = load_fixture("gapped_4q.pauli");
  const auto r = lowest_k_energies(mc_path(hp, 0.0), kDefaultZenoSteps, 4, 40, 0);
  const auto exact = eig(hp).eigenvalues;
  double worst = r.levels.size() == 4 ? 0.0 : INFINITY;
  for (std::size_t j = 0; j < r.levels.size(); ++j) {
    worst = std::max(worst, std::abs(r.levels[j].energy - exact(static_cast<Eigen::Index>(j))));
  }
  return {!r.incomplete && worst <= 1e-10,
          std::to_string(r.levels.size()) + " levels, max deviation " + fmt("%.2e", worst)};
}

// 9: path endpoints do not depend on alpha.
Outcome endpoint_invariants() {
  double worst = 0.0;
  std::vector<std::string> names = pauli_fixtures();
  names.push_back("h2_0.7414.fcidump");
  names.push_back("lih_1.595.fcidump");
  for (const auto& name : names) {
    const auto hp = load_fixture(name);
    const auto hi = extract_mc_hamiltonian(hp);
    const auto ei = eig(hi).eigenvalues;
    const auto ep = eig(hp).eigenvalues;
    const auto k = static_cast<std::size_t>(ep.size());
    for (double alpha : {0.0, 0.1, 0.5, 1.0}) {
      const auto sp = path_spectrum(PathHamiltonian(hi, hp, alpha), 11, k);
      for (std::size_t j = 0; j < k; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        worst = std::max({worst, std::abs(sp.levels.front()[j] - ei(jj)),
                          std::abs(sp.levels.back()[j] - ep(jj))});
      }
    }
  }
  return {worst <= 1e-10, std::to_string(names.size()) + " fixtures x 4 alphas, max deviation " +
                              fmt("%.2e", worst)};
}

// 10: QZP points on user-supplied geometries are exact eigenvalues of those
// files, so the curve coincides with exact diagonalization.
Outcome curve_coincidence() {
  RunConfig c;
  c.method = Method::scan;
  c.scan_methods = {"exact", "qzp"};
  c.trials = 200;
  const auto ref = oracle::fci_reference();
  double coordinate = 0.0;
  for (const auto& f : fcidump_fixtures()) c.points.push_back({coordinate += 1.0, oracle::data(f)});
  const auto r = scan(c);
  double worst_eigen = 0.0;
  double worst_ref = 0.0;
  std::size_t ground_points = 0;
  std::vector<std::string> excited;
  bool ok = true;
  for (const auto& row : r.rows) {
    if (row.status != "ok" || !row.qzp || !row.exact) {
      ok = false;
      continue;
    }
    const auto spectrum = eig(load_fixture(row.file)).eigenvalues;
    worst_eigen = std::max(worst_eigen, nearest_distance(*row.qzp, spectrum));
    worst_ref = std::max(worst_ref, std::abs(*row.exact - ref.at(row.file)));
    if (std::abs(*row.qzp_error()) <= 1e-10) {
      ++ground_points;
    } else {
      excited.push_back(row.file);
    }
  }
  std::string note = std::to_string(r.rows.size()) + " FCIDUMP points, QZP-to-spectrum " +
                     fmt("%.2e", worst_eigen) + ", exact-to-reference " + fmt("%.2e", worst_ref) +
                     ", " + std::to_string(ground_points) + " on the ground curve";
  for (const auto& e : excited) note += "; excited level at " + e;
  return {ok && worst_eigen <= 1e-10 && worst_ref <= 1e-8, note};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double budget_s;
  };
  const std::vector<Criterion> criteria{
      {1, "clique golden values", two_qubit_cliques, 1.0},
      {2, "mapping soundness", mapping_soundness, 30.0},
      {3, "QZP exactness", qzp_exactness, 120.0},
      {4, "Zeno convergence", zeno_convergence, 0.0},
      {5, "alpha improvement", alpha_improvement, 0.0},
      {6, "QAE accuracy vs T", qae_accuracy, 0.0},
      {7, "QAE degeneracy failure", qae_degeneracy_failure, 0.0},
      {8, "excited states", excited_states, 0.0},
      {9, "endpoint invariants", endpoint_invariants, 0.0},
      {10, "curve coincidence", curve_coincidence, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && seconds > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + fmt("%g", c.budget_s) + " s budget)";
    }
    std::printf("%s criterion %d: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
