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

// Command-line front end.
//
//   mczeno ham data/h2_0.7414.fcidump --mapping parity -o h2.pauli
//   mczeno clique --hamiltonian h2.pauli
//   mczeno qzp --config config/h2_qzp.json --alpha 0.5 --trials 200
//   mczeno scan --config config/h2_scan.json -o scan.csv
//
// CSV goes to --output, or to stdout when no output path is set.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mczeno/driver.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string hamiltonian;
  std::string mapping;
  std::string initial;
  std::string output;
  std::string record;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::optional<std::size_t> steps;
  std::optional<double> total_time;
  std::optional<double> dt;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n_points;
  std::vector<std::size_t> initial_indices;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("-H,--hamiltonian", o.hamiltonian, "Pauli text/JSON file or FCIDUMP");
  cmd->add_option("--mapping", o.mapping, "FCIDUMP mapping")->check(CLI::IsMember({"jw", "parity"}));
  cmd->add_option("-o,--output", o.output, "CSV output path");
  cmd->add_option("--record", o.record, "JSON result record path");
}

void add_path(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--initial", o.initial, "H_i: 'mc' or a Pauli file");
  cmd->add_option("--alpha", o.alpha, "transverse driver strength");
  cmd->add_option("--T", o.total_time, "total evolution time (au)");
  cmd->add_option("--dt", o.dt, "QAE time step (au)");
  cmd->add_option("--steps", o.steps, "number of projections N");
  cmd->add_option("--trials", o.trials, "QZP trials per initial state");
  cmd->add_option("--k", o.k, "levels (spectrum) or initial states 0..k-1 (qzp)");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--points", o.n_points, "number of s samples (spectrum)");
  cmd->add_option("--initial-index", o.initial_indices, "initial eigenstates of H_i");
}

mczeno::RunConfig make_config(mczeno::Method method, const Overrides& o) {
  using mczeno::detail::in_stage;
  mczeno::RunConfig c = o.config.empty()
                            ? mczeno::RunConfig{}
                            : in_stage("config", o.config, [&] { return mczeno::load_config(o.config); });
  c.method = method;
  if (!o.hamiltonian.empty()) c.hamiltonian.file = o.hamiltonian;
  if (!o.mapping.empty()) c.hamiltonian.mapping = mczeno::parse_mapping(o.mapping);
  if (!o.initial.empty()) c.initial = o.initial;
  if (!o.output.empty()) c.output = o.output;
  if (!o.record.empty()) c.record = o.record;
  if (o.seed) c.seed = *o.seed;
  if (o.alpha) c.alpha = *o.alpha;
  if (o.steps) c.n_steps = *o.steps;
  if (o.total_time) c.total_time = *o.total_time;
  if (o.dt) c.delta_t = *o.dt;
  if (o.trials) c.trials = *o.trials;
  if (o.n_points) c.n_points = *o.n_points;
  if (o.k) {
    c.k = *o.k;
    if (method == mczeno::Method::qzp) {
      c.initial_indices.resize(c.k);
      for (std::size_t i = 0; i < c.k; ++i) c.initial_indices[i] = i;
    }
  }
  if (!o.initial_indices.empty()) c.initial_indices = o.initial_indices;
  return c;
}

void summarize(std::ostream& out, const mczeno::RunResult& r) {
  using mczeno::detail::format_double;
  if (const auto* c = std::get_if<mczeno::CliqueReport>(&r.report)) {
    out << "# clique weight " << format_double(c->weight);
    if (c->brute_force_weight) out << " (brute force " << format_double(*c->brute_force_weight) << ")";
    out << ", " << c->labels.size() << " terms:";
    for (const auto& l : c->labels) out << ' ' << l;
    out << '\n';
  } else if (const auto* q = std::get_if<mczeno::QaeReport>(&r.report)) {
    out << "# qae E = " << format_double(q->final_energy) << " Ha, error "
        << format_double(q->error()) << " Ha, ground fidelity " << format_double(q->ground_fidelity)
        << '\n';
  } else if (const auto* z = std::get_if<mczeno::QzpReport>(&r.report)) {
    out << "# qzp exact ground " << format_double(z->ground_energy) << " Ha, " << z->trials
        << " trials per initial state\n";
  } else if (const auto* s = std::get_if<mczeno::PathSpectrum>(&r.report)) {
    if (!s->levels.empty() && s->levels.front().size() >= 2) {
      out << "# minimum gap " << format_double(s->min_gap()) << " Ha\n";
    }
  } else if (const auto* sc = std::get_if<mczeno::ScanResult>(&r.report)) {
    for (const auto& row : sc->rows) {
      if (row.status != "ok") out << "# " << row.status << ": " << row.message << '\n';
    }
  }
}

int execute(mczeno::Method method, const Overrides& o) {
  const auto config = make_config(method, o);
  const auto result = mczeno::run(config);
  summarize(std::cerr, result);
  if (config.output.empty()) mczeno::write_csv(std::cout, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-commuting-set quantum Zeno and adiabatic ground-state solver"};
  app.require_subcommand(1);
  Overrides o;

  std::string fcidump;
  std::string mapping = "jw";
  std::string ham_out;
  std::size_t qubit_cap = mczeno::kDefaultQubitCap;
  auto* ham = app.add_subcommand("ham", "Map an FCIDUMP to a qubit Hamiltonian");
  ham->add_option("fcidump", fcidump, "FCIDUMP file")->required()->check(CLI::ExistingFile);
  ham->add_option("--mapping", mapping, "jw or parity")->check(CLI::IsMember({"jw", "parity"}));
  ham->add_option("-o,--output", ham_out, "output (.json for JSON, else text; stdout if empty)");
  ham->add_option("--qubit-cap", qubit_cap, "largest qubit count accepted");

  auto* clique = app.add_subcommand("clique", "Greedy maximal commuting set");
  add_common(clique, o);

  auto* spectrum = app.add_subcommand("spectrum", "Lowest levels along the path");
  add_common(spectrum, o);
  add_path(spectrum, o);

  auto* qae = app.add_subcommand("qae", "Quantum adiabatic evolution");
  add_common(qae, o);
  add_path(qae, o);

  auto* qzp = app.add_subcommand("qzp", "Quantum Zeno projection statistics");
  add_common(qzp, o);
  add_path(qzp, o);

  auto* scan = app.add_subcommand("scan", "Energies over a geometry scan");
  add_common(scan, o);
  add_path(scan, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ham) {
      const auto h = mczeno::load_problem({fcidump, mczeno::parse_mapping(mapping)}, qubit_cap);
      if (ham_out.empty()) {
        mczeno::write_pauli_text(std::cout, h);
      } else {
        mczeno::detail::in_stage("output", ham_out, [&] {
          mczeno::save_hamiltonian(ham_out, h);
          return 0;
        });
      }
      std::cerr << "# " << h.n_qubits() << " qubits, " << h.size() << " terms\n";
      return 0;
    }
    if (*clique) return execute(mczeno::Method::clique, o);
    if (*spectrum) return execute(mczeno::Method::spectrum, o);
    if (*qae) return execute(mczeno::Method::qae, o);
    if (*qzp) return execute(mczeno::Method::qzp, o);
    if (*scan) return execute(mczeno::Method::scan, o);
  } catch (const mczeno::StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
