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

#include <filesystem>
#include <fstream>

#include "mczeno/driver.hpp"
#include "test_support.hpp"

using namespace mczeno;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mczeno_driver_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

RunConfig config(Method m, const std::string& file) {
  RunConfig c;
  c.method = m;
  c.hamiltonian.file = oracle::data(file);
  return c;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(Driver, TwoQubitClique) {
  const auto r = run(config(Method::clique, "clique_2q.pauli"));
  const auto& c = std::get<CliqueReport>(r.report);
  EXPECT_EQ(c.labels, (std::vector<std::string>{"II", "IZ", "ZI"}));
  EXPECT_EQ(c.coefficients, (std::vector<double>{2, -4, 5}));
  EXPECT_DOUBLE_EQ(c.weight, 11.0);
  ASSERT_TRUE(c.brute_force_weight);
  EXPECT_DOUBLE_EQ(*c.brute_force_weight, 11.0);
  const auto csv = to_csv(r);
  EXPECT_EQ(first_line(csv), "label,coefficient_Ha,abs_coefficient_Ha");
  EXPECT_NE(csv.find("IZ,-4,4\n"), std::string::npos);
}

TEST(Driver, QzpMatchesLibraryStatistics) {
  auto c = config(Method::qzp, "crossing_3q.pauli");
  c.alpha = 0.5;
  c.trials = 200;
  c.initial_indices = {0, 2};
  c.seed = 9;
  const auto r = std::get<QzpReport>(run(c).report);
  const auto hp = load_hamiltonian(oracle::data("crossing_3q.pauli"));
  const auto dists =
      zeno_statistics(PathHamiltonian(extract_mc_hamiltonian(hp), hp, 0.5), 20, {0, 2}, 200, 9);
  std::size_t row = 0;
  for (const auto& d : dists) {
    for (const auto& [final_index, count] : d.counts) {
      ASSERT_LT(row, r.rows.size());
      EXPECT_EQ(r.rows[row].initial_index, d.initial_index);
      EXPECT_EQ(r.rows[row].final_index, final_index);
      EXPECT_EQ(r.rows[row].count, count);
      ++row;
    }
  }
  EXPECT_EQ(row, r.rows.size());
  EXPECT_EQ(first_line(to_csv({Method::qzp, r})), "initial_index,final_index,count,final_energy_Ha");
}

TEST(Driver, QaeReport) {
  auto c = config(Method::qae, "gapped_4q.pauli");
  const auto r = std::get<QaeReport>(run(c).report);
  EXPECT_EQ(r.steps, 20u);
  EXPECT_GE(r.error(), -1e-12);
  EXPECT_LE(r.error(), 1e-2);
  EXPECT_NEAR(r.ground_energy, eig(load_hamiltonian(c.hamiltonian.file)).ground_energy(), 1e-12);
  c.initial_state = "0000";
  EXPECT_EQ(std::get<QaeReport>(run(c).report).initial_index, 0u);
  EXPECT_EQ(first_line(to_csv(run(c))),
            "alpha,T_au,delta_t_au,steps,initial_index,final_energy_Ha,ground_energy_Ha,error_Ha,"
            "ground_fidelity,norm_drift");
}

TEST(Driver, SpectrumHasOneRowPerPoint) {
  auto c = config(Method::spectrum, "crossing_3q.pauli");
  c.alpha = 0.5;
  const auto r = run(c);
  const auto csv = to_csv(r);
  EXPECT_EQ(first_line(csv), "s,E0_Ha,E1_Ha,E2_Ha,E3_Ha");
  EXPECT_EQ(line_count(csv), 102u);
  c.k = 50;  // clipped to the dimension
  EXPECT_EQ(std::get<PathSpectrum>(run(c).report).levels.front().size(), 8u);
}

TEST(Driver, RecordsRoundTripAndRunsAreByteIdentical) {
  for (auto m : {Method::clique, Method::qae, Method::qzp, Method::spectrum}) {
    auto c = config(m, "crossing_3q.pauli");
    c.alpha = 0.5;
    c.trials = 100;
    c.n_points = 11;
    c.record = scratch("record_" + to_string(m) + ".json");
    c.output = scratch("out_" + to_string(m) + ".csv");
    const auto r = run(c);
    EXPECT_EQ(load_result(c.record), r) << to_string(m);
    std::ifstream in(c.output);
    const std::string first((std::istreambuf_iterator<char>(in)), {});
    run(c);
    std::ifstream again(c.output);
    const std::string second((std::istreambuf_iterator<char>(again)), {});
    EXPECT_EQ(first, second) << to_string(m);
    EXPECT_EQ(first, to_csv(r));
  }
}

TEST(Driver, ErrorsCarryStageAndInput) {
  auto c = config(Method::qzp, "does_not_exist.pauli");
  try {
    run(c);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "load");
    EXPECT_NE(e.input().find("does_not_exist.pauli"), std::string::npos);
  }
  c = config(Method::qae, "clique_2q.pauli");
  c.delta_t = 0.3;
  try {
    run(c);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "config");
  }
  c = config(Method::qzp, "clique_2q.pauli");
  c.initial_indices = {7};
  try {
    run(c);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "qzp");
  }
}

TEST(Scan, H2PointsAreExactUnderQzp) {
  RunConfig c;
  c.method = Method::scan;
  c.trials = 100;
  for (const auto& [x, f] : std::vector<std::pair<double, std::string>>{
           {0.5, "h2_0.5.fcidump"}, {0.7414, "h2_0.7414.fcidump"}, {1.0, "h2_1.0.fcidump"}}) {
    c.points.push_back({x, oracle::data(f)});
  }
  const auto r = std::get<ScanResult>(run(c).report);
  ASSERT_EQ(r.rows.size(), 3u);
  const auto ref = oracle::fci_reference();
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.status, "ok") << row.message;
    ASSERT_TRUE(row.exact && row.qae && row.qzp);
    EXPECT_NEAR(*row.exact, ref.at(row.file), 1e-9);
    EXPECT_LE(std::abs(*row.qzp_error()), 1e-10) << row.file;
    EXPECT_GE(*row.qae_error(), -1e-12);
  }
  EXPECT_EQ(first_line(to_csv(run(c))),
            "bond_length_angstrom,file,status,exact_Ha,qae_Ha,qzp_Ha,qae_error_Ha,qzp_error_Ha,"
            "qzp_frequency");
}

TEST(Scan, MissingPointIsFlaggedNotFatal) {
  RunConfig c;
  c.method = Method::scan;
  c.trials = 20;
  c.scan_methods = {"exact", "qzp"};
  c.points = {{0.7414, oracle::data("h2_0.7414.fcidump")}, {9.9, oracle::data("h2_9.9.fcidump")}};
  const auto r = std::get<ScanResult>(run(c).report);
  EXPECT_EQ(r.rows[0].status, "ok");
  EXPECT_FALSE(r.rows[0].qae);
  EXPECT_EQ(r.rows[1].status, "missing");
  EXPECT_FALSE(r.rows[1].exact);
  EXPECT_NE(to_csv({Method::scan, r}).find("9.9,h2_9.9.fcidump,missing,,,,,,"), std::string::npos);
}

TEST(Config, BundledFilesParse) {
  for (const auto& entry : std::filesystem::directory_iterator(MCZENO_CONFIG_DIR)) {
    const auto c = load_config(entry.path());
    EXPECT_NO_THROW(validate(c)) << entry.path();
    if (c.method != Method::scan) {
      EXPECT_TRUE(std::filesystem::exists(c.hamiltonian.file)) << entry.path();
    }
    for (const auto& p : c.points) EXPECT_TRUE(std::filesystem::exists(p.file)) << p.file;
  }
  const auto q = load_config(std::filesystem::path(MCZENO_CONFIG_DIR) / "h2_qzp.json");
  EXPECT_EQ(q.method, Method::qzp);
  EXPECT_EQ(q.hamiltonian.mapping, Mapping::parity);
  EXPECT_EQ(q.initial_indices, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Config, ParsingRules) {
  using nlohmann::json;
  const auto c = config_from_json(json{{"method", "qae"}, {"final", "x.pauli"}, {"T", 4.0}}, "/base");
  EXPECT_EQ(c.hamiltonian.file, std::filesystem::path("/base/x.pauli"));
  EXPECT_EQ(c.total_time, 4.0);
  const auto o = config_from_json(json{{"hamiltonian", {{"file", "/a.fcidump"}, {"mapping", "parity"}}}});
  EXPECT_EQ(o.hamiltonian.mapping, Mapping::parity);
  EXPECT_TRUE(o.hamiltonian.is_fcidump());
  EXPECT_EQ(config_from_json(json::object()), RunConfig{});
  EXPECT_THROW(config_from_json(json{{"bogus", 1}}), ParseError);
  EXPECT_THROW(config_from_json(json{{"hamiltonian", "a"}, {"final", "b"}}), ParseError);
  EXPECT_THROW(config_from_json(json{{"method", "anneal"}}), ParseError);
  EXPECT_THROW(config_from_json(json{{"alpha", "big"}}), ParseError);
  EXPECT_THROW(config_from_json(json::array()), ParseError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ParseError);
  RunConfig bad;
  bad.hamiltonian.file = "x.pauli";
  bad.alpha = -1;
  EXPECT_THROW(validate(bad), DomainError);
  bad.alpha = 0;
  bad.method = Method::scan;
  EXPECT_THROW(validate(bad), DomainError);
}
