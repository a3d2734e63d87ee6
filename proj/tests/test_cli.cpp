// Copyright 2026 The chainskip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "chainskip/bench.hpp"
#include "chainskip/io.hpp"
#include "oracle.hpp"

using namespace chainskip;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"chainskip"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : store) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("chainskip_cli_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate matches the golden files") {
  TempDir tmp;
  for (int m = 1; m <= 3; ++m) {
    const std::string name = "ba_n20_m" + std::to_string(m) + "_s1.json";
    const Result r = invoke({"generate", "--n", "20", "--m", std::to_string(m), "--seed", "1", "--out", tmp / name});
    REQUIRE(r.code == cli::kOk);
    const std::string text = read_file(tmp / name);
    CHECK(text == read_file(fs::path(CHAINSKIP_GOLDEN_DIR) / name));
    const json j = json::parse(text);
    CHECK(j.at("provenance").at("seed") == 1);
    const IsingModel model = model_from_json(j.at("model"));
    CHECK(model.num_variables() == 20);
    CHECK(model.num_interactions() == static_cast<std::size_t>(m * (m - 1) / 2 + (20 - m) * m));
    CHECK(has_zero_linear(model));
  }
}

TEST_CASE("generate errors") {
  TempDir tmp;
  CHECK(invoke({"generate", "--n", "20", "--m", "2", "--out", tmp / "nodir/x.json"}).code == cli::kIoError);
  CHECK(invoke({"generate", "--n", "3", "--m", "3", "--out", tmp / "x.json"}).code == cli::kConfigError);
  CHECK(invoke({"generate", "--n", "10", "--m", "2", "--linear", "cubic", "--out", tmp / "x.json"}).code ==
        cli::kConfigError);
  CHECK(invoke({"generate", "--n", "10"}).code == cli::kConfigError);
  CHECK(invoke({"bogus"}).code == cli::kConfigError);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("run reports") {
  TempDir tmp;
  REQUIRE(invoke({"generate", "--n", "14", "--m", "2", "--seed", "4", "--linear", "normal", "--out", tmp / "m.json"})
              .code == 0);
  const IsingModel model = model_from_json(json::parse(read_file(tmp / "m.json")).at("model"));
  const double ground = oracle::ground_energy(model);

  const Result exact = invoke({"run", "--model", tmp / "m.json", "--scheme", "skipper", "--cuts", "3", "--sampler",
                               "exact", "--hw", "none", "--reads", "5"});
  REQUIRE(exact.code == 0);
  const json rep = json::parse(exact.out);
  CHECK(rep.at("energy_residual").get<double>() == 0.0);
  CHECK(rep.at("ground_energy").get<double>() == doctest::Approx(ground).epsilon(1e-12));
  CHECK(rep.at("n_qmi") == 8);
  CHECK(rep.at("config").at("cuts") == 3);

  const Result g = invoke({"run", "--model", tmp / "m.json", "--scheme", "skipper-g", "--cuts", "11", "--sampler",
                           "exact", "--hw", "none", "--out", tmp / "g.json"});
  REQUIRE(g.code == 0);
  CHECK(g.out.empty());
  const json grep = json::parse(read_file(tmp / "g.json"));
  CHECK(grep.at("n_qmi") == 23);
  CHECK(grep.at("levels_completed") == 11);
  CHECK(grep.at("best").at("energy").get<double>() <= grep.at("nodes")[0].at("best_energy").get<double>());

  // c = 0 equals the baseline, config replay reproduces the run
  const Result base = invoke({"run", "--model", tmp / "m.json", "--scheme", "baseline", "--hw", "chimera:4,4,4",
                              "--reads", "100", "--sweeps", "100", "--seed", "7"});
  const Result zero = invoke({"run", "--model", tmp / "m.json", "--scheme", "skipper", "--cuts", "0", "--hw",
                              "chimera:4,4,4", "--reads", "100", "--sweeps", "100", "--seed", "7"});
  REQUIRE(base.code == 0);
  REQUIRE(zero.code == 0);
  json a = json::parse(base.out), b = json::parse(zero.out);
  CHECK(a.at("best") == b.at("best"));
  CHECK(a.at("n_qmi") == 1);
  CHECK(a.at("runtime_estimate").at("shared").at("total") == 1806.0);
  write_file_atomic(tmp / "cfg.json", a.at("config").dump());
  const Result replay = invoke({"run", "--config", tmp / "cfg.json"});
  REQUIRE(replay.code == 0);
  CHECK(json::parse(replay.out).at("best") == a.at("best"));
  // flags override the config file
  const Result over = invoke({"run", "--config", tmp / "cfg.json", "--scheme", "skipper", "--cuts", "2"});
  REQUIRE(over.code == 0);
  CHECK(json::parse(over.out).at("config").at("cuts") == 2);
}

TEST_CASE("run exit codes") {
  TempDir tmp;
  REQUIRE(invoke({"generate", "--n", "40", "--m", "5", "--out", tmp / "big.json"}).code == 0);
  CHECK(invoke({"run", "--model", tmp / "absent.json"}).code == cli::kIoError);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--hw", "chimera:1,1,2", "--embed-tries", "1",
                "--embed-timeout", "1"})
            .code == cli::kEmbeddingFailure);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--scheme", "bfs"}).code == cli::kConfigError);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--cuts", "12"}).code == cli::kConfigError);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--hw", "hex:3"}).code == cli::kConfigError);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--noise-p", "1.0"}).code == cli::kConfigError);
  CHECK(invoke({"run", "--model", tmp / "big.json", "--out", tmp / "no/dir.json", "--hw", "none", "--reads", "2",
                "--sweeps", "2"})
            .code == cli::kIoError);
  write_file_atomic(tmp / "bad.json", R"({"scheme":"skipper","colour":"red"})");
  CHECK(invoke({"run", "--config", tmp / "bad.json"}).code == cli::kConfigError);
  write_file_atomic(tmp / "broken.json", "{");
  CHECK(invoke({"run", "--config", tmp / "broken.json"}).code == cli::kConfigError);
  CHECK(invoke({"run", "--model", tmp / "broken.json"}).code == cli::kConfigError);
}

TEST_CASE("capacity CSV") {
  const Result r = invoke({"capacity", "--m", "2", "--cuts", "0,1", "--seeds", "1,2", "--hw", "chimera:2,2,4"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,m,c,seed,capacity,avg_chain,max_chain,variance,unused_qubits,ER");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("ba,2,", 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
  }
  CHECK(rows == 4);
  CHECK(invoke({"capacity", "--cuts", "12"}).code == cli::kConfigError);
  CHECK(invoke({"capacity", "--cuts", "1,x"}).code == cli::kConfigError);
  CHECK(invoke({"capacity", "--family", "er"}).code == cli::kConfigError);
}

TEST_CASE("runtime-model CSV") {
  TempDir tmp;
  const Result r = invoke({"runtime-model", "--cuts", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("baseline,shared,0,1,1800,2,1806,1806\n") != std::string::npos);
  CHECK(r.out.find("skipper,shared,10,1024,180,2,4278,") != std::string::npos);
  CHECK(r.out.find("skipper-g,dedicated,10,21,1800,2,1865,1805\n") != std::string::npos);
  write_file_atomic(tmp / "p.json", R"({"t_emb_baseline": 600, "reads": 1000})");
  const Result p = invoke({"runtime-model", "--params", tmp / "p.json", "--zero-linear", "--out", tmp / "rt.csv"});
  REQUIRE(p.code == 0);
  CHECK(read_file(tmp / "rt.csv").find("skipper,shared,10,512,60,0.51") != std::string::npos);
  write_file_atomic(tmp / "bad.json", R"({"t_warp": 1})");
  CHECK(invoke({"runtime-model", "--params", tmp / "bad.json"}).code == cli::kConfigError);
  write_file_atomic(tmp / "neg.json", R"({"t_net": -1})");
  CHECK(invoke({"runtime-model", "--params", tmp / "neg.json"}).code == cli::kConfigError);
  write_file_atomic(tmp / "str.json", R"({"t_net": "one"})");
  CHECK(invoke({"runtime-model", "--params", tmp / "str.json"}).code == cli::kConfigError);
}
