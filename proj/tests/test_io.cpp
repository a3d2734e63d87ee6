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

#include "doctest.h"
#include "chainskip/error.hpp"
#include "chainskip/io.hpp"
#include "oracle.hpp"

using namespace chainskip;
namespace fs = std::filesystem;

TEST_CASE("model JSON round trip is exact") {
  IsingModel m = oracle::random_model(7, 0.5, 12);
  m.add_variable(40);
  m.set_offset(-0.1);
  const json j = model_to_json(m);
  CHECK(model_from_json(j) == m);
  CHECK(model_from_json(json::parse(j.dump())) == m);
  CHECK(j.at("variables").size() == 8);
}

TEST_CASE("model JSON schema errors") {
  CHECK_THROWS_AS(model_from_json(json::array()), ConfigError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"variables":[0],"h":{},"J":[[0,1]],"offset":0})")),
                  ConfigError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"variables":[0],"h":{"x":1},"J":[],"offset":0})")),
                  ConfigError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"variables":[0],"h":{},"J":[[0,0,1.0]],"offset":0})")),
                  ConfigError);
}

TEST_CASE("hardware specs") {
  CHECK(parse_hardware_spec("chimera:2,3,4").num_nodes() == 48);
  CHECK(parse_hardware_spec("grid:3,5").num_edges() == 22);
  CHECK(parse_hardware_spec("complete:5").num_edges() == 10);
  CHECK(parse_hardware_spec("none").num_nodes() == 0);
  for (const char* bad : {"chimera:2,3", "grid:0,3", "torus:3", "chimera", "complete:x", "grid:2,2,"})
    CHECK_THROWS_AS(parse_hardware_spec(bad), ConfigError);
  for (const HardwareGraph& g : {chimera(2, 2, 3), grid(2, 5), complete(4)}) {
    const HardwareGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.topology() == g.topology());
  }
  const HardwareGraph custom = from_edge_list({{0, 5}, {5, 9}});
  CHECK(graph_from_json(graph_to_json(custom)).edges() == custom.edges());
}

TEST_CASE("embedding and sample set round trips") {
  const Embedding e{{{3, {1, 2}}, {10, {7}}}};
  CHECK(embedding_from_json(embedding_to_json(e)) == e);
  CHECK(embedding_to_json(e).dump() == R"({"chains":{"3":[1,2],"10":[7]}})");

  SampleSet s;
  s.samples = {{{{2, 1}, {5, -1}}, -1.5, 3}, {{{2, -1}, {5, -1}}, 0.25, 1}};
  s.num_reads = 4;
  const std::string text = sampleset_to_jsonl(s);
  CHECK(text.substr(0, text.find('\n')) == R"({"spins":[1,-1],"energy":-1.5,"occ":3})");
  const SampleSet back = sampleset_from_jsonl(text, {2, 5});
  CHECK(back.num_reads == 4);
  REQUIRE(back.samples.size() == 2);
  CHECK(back.samples[1].assignment == s.samples[1].assignment);
  CHECK_THROWS_AS(sampleset_from_jsonl(text, {2}), ConfigError);
}

TEST_CASE("atomic writes") {
  const fs::path dir = fs::temp_directory_path() / "chainskip_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path file = dir / "out.txt";
  write_file_atomic(file, "first");
  write_file_atomic(file, "second");
  CHECK(read_file(file) == "second");
  CHECK_FALSE(fs::exists(dir / "out.txt.tmp"));
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.txt", "x"), IoError);
  CHECK_THROWS_AS(write_file_atomic(dir, "x"), IoError);
  CHECK_THROWS_AS(read_file(dir / "absent.txt"), IoError);
  fs::remove_all(dir);
}
