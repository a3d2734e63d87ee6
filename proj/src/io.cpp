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

#include "chainskip/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "chainskip/error.hpp"

namespace chainskip {

namespace {

QubitId parse_id(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad qubit id '" + s + "'");
  }
  if (used != s.size() || v > std::numeric_limits<QubitId>::max()) throw ConfigError("bad qubit id '" + s + "'");
  return static_cast<QubitId>(v);
}

template <class F>
auto schema(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed ") + what + " JSON: " + ex.what());
  } catch (const InvalidArgument& ex) {
    throw ConfigError(std::string("invalid ") + what + ": " + ex.what());
  }
}

std::vector<std::size_t> parse_dims(const std::string& s, std::size_t count, const std::string& spec) {
  std::vector<std::size_t> dims;
  if (s.empty() || s.back() == ',') throw ConfigError("bad hardware spec '" + spec + "'");
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 1) throw ConfigError("bad hardware spec '" + spec + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.size() != count) throw ConfigError("bad hardware spec '" + spec + "'");
  return dims;
}

}  // namespace

json model_to_json(const IsingModel& model) {
  json j;
  j["variables"] = json::array();
  for (QubitId q : model.variables()) j["variables"].push_back(q);
  j["h"] = json::object();
  for (const auto& [q, v] : model.linear()) j["h"][std::to_string(q)] = v;
  j["J"] = json::array();
  for (const auto& [e, v] : model.quadratic()) j["J"].push_back(json::array({e.first, e.second, v}));
  j["offset"] = model.offset();
  return j;
}

IsingModel model_from_json(const json& j) {
  return schema("model", [&] {
    IsingModel m;
    if (!j.is_object()) throw ConfigError("model JSON must be an object");
    if (j.contains("variables"))
      for (const auto& q : j.at("variables")) m.add_variable(q.get<QubitId>());
    if (j.contains("h"))
      for (const auto& [k, v] : j.at("h").items()) m.set_linear(parse_id(k), v.get<double>());
    if (j.contains("J"))
      for (const auto& t : j.at("J")) {
        if (!t.is_array() || t.size() != 3) throw ConfigError("J entries must be [i, j, coef]");
        m.set_quadratic(t[0].get<QubitId>(), t[1].get<QubitId>(), t[2].get<double>());
      }
    if (j.contains("offset")) m.set_offset(j.at("offset").get<double>());
    return m;
  });
}

json graph_to_json(const HardwareGraph& g) {
  json j;
  j["topology"] = to_string(g.topology());
  switch (g.topology()) {
    case Topology::chimera:
      j["m"] = g.chimera_m;
      j["n"] = g.chimera_n;
      j["t"] = g.chimera_t;
      break;
    case Topology::grid:
      j["rows"] = g.grid_rows;
      j["cols"] = g.grid_cols;
      break;
    case Topology::complete:
      j["n"] = g.num_nodes();
      break;
    case Topology::custom: {
      j["nodes"] = g.nodes();
      json edges = json::array();
      for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

HardwareGraph graph_from_json(const json& j) {
  return schema("hardware", [&] {
    const std::string topo = j.at("topology").get<std::string>();
    if (topo == "chimera")
      return chimera(j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), j.at("t").get<std::size_t>());
    if (topo == "grid") return grid(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    if (topo == "complete") return complete(j.at("n").get<std::size_t>());
    if (topo == "custom") {
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ConfigError("edges must be [a, b] pairs");
        edges.emplace_back(e[0].get<QubitId>(), e[1].get<QubitId>());
      }
      std::vector<QubitId> nodes;
      if (j.contains("nodes")) nodes = j.at("nodes").get<std::vector<QubitId>>();
      Graph g = Graph::from_edges(edges, nodes);
      if (g.num_nodes() == 0) throw ConfigError("hardware graph has no qubits");
      return g;
    }
    throw ConfigError("unknown topology '" + topo + "'");
  });
}

HardwareGraph parse_hardware_spec(const std::string& spec) {
  if (spec == "none") return HardwareGraph{};
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("bad hardware spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  return schema("hardware", [&] {
    if (kind == "chimera") {
      auto d = parse_dims(rest, 3, spec);
      return chimera(d[0], d[1], d[2]);
    }
    if (kind == "grid") {
      auto d = parse_dims(rest, 2, spec);
      return grid(d[0], d[1]);
    }
    if (kind == "complete") return complete(parse_dims(rest, 1, spec)[0]);
    throw ConfigError("bad hardware spec '" + spec + "'");
  });
}

json embedding_to_json(const Embedding& e) {
  json chains = json::object();
  for (const auto& [q, chain] : e.chains) chains[std::to_string(q)] = chain;
  return json{{"chains", std::move(chains)}};
}

Embedding embedding_from_json(const json& j) {
  return schema("embedding", [&] {
    Embedding e;
    for (const auto& [k, v] : j.at("chains").items()) {
      auto chain = v.get<std::vector<QubitId>>();
      std::sort(chain.begin(), chain.end());
      e.chains.emplace(parse_id(k), std::move(chain));
    }
    return e;
  });
}

json metrics_to_json(const EmbeddingMetrics& m) {
  return json{{"avg_chain_len", m.avg_chain_len},       {"max_chain_len", m.max_chain_len},
              {"chain_len_variance", m.chain_len_variance}, {"used_qubits", m.used_qubits},
              {"unused_qubits", m.unused_qubits},       {"embed_time", m.embed_time}};
}

std::string sampleset_to_jsonl(const SampleSet& s) {
  std::string out;
  for (const auto& sample : s.samples) {
    json spins = json::array();
    for (const auto& [q, z] : sample.assignment) spins.push_back(static_cast<int>(z));
    json rec{{"spins", std::move(spins)}, {"energy", sample.energy}, {"occ", sample.occurrences}};
    out += rec.dump();
    out += '\n';
  }
  return out;
}

SampleSet sampleset_from_jsonl(const std::string& text, const std::vector<QubitId>& variables) {
  return schema("sample set", [&] {
    SampleSet s;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      json rec = json::parse(line);
      const auto& spins = rec.at("spins");
      if (spins.size() != variables.size()) throw ConfigError("spin count does not match variables");
      Sample sample;
      for (std::size_t k = 0; k < variables.size(); ++k) {
        int z = spins[k].get<int>();
        if (z != 1 && z != -1) throw ConfigError("spins must be -1 or +1");
        sample.assignment[variables[k]] = static_cast<Spin>(z);
      }
      sample.energy = rec.at("energy").get<double>();
      sample.occurrences = rec.at("occ").get<std::uint64_t>();
      if (sample.occurrences == 0) throw ConfigError("occurrences must be positive");
      s.num_reads += sample.occurrences;
      s.samples.push_back(std::move(sample));
    }
    return s;
  });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.empty()) throw IoError("empty output path");
  if (path.has_parent_path() && !std::filesystem::is_directory(path.parent_path()))
    throw IoError("output directory does not exist: " + path.parent_path().string());
  if (std::filesystem::is_directory(path)) throw IoError(path.string() + " is a directory");
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace chainskip
