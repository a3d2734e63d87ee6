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


#include "cli.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chainskip/bench.hpp"
#include "chainskip/error.hpp"
#include "chainskip/io.hpp"
#include "chainskip/runtime.hpp"
#include "chainskip/sampler.hpp"
#include "chainskip/skipper.hpp"
#include "chainskip/skipperg.hpp"

namespace chainskip::cli {

namespace {

constexpr const char* kToolName = "chainskip";

// Settings of the run command. Also the schema of --config files.
struct RunConfig {
  std::string model;
  std::string scheme = "skipper";
  std::size_t cuts = 0;
  std::string sampler = "sa";
  std::uint64_t reads = 4000;
  double noise_p = 0.0;
  std::string hw = "chimera:4,4,4";
  std::uint64_t seed = 0;
  std::string out;
  int sweeps = 1000;
  double chain_strength = 2.0;
  bool sqc = false;
  double embed_timeout = 10.0;
  int embed_tries = 5;
  int embed_patience = 5;
};

json to_json(const RunConfig& c) {
  return json{{"model", c.model},
              {"scheme", c.scheme},
              {"cuts", c.cuts},
              {"sampler", c.sampler},
              {"reads", c.reads},
              {"noise_p", c.noise_p},
              {"hw", c.hw},
              {"seed", c.seed},
              {"out", c.out},
              {"sweeps", c.sweeps},
              {"chain_strength", c.chain_strength},
              {"sqc", c.sqc},
              {"embed_timeout", c.embed_timeout},
              {"embed_tries", c.embed_tries},
              {"embed_patience", c.embed_patience}};
}

template <class T>
void read_key(const json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  const json known = to_json(RunConfig{});
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  RunConfig c;
  read_key(j, "model", c.model);
  read_key(j, "scheme", c.scheme);
  read_key(j, "cuts", c.cuts);
  read_key(j, "sampler", c.sampler);
  read_key(j, "reads", c.reads);
  read_key(j, "noise_p", c.noise_p);
  read_key(j, "hw", c.hw);
  read_key(j, "seed", c.seed);
  read_key(j, "out", c.out);
  read_key(j, "sweeps", c.sweeps);
  read_key(j, "chain_strength", c.chain_strength);
  read_key(j, "sqc", c.sqc);
  read_key(j, "embed_timeout", c.embed_timeout);
  read_key(j, "embed_tries", c.embed_tries);
  read_key(j, "embed_patience", c.embed_patience);
  return c;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw ConfigError("malformed " + what + ": " + ex.what());
  }
}

// Accepts either a bare model or a generated file with a "model" member.
IsingModel load_model(const std::string& path) {
  const json j = parse_json(read_file(path), "model file " + path);
  if (j.is_object() && j.contains("model")) return model_from_json(j.at("model"));
  return model_from_json(j);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file_atomic(path, text);
}

json assignment_to_json(const Assignment& a) {
  json j = json::object();
  for (const auto& [q, s] : a) j[std::to_string(q)] = static_cast<int>(s);
  return j;
}

json totals_to_json(const UnembedTotals& t) {
  return json{{"reads", t.reads},
              {"chains_per_read", t.chains_per_read},
              {"broken_chains", t.broken_chains},
              {"balanced_chains", t.balanced_chains},
              {"bruteforce_repairs", t.bruteforce_repairs},
              {"random_repairs", t.random_repairs},
              {"broken_fraction", t.broken_fraction()}};
}

// Rejects NaN in reports; nlohmann would write it as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::shared_ptr<const Sampler> make_sampler(const RunConfig& c) {
  SamplerConfig sc;
  sc.num_reads = c.reads;
  sc.sweeps = c.sweeps;
  sc.seed = c.seed;
  std::shared_ptr<const Sampler> inner;
  if (c.sampler == "exact")
    inner = std::make_shared<ExactSampler>(sc);
  else if (c.sampler == "sa")
    inner = std::make_shared<SimulatedAnnealingSampler>(sc);
  else
    throw ConfigError("unknown sampler '" + c.sampler + "' (expected exact or sa)");
  if (!(c.noise_p >= 0.0 && c.noise_p < 1.0)) throw ConfigError("noise-p must lie in [0, 1)");
  return with_flip_noise(inner, c.noise_p, c.seed);
}

json run_command(const RunConfig& c) {
  if (c.model.empty()) throw ConfigError("--model is required");
  const Scheme scheme = [&] {
    try {
      return scheme_from_string(c.scheme);
    } catch (const InvalidArgument& ex) {
      throw ConfigError(ex.what());
    }
  }();
  if (c.cuts > kMaxCuts) throw ConfigError("--cuts must not exceed " + std::to_string(kMaxCuts));
  if (scheme == Scheme::baseline && c.cuts != 0) throw ConfigError("the baseline scheme takes no cuts");

  const IsingModel model = load_model(c.model);
  if (model.num_variables() == 0) throw ConfigError("model has no variables");
  const HardwareGraph hw = parse_hardware_spec(c.hw);
  const auto sampler = make_sampler(c);

  ExecutionOptions opt;
  opt.hardware = hw.num_nodes() == 0 ? nullptr : &hw;
  opt.embedder.seed = c.seed;
  opt.embedder.timeout_seconds = c.embed_timeout;
  opt.embedder.tries = c.embed_tries;
  opt.embedder.max_no_improvement = c.embed_patience;
  opt.chain_strength = ChainStrengthPolicy::scaled(c.chain_strength);
  opt.sqc = c.sqc;
  try {
    opt.embedder.validate();
    opt.chain_strength.validate();
  } catch (const InvalidArgument& ex) {
    throw ConfigError(ex.what());
  }

  json report;
  report["tool"] = kToolName;
  report["config"] = to_json(c);
  report["model"] = json{{"num_variables", model.num_variables()}, {"num_couplers", model.quadratic().size()}};
  report["scheme"] = to_string(scheme);

  Sample best;
  std::size_t n_qmi = 0;
  std::size_t effective_cuts = c.cuts;
  if (scheme == Scheme::skipperg) {
    SkipperGResult r = run_skipper_g(model, c.cuts, *sampler, opt, c.seed);
    best = r.best;
    n_qmi = r.n_qmi;
    effective_cuts = r.levels_completed;
    report["cut_qubits"] = r.cut_qubits;
    report["path"] = r.path;
    report["n_embeddings"] = r.n_embeddings;
    report["levels_completed"] = r.levels_completed;
    json metrics = json::array();
    for (const auto& m : r.embedding_metrics) metrics.push_back(metrics_to_json(m));
    report["embedding_metrics"] = std::move(metrics);
    json nodes = json::array();
    for (const auto& node : r.nodes)
      nodes.push_back(json{{"index", node.index},
                           {"level", node.level},
                           {"fixing", assignment_to_json(node.fixing)},
                           {"best_energy", node.best.energy},
                           {"mean_energy", node.mean_energy},
                           {"feature", number(node.feature)},
                           {"degenerate_feature", node.degenerate_feature},
                           {"unembed", totals_to_json(node.unembed)}});
    report["nodes"] = std::move(nodes);
    report["warnings"] = r.warnings;
  } else {
    SkipperResult r = run_skipper(model, c.cuts, *sampler, opt, c.seed);
    best = r.best;
    n_qmi = r.n_qmi;
    report["cut_qubits"] = r.plan.qubits;
    report["symmetry_halved"] = r.plan.symmetry_halved;
    report["n_embeddings"] = r.embedding ? 1 : 0;
    report["embedding_metrics"] = r.metrics ? json::array({metrics_to_json(*r.metrics)}) : json::array();
    json subs = json::array();
    for (const auto& rec : r.records)
      subs.push_back(json{{"index", rec.index},
                          {"fixing", assignment_to_json(rec.fixing)},
                          {"distinct_samples", rec.distinct_samples},
                          {"reads", rec.reads},
                          {"best_energy", rec.best_energy},
                          {"mean_energy", rec.mean_energy},
                          {"unembed", totals_to_json(rec.unembed)}});
    report["subproblems"] = std::move(subs);
    report["warnings"] = json::array();
  }
  report["n_qmi"] = n_qmi;
  report["best"] = json{{"energy", best.energy}, {"assignment", assignment_to_json(best.assignment)}};
  if (model.num_variables() <= kDefaultOracleLimit) {
    const double ground = brute_force_ground(model).energy;
    report["ground_energy"] = ground;
    report["energy_residual"] = energy_residual(best.energy, ground);
  } else {
    report["ground_energy"] = nullptr;
    report["energy_residual"] = nullptr;
  }
  json runtime = json::object();
  for (AccessMode mode : {AccessMode::shared, AccessMode::dedicated}) {
    const RuntimeEstimate est = total_runtime(RuntimeParams::for_mode(mode), n_qmi, effective_cuts, scheme);
    runtime[to_string(mode)] = json{{"t_emb", est.t_emb}, {"t_qmi", est.t_qmi}, {"total", est.total}};
  }
  report["runtime_estimate"] = std::move(runtime);
  return report;
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 0) throw ConfigError(std::string("bad ") + what + " list '" + text + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ConfigError(std::string("empty ") + what + " list");
  return out;
}

void apply_runtime_key(RuntimeParams& p, const std::string& key, const json& value) {
  static const std::map<std::string, double RuntimeParams::*> fields = {
      {"t_emb_baseline", &RuntimeParams::t_emb_baseline}, {"t_queue", &RuntimeParams::t_queue},
      {"t_net", &RuntimeParams::t_net},   {"t_classical", &RuntimeParams::t_classical},
      {"t_p", &RuntimeParams::t_p},       {"delta", &RuntimeParams::delta},
      {"t_s", &RuntimeParams::t_s},       {"t_qmi_cap", &RuntimeParams::t_qmi_cap}};
  if (key == "reads") {
    if (!value.is_number_unsigned()) throw ConfigError("runtime key 'reads' must be a non-negative integer");
    p.reads = value.get<std::uint64_t>();
    return;
  }
  auto it = fields.find(key);
  if (it == fields.end()) throw ConfigError("unknown runtime key '" + key + "'");
  if (!value.is_number()) throw ConfigError("runtime key '" + key + "' must be a number");
  p.*(it->second) = value.get<double>();
}

std::string runtime_table(const json& overrides, std::size_t c, bool zero_linear) {
  if (!overrides.is_object()) throw ConfigError("runtime params must be a JSON object");
  std::ostringstream csv;
  csv << "scheme,mode,c,n_qmi,t_emb,t_qmi,total,total_parallel_qmi\n";
  csv.precision(17);
  for (Scheme s : {Scheme::baseline, Scheme::skipper, Scheme::skipperg}) {
    for (AccessMode mode : {AccessMode::shared, AccessMode::dedicated}) {
      RuntimeParams p = RuntimeParams::for_mode(mode);
      for (const auto& [key, value] : overrides.items()) apply_runtime_key(p, key, value);
      try {
        p.validate();
      } catch (const InvalidArgument& ex) {
        throw ConfigError(ex.what());
      }
      const std::size_t cs = s == Scheme::baseline ? 0 : c;
      const std::size_t n_qmi = expected_qmis(s, cs, zero_linear);
      const RuntimeEstimate est = total_runtime(p, n_qmi, cs, s);
      csv << to_string(s) << ',' << to_string(mode) << ',' << cs << ',' << n_qmi << ',' << est.t_emb << ','
          << est.t_qmi << ',' << est.total << ',' << est.total_parallel_qmi << '\n';
    }
  }
  return csv.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain-skipping pipelines for quantum annealers", kToolName};
  app.require_subcommand(1);

  // generate
  BAParams ba;
  std::string linear = "zero";
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a seeded Barabasi-Albert Ising model as JSON");
  gen->add_option("--n", ba.n, "Number of program qubits")->required();
  gen->add_option("--m", ba.m, "Preferential attachment factor")->required();
  gen->add_option("--seed", ba.seed, "Generator seed");
  gen->add_option("--linear", linear, "Linear coefficients: zero or normal");
  gen->add_option("--out", gen_out, "Output JSON path")->required();

  // run
  RunConfig rc;
  std::string config_path;
  auto* runc = app.add_subcommand("run", "Solve a model with the baseline, Skipper or Skipper-G");
  std::map<std::string, CLI::Option*> flags;
  flags["model"] = runc->add_option("--model", rc.model, "Model JSON path");
  flags["scheme"] = runc->add_option("--scheme", rc.scheme, "baseline, skipper or skipper-g");
  flags["cuts"] = runc->add_option("--cuts", rc.cuts, "Number of chain cuts c");
  flags["sampler"] = runc->add_option("--sampler", rc.sampler, "exact or sa");
  flags["reads"] = runc->add_option("--reads", rc.reads, "Reads per QMI");
  flags["noise_p"] = runc->add_option("--noise-p", rc.noise_p, "Per-qubit readout flip probability");
  flags["hw"] = runc->add_option("--hw", rc.hw, "chimera:m,n,t | grid:r,c | complete:n | none");
  flags["seed"] = runc->add_option("--seed", rc.seed, "Master seed");
  flags["out"] = runc->add_option("--out", rc.out, "Report JSON path (stdout if absent)");
  flags["sweeps"] = runc->add_option("--sweeps", rc.sweeps, "Annealing sweeps per read");
  flags["chain_strength"] = runc->add_option("--chain-strength", rc.chain_strength, "Chain strength factor alpha");
  flags["sqc"] = runc->add_flag("--sqc", rc.sqc, "Apply single-qubit correction");
  flags["embed_timeout"] = runc->add_option("--embed-timeout", rc.embed_timeout, "Embedder timeout in seconds");
  flags["embed_tries"] = runc->add_option("--embed-tries", rc.embed_tries, "Embedder restarts");
  flags["embed_patience"] = runc->add_option("--embed-patience", rc.embed_patience, "Passes without improvement");
  runc->add_option("--config", config_path, "JSON file with run settings; flags override it");

  // capacity
  std::string cap_m = "3", cap_cuts = "0", cap_seeds = "1", cap_hw = "chimera:4,4,4", cap_out, cap_family = "ba";
  std::size_t cap_n_min = 1;
  EmbedderParams cap_embed;
  auto* cap = app.add_subcommand("capacity", "Largest embeddable BA model per cut count, as CSV");
  cap->add_option("--family", cap_family, "Graph family (ba)");
  cap->add_option("--m", cap_m, "Comma-separated attachment factors");
  cap->add_option("--cuts", cap_cuts, "Comma-separated cut counts");
  cap->add_option("--seeds", cap_seeds, "Comma-separated seeds");
  cap->add_option("--hw", cap_hw, "Hardware spec");
  cap->add_option("--n-min", cap_n_min, "Smallest size probed");
  cap->add_option("--embed-timeout", cap_embed.timeout_seconds, "Embedder timeout in seconds");
  cap->add_option("--embed-tries", cap_embed.tries, "Embedder restarts");
  cap->add_option("--embed-patience", cap_embed.max_no_improvement, "Passes without improvement");
  cap->add_option("--out", cap_out, "CSV path (stdout if absent)");

  // runtime-model
  std::string rt_params, rt_out;
  std::size_t rt_cuts = 10;
  bool rt_zero_linear = false;
  auto* rt = app.add_subcommand("runtime-model", "End-to-end runtime estimates per scheme and access mode");
  rt->add_option("--params", rt_params, "JSON object overriding runtime parameters");
  rt->add_option("--cuts", rt_cuts, "Cut count for Skipper and Skipper-G");
  rt->add_flag("--zero-linear", rt_zero_linear, "Count Skipper QMIs with symmetry halving");
  rt->add_option("--out", rt_out, "CSV path (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << kToolName << ": " << ex.what() << '\n';
    return kConfigError;
  }

  try {
    if (*gen) {
      try {
        ba.linear = linear_mode_from_string(linear);
        ba.validate();
      } catch (const InvalidArgument& ex) {
        throw ConfigError(ex.what());
      }
      json doc;
      doc["provenance"] = json{{"tool", kToolName},
                               {"family", "ba"},
                               {"n", ba.n},
                               {"m", ba.m},
                               {"seed", ba.seed},
                               {"linear", to_string(ba.linear)}};
      doc["model"] = model_to_json(ba_model(ba));
      write_file_atomic(gen_out, doc.dump(2) + "\n");
    } else if (*runc) {
      RunConfig cfg = rc;
      if (!config_path.empty()) {
        cfg = run_config_from_json(parse_json(read_file(config_path), "config " + config_path));
        const json cli_values = to_json(rc);
        json merged = to_json(cfg);
        for (const auto& [key, opt] : flags)
          if (opt->count() > 0) merged[key] = cli_values.at(key);
        cfg = run_config_from_json(merged);
      }
      emit(cfg.out, run_command(cfg).dump(2) + "\n", out);
    } else if (*cap) {
      if (cap_family != "ba") throw ConfigError("unknown family '" + cap_family + "' (expected ba)");
      const auto ms = parse_list(cap_m, "m");
      const auto cuts = parse_list(cap_cuts, "cuts");
      const auto seeds = parse_list(cap_seeds, "seed");
      for (auto c : cuts)
        if (c > kMaxCuts) throw ConfigError("cut count " + std::to_string(c) + " exceeds " + std::to_string(kMaxCuts));
      for (auto m : ms)
        if (m < 1 || m > 6) throw ConfigError("m must lie in [1, 6]");
      try {
        cap_embed.validate();
      } catch (const InvalidArgument& ex) {
        throw ConfigError(ex.what());
      }
      const HardwareGraph hw = parse_hardware_spec(cap_hw);
      if (hw.num_nodes() == 0) throw ConfigError("capacity needs a hardware graph");
      std::ostringstream csv;
      csv << "family,m,c,seed,capacity,avg_chain,max_chain,variance,unused_qubits,ER\n";
      for (auto m : ms)
        for (auto seed : seeds)
          for (auto c : cuts) {
            ModelFamily family = [m, seed](std::size_t n) { return ba_model(BAParams{n, m, seed, LinearMode::zero}); };
            EmbedderParams p = cap_embed;
            p.seed = seed;
            const CapacityResult r = capacity_search(family, hw, c, p, seed, std::max(cap_n_min, m + 1));
            csv << cap_family << ',' << m << ',' << c << ',' << seed << ',' << r.capacity << ',';
            if (r.metrics)
              csv << r.metrics->avg_chain_len << ',' << r.metrics->max_chain_len << ','
                  << r.metrics->chain_len_variance << ',' << r.metrics->unused_qubits;
            else
              csv << ",,,";
            csv << ",\n";
          }
      emit(cap_out, csv.str(), out);
    } else if (*rt) {
      json overrides = json::object();
      if (!rt_params.empty()) overrides = parse_json(read_file(rt_params), "runtime params " + rt_params);
      if (rt_cuts > kMaxCuts) throw ConfigError("--cuts must not exceed " + std::to_string(kMaxCuts));
      emit(rt_out, runtime_table(overrides, rt_cuts, rt_zero_linear), out);
    }
  } catch (const ConfigError& ex) {
    err << kToolName << ": config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& ex) {
    err << kToolName << ": invalid argument: " << ex.what() << '\n';
    return kConfigError;
  } catch (const IoError& ex) {
    err << kToolName << ": I/O error: " << ex.what() << '\n';
    return kIoError;
  } catch (const EmbeddingFailure& ex) {
    err << kToolName << ": embedding failed: " << ex.what() << '\n';
    return kEmbeddingFailure;
  } catch (const std::exception& ex) {
    err << kToolName << ": error: " << ex.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace chainskip::cli
