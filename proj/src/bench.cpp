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

#include "chainskip/bench.hpp"

#include <cmath>
#include <random>

#include "chainskip/error.hpp"
#include "chainskip/rng.hpp"
#include "chainskip/skipper.hpp"

namespace chainskip {

std::string to_string(LinearMode m) { return m == LinearMode::zero ? "zero" : "normal"; }

LinearMode linear_mode_from_string(const std::string& s) {
  if (s == "zero") return LinearMode::zero;
  if (s == "normal") return LinearMode::normal;
  throw InvalidArgument("unknown linear mode '" + s + "'");
}

void BAParams::validate() const {
  if (m < 1 || m > 6) throw InvalidArgument("preferential attachment factor must be in 1..6");
  if (m >= n) throw InvalidArgument("BA graph needs m < n");
}

Graph ba_graph(const BAParams& p) {
  p.validate();
  Rng rng(split_seed(p.seed, 0));
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(p.n, 0);
  auto connect = [&](std::size_t a, std::size_t b) {
    edges.push_back(make_edge(static_cast<QubitId>(a), static_cast<QubitId>(b)));
    ++degree[a];
    ++degree[b];
  };
  for (std::size_t a = 0; a < p.m; ++a)
    for (std::size_t b = a + 1; b < p.m; ++b) connect(a, b);

  std::vector<bool> taken(p.n, false);
  std::vector<std::size_t> targets;
  for (std::size_t v = p.m; v < p.n; ++v) {
    targets.clear();
    for (std::size_t k = 0; k < p.m; ++k) {
      double total = 0.0;
      std::size_t free = 0;
      for (std::size_t u = 0; u < v; ++u)
        if (!taken[u]) {
          total += static_cast<double>(degree[u]);
          ++free;
        }
      std::size_t pick = v;
      if (total > 0.0) {
        double r = std::uniform_real_distribution<double>(0.0, total)(rng);
        for (std::size_t u = 0; u < v; ++u) {
          if (taken[u] || degree[u] == 0) continue;
          pick = u;
          r -= static_cast<double>(degree[u]);
          if (r < 0.0) break;
        }
      } else {
        std::size_t r = std::uniform_int_distribution<std::size_t>(0, free - 1)(rng);
        for (std::size_t u = 0; u < v; ++u) {
          if (taken[u]) continue;
          if (r-- == 0) {
            pick = u;
            break;
          }
        }
      }
      taken[pick] = true;
      targets.push_back(pick);
    }
    for (auto u : targets) {
      taken[u] = false;
      connect(v, u);
    }
  }

  std::vector<QubitId> nodes(p.n);
  for (std::size_t i = 0; i < p.n; ++i) nodes[i] = static_cast<QubitId>(i);
  return Graph::from_edges(edges, nodes);
}

IsingModel to_ising(const Graph& graph, const BAParams& p) {
  Rng rng(split_seed(p.seed, 1));
  std::normal_distribution<double> normal(0.0, 1.0);
  IsingModel model;
  for (QubitId q : graph.nodes()) model.add_variable(q);
  for (const auto& [a, b] : graph.edges()) model.set_quadratic(a, b, normal(rng));
  if (p.linear == LinearMode::normal)
    for (QubitId q : graph.nodes()) model.set_linear(q, normal(rng));
  return model;
}

double energy_residual(double e_min, double e_global) { return std::abs(e_min - e_global); }

CapacityProbe probe_capacity(const ModelFamily& family, std::size_t n, const HardwareGraph& hw, std::size_t c,
                             const EmbedderParams& params, std::uint64_t seed) {
  CapacityProbe probe;
  probe.n = n;
  const IsingModel model = family(n);
  const CutPlan plan = select_cuts(model, std::min({c, kMaxCuts, model.num_variables()}));
  IsingModel reduced = model;
  for (QubitId q : plan.qubits) reduced.remove_variable(q);
  if (reduced.num_variables() == 0) {
    probe.success = true;
    return probe;
  }
  EmbedderParams p = params;
  p.seed = split_seed(params.seed ^ seed, n);
  EmbedOutcome out = find_embedding(coupling_graph(reduced), hw, p);
  probe.success = out.ok();
  if (out.ok()) probe.metrics = metrics(*out.embedding, hw, out.seconds);
  return probe;
}

CapacityResult capacity_search(const ModelFamily& family, const HardwareGraph& hw, std::size_t c,
                               const EmbedderParams& params, std::uint64_t seed, std::size_t n_min) {
  CapacityResult result;
  const std::size_t upper = hw.num_nodes() + c;
  if (n_min < 1) n_min = 1;
  if (n_min > upper) return result;

  auto probe = [&](std::size_t n) {
    result.probes.push_back(probe_capacity(family, n, hw, c, params, seed));
    return result.probes.back();
  };

  CapacityProbe lo = probe(n_min);
  if (!lo.success) return result;

  std::size_t hi = upper + 1;  // first known-infeasible size
  while (lo.n < upper) {
    std::size_t next = std::min(2 * lo.n, upper);
    CapacityProbe p = probe(next);
    if (!p.success) {
      hi = next;
      break;
    }
    lo = p;
  }
  while (hi - lo.n > 1) {
    std::size_t mid = lo.n + (hi - lo.n) / 2;
    CapacityProbe p = probe(mid);
    if (p.success)
      lo = p;
    else
      hi = mid;
  }
  result.capacity = lo.n;
  result.metrics = lo.metrics;
  return result;
}

}  // namespace chainskip
