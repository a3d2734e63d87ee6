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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainskip/embed.hpp"
#include "chainskip/hwgraph.hpp"
#include "chainskip/ising.hpp"

namespace chainskip {

enum class LinearMode { zero, normal };

std::string to_string(LinearMode m);
LinearMode linear_mode_from_string(const std::string& s);

/// Barabasi-Albert benchmark parameters. Weights are standard normal.
struct BAParams {
  std::size_t n = 0;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  LinearMode linear = LinearMode::zero;

  /// Throws InvalidArgument unless 1 <= m < n and m <= 6.
  void validate() const;
};

/// Preferential attachment: an m-clique seed on nodes 0..m-1, then node v
/// joins m distinct earlier nodes drawn with probability proportional to
/// degree. Edge count is m(m-1)/2 + (n-m)m.
Graph ba_graph(const BAParams& p);

/// J_ij ~ N(0,1) per edge in ascending edge order, then h_i ~ N(0,1) per
/// node in normal linear mode. Offset 0.
IsingModel to_ising(const Graph& graph, const BAParams& p);

inline IsingModel ba_model(const BAParams& p) { return to_ising(ba_graph(p), p); }

/// |e_min - e_global|.
double energy_residual(double e_min, double e_global);

using ModelFamily = std::function<IsingModel(std::size_t n)>;

struct CapacityProbe {
  std::size_t n = 0;
  bool success = false;
  std::optional<EmbeddingMetrics> metrics;
};

struct CapacityResult {
  std::size_t capacity = 0;
  std::optional<EmbeddingMetrics> metrics;  // embedding at `capacity`
  std::vector<CapacityProbe> probes;        // in the order they ran
};

/// Whether family(n), with its c dominant qubits cut, embeds into hw.
CapacityProbe probe_capacity(const ModelFamily& family, std::size_t n, const HardwareGraph& hw, std::size_t c,
                             const EmbedderParams& params, std::uint64_t seed);

/// Largest n whose reduced coupling graph embeds, by doubling from n_min and
/// then bisection. Both the success at the result and the failure at
/// result + 1 are witnessed in `probes` (sizes above hw.num_nodes() + c are
/// infeasible and not probed). Returns 0 if n_min already fails.
CapacityResult capacity_search(const ModelFamily& family, const HardwareGraph& hw, std::size_t c,
                               const EmbedderParams& params, std::uint64_t seed, std::size_t n_min = 1);

}  // namespace chainskip
