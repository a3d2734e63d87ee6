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
#include <string>
#include <vector>

#include "chainskip/pipeline.hpp"
#include "chainskip/skipper.hpp"

namespace chainskip {

/// Node quality |1 / (E_min * EV)| with EV the occurrence-weighted mean
/// energy; lower is better. Returns +infinity when E_min * EV == 0.
double node_feature(const SampleSet& z);

struct TreeNode {
  std::size_t level = 0;
  std::uint64_t index = 1;  // root 1, children of x are 2x and 2x+1
  Assignment fixing;
  IsingModel model;
  Sample best;  // decoded, original-model energy
  double mean_energy = 0.0;
  double feature = 0.0;
  bool degenerate_feature = false;
  std::uint64_t reads = 0;
  UnembedTotals unembed;
};

struct SkipperGResult {
  std::vector<TreeNode> nodes;        // evaluation order: root, then children level by level
  std::vector<std::uint64_t> path;    // indices of the nodes chosen as current
  std::vector<QubitId> cut_qubits;    // one per completed level
  Sample best;                        // lowest energy over every evaluated node
  std::size_t n_qmi = 0;
  std::size_t n_embeddings = 0;
  std::size_t levels_completed = 0;
  std::vector<EmbeddingMetrics> embedding_metrics;  // root first, then per level
  std::vector<std::string> warnings;
};

/// Greedy depth-first chain skipping. The root runs the whole model; each
/// of c levels cuts the highest-degree qubit of the current node's model,
/// runs both children (left fixes -1) on one fresh embedding and descends
/// into the child with the lower node_feature (left on ties). The answer is
/// the lowest decoded energy seen at any node, so it is never worse than
/// the root. An embedding failure below the root ends the descent with a
/// warning; at the root it throws EmbeddingFailure.
SkipperGResult run_skipper_g(const IsingModel& model, std::size_t c, const Sampler& sampler,
                             const ExecutionOptions& opt, std::uint64_t seed);

}  // namespace chainskip
