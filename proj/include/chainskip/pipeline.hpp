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
#include <optional>

#include "chainskip/embed.hpp"
#include "chainskip/qmi.hpp"
#include "chainskip/sampler.hpp"
#include "chainskip/unembed.hpp"

namespace chainskip {

/// How a logical (sub-)problem is executed.
///
/// With a hardware graph every node goes through embed -> QMI -> sample ->
/// unembed. Without one the sampler runs on the logical model directly,
/// which is how the exact-recovery oracle tests drive the search trees.
struct ExecutionOptions {
  const HardwareGraph* hardware = nullptr;
  EmbedderParams embedder;
  ChainStrengthPolicy chain_strength;
  std::size_t balanced_limit = kDefaultBalancedLimit;
  bool sqc = false;
};

struct EmbeddingStage {
  std::optional<Embedding> embedding;  // empty when running logically or nothing to embed
  std::optional<EmbeddingMetrics> metrics;
  EmbedOutcome outcome;
};

/// Embeds the coupling graph of `structure` when a hardware graph is set and
/// the model has variables. Throws EmbeddingFailure when the embedder fails.
EmbeddingStage prepare_embedding(const IsingModel& structure, const ExecutionOptions& opt,
                                 std::uint64_t seed);

struct NodeExecution {
  SampleSet samples;  // over the node's logical variables
  UnembedTotals unembed;
};

/// Runs one QMI for a logical model.
NodeExecution execute_node(const IsingModel& model, const EmbeddingStage& stage, const Sampler& sampler,
                           const ExecutionOptions& opt, std::uint64_t seed);

}  // namespace chainskip
