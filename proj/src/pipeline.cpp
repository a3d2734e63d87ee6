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

#include "chainskip/pipeline.hpp"

#include <string>

#include "chainskip/error.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

EmbeddingStage prepare_embedding(const IsingModel& structure, const ExecutionOptions& opt,
                                 std::uint64_t seed) {
  EmbeddingStage stage;
  if (opt.hardware == nullptr || structure.num_variables() == 0) return stage;
  EmbedderParams p = opt.embedder;
  p.seed = split_seed(opt.embedder.seed, seed);
  stage.outcome = find_embedding(coupling_graph(structure), *opt.hardware, p);
  if (!stage.outcome.ok())
    throw EmbeddingFailure("embedding failed after " + std::to_string(stage.outcome.attempts) +
                           " attempts (best partial " + std::to_string(stage.outcome.best_partial) + " of " +
                           std::to_string(structure.num_variables()) + " program qubits" +
                           (stage.outcome.timed_out ? ", timed out)" : ")"));
  stage.embedding = stage.outcome.embedding;
  stage.metrics = metrics(*stage.embedding, *opt.hardware, stage.outcome.seconds);
  return stage;
}

NodeExecution execute_node(const IsingModel& model, const EmbeddingStage& stage, const Sampler& sampler,
                           const ExecutionOptions& opt, std::uint64_t seed) {
  NodeExecution out;
  if (!stage.embedding || model.num_variables() == 0) {
    out.samples = sampler.sample(model, split_seed(seed, 0));
    out.unembed.reads = out.samples.num_reads;
    out.unembed.chains_per_read = model.num_variables();
    return out;
  }
  const IsingModel physical = embed_model(model, *stage.embedding, *opt.hardware, opt.chain_strength);
  const SampleSet hw = sampler.sample(physical, split_seed(seed, 0));
  UnembeddedSet u =
      unembed_sampleset(hw, *stage.embedding, model, opt.balanced_limit, split_seed(seed, 1), opt.sqc);
  out.samples = std::move(u.samples);
  out.unembed = u.totals;
  return out;
}

}  // namespace chainskip
