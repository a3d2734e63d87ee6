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

#include "chainskip/skipperg.hpp"

#include <cmath>
#include <limits>

#include "chainskip/error.hpp"
#include "chainskip/parallel.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

double node_feature(const SampleSet& z) {
  if (z.empty()) throw InvalidArgument("node feature of an empty sample set");
  const double product = z.lowest().energy * z.mean_energy();
  if (product == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(1.0 / product);
}

namespace {

TreeNode evaluate(std::size_t level, std::uint64_t index, Assignment fixing, IsingModel sub,
                  const IsingModel& original, const EmbeddingStage& stage, const Sampler& sampler,
                  const ExecutionOptions& opt, std::uint64_t seed) {
  TreeNode node;
  node.level = level;
  node.index = index;
  NodeExecution run;
  try {
    run = execute_node(sub, stage, sampler, opt, split_seed(seed, index));
  } catch (const std::exception& ex) {
    throw Error("tree node " + std::to_string(index) + ": " + ex.what());
  }
  std::vector<Sample> decoded;
  decoded.reserve(run.samples.samples.size());
  for (const Sample& s : run.samples.samples) decoded.push_back(decode(s, fixing, original));
  SampleSet z = aggregate(original, std::move(decoded));

  node.best = z.lowest();
  node.mean_energy = z.mean_energy();
  node.feature = node_feature(z);
  node.degenerate_feature = std::isinf(node.feature);
  node.reads = z.num_reads;
  node.unembed = run.unembed;
  node.fixing = std::move(fixing);
  node.model = std::move(sub);
  return node;
}

}  // namespace

SkipperGResult run_skipper_g(const IsingModel& model, std::size_t c, const Sampler& sampler,
                             const ExecutionOptions& opt, std::uint64_t seed) {
  if (c > kMaxCuts) throw InvalidArgument("cut count " + std::to_string(c) + " exceeds " + std::to_string(kMaxCuts));
  const std::uint64_t embed_seeds = split_seed(seed, 0);
  const std::uint64_t run_seeds = split_seed(seed, 1);

  SkipperGResult result;
  const EmbeddingStage root_stage = prepare_embedding(model, opt, split_seed(embed_seeds, 0));
  if (root_stage.embedding) ++result.n_embeddings;
  if (root_stage.metrics) result.embedding_metrics.push_back(*root_stage.metrics);

  result.nodes.push_back(evaluate(0, 1, {}, model, model, root_stage, sampler, opt, run_seeds));
  result.n_qmi = 1;
  result.path.push_back(1);
  result.best = result.nodes.front().best;
  std::size_t current = 0;

  for (std::size_t level = 1; level <= c; ++level) {
    const TreeNode& cur = result.nodes[current];
    if (cur.model.num_variables() == 0) {
      result.warnings.push_back("level " + std::to_string(level) + ": no program qubits left to cut");
      break;
    }
    const QubitId cut = degree_order(cur.model).front();
    IsingModel left_model = fix_qubit(cur.model, cut, Spin{-1});
    IsingModel right_model = fix_qubit(cur.model, cut, Spin{1});

    EmbeddingStage stage;
    try {
      stage = prepare_embedding(left_model, opt, split_seed(embed_seeds, level));
    } catch (const EmbeddingFailure& ex) {
      result.warnings.push_back("level " + std::to_string(level) + ": " + ex.what());
      break;
    }
    if (stage.embedding) ++result.n_embeddings;
    if (stage.metrics) result.embedding_metrics.push_back(*stage.metrics);

    Assignment left_fix = cur.fixing, right_fix = cur.fixing;
    left_fix[cut] = Spin{-1};
    right_fix[cut] = Spin{1};
    const std::uint64_t x = cur.index;
    std::vector<TreeNode> children(2);
    parallel_for(2, [&](std::size_t k) {
      children[k] = k == 0 ? evaluate(level, 2 * x, left_fix, left_model, model, stage, sampler, opt, run_seeds)
                           : evaluate(level, 2 * x + 1, right_fix, right_model, model, stage, sampler, opt,
                                      run_seeds);
    });

    result.n_qmi += 2;
    result.cut_qubits.push_back(cut);
    result.levels_completed = level;
    for (const auto& child : children) {
      if (child.degenerate_feature)
        result.warnings.push_back("node " + std::to_string(child.index) + ": degenerate feature (E_min * EV == 0)");
      if (better_sample(child.best, result.best)) result.best = child.best;
    }
    const std::size_t pick = children[1].feature < children[0].feature ? 1 : 0;
    result.nodes.push_back(std::move(children[0]));
    result.nodes.push_back(std::move(children[1]));
    current = result.nodes.size() - 2 + pick;
    result.path.push_back(result.nodes[current].index);
  }
  return result;
}

}  // namespace chainskip
