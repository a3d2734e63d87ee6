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

#include "chainskip/skipper.hpp"

#include <algorithm>
#include <string>

#include "chainskip/error.hpp"
#include "chainskip/parallel.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

CutPlan select_cuts(const IsingModel& model, std::size_t c) {
  if (c > kMaxCuts || c > model.num_variables())
    throw InvalidArgument("cut count " + std::to_string(c) + " outside [0, min(" + std::to_string(kMaxCuts) +
                          ", " + std::to_string(model.num_variables()) + ")]");
  CutPlan plan;
  auto order = degree_order(model);
  plan.qubits.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(c));
  plan.symmetry_halved = c > 0 && has_zero_linear(model);
  return plan;
}

std::vector<SubProblem> build_subproblems(const IsingModel& model, const CutPlan& plan) {
  const std::size_t c = plan.qubits.size();
  if (c > kMaxCuts) throw InvalidArgument("too many cut qubits");
  std::vector<SubProblem> out;
  out.reserve(std::size_t{1} << c);
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << c); ++index) {
    if (plan.symmetry_halved && (index & 1U) == 0) continue;
    SubProblem sp;
    sp.index = index;
    for (std::size_t k = 0; k < c; ++k)
      sp.fixing[plan.qubits[k]] = ((index >> k) & 1U) ? Spin{1} : Spin{-1};
    if (sp.fixing.size() != c) throw InvalidArgument("cut qubits must be distinct");
    sp.model = fix_qubits(model, sp.fixing);
    out.push_back(std::move(sp));
  }
  return out;
}

Sample decode(const Sample& sub_sample, const Assignment& fixing, const IsingModel& original) {
  Assignment a = sub_sample.assignment;
  for (const auto& [q, s] : fixing)
    if (!a.emplace(q, s).second)
      throw InvalidArgument("qubit " + std::to_string(q) + " is both sampled and fixed");
  Sample out{std::move(a), 0.0, sub_sample.occurrences};
  out.energy = energy(original, out.assignment);
  return out;
}

bool better_sample(const Sample& a, const Sample& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return lexicographically_less(a.assignment, b.assignment);
}

SkipperResult run_skipper(const IsingModel& model, std::size_t c, const Sampler& sampler,
                          const ExecutionOptions& opt, std::uint64_t seed) {
  SkipperResult result;
  result.plan = select_cuts(model, c);
  const auto subs = build_subproblems(model, result.plan);
  result.n_qmi = subs.size();

  // Every sub-problem has the same coupling graph, so one embedding serves all.
  const EmbeddingStage stage = prepare_embedding(subs.front().model, opt, split_seed(seed, 0));
  result.embedding = stage.embedding;
  result.metrics = stage.metrics;

  std::vector<SubProblemRecord> records(subs.size());
  std::vector<Sample> bests(subs.size());
  parallel_for(subs.size(), [&](std::size_t i) {
    const SubProblem& sp = subs[i];
    NodeExecution run;
    try {
      run = execute_node(sp.model, stage, sampler, opt, split_seed(split_seed(seed, 1), sp.index));
    } catch (const std::exception& ex) {
      throw Error("sub-problem " + std::to_string(sp.index) + ": " + ex.what());
    }

    SubProblemRecord& rec = records[i];
    rec.index = sp.index;
    rec.fixing = sp.fixing;
    rec.distinct_samples = run.samples.samples.size();
    rec.reads = run.samples.num_reads;
    rec.mean_energy = run.samples.mean_energy();
    rec.unembed = run.unembed;

    std::optional<Sample> best;
    for (const Sample& s : run.samples.samples) {
      Sample d = decode(s, sp.fixing, model);
      if (result.plan.symmetry_halved) {
        Sample twin{flipped(d.assignment), 0.0, d.occurrences};
        twin.energy = energy(model, twin.assignment);
        if (better_sample(twin, d)) d = std::move(twin);
      }
      if (!best || better_sample(d, *best)) best = std::move(d);
    }
    rec.best_energy = best->energy;
    bests[i] = std::move(*best);
  });

  result.best = bests.front();
  for (const auto& s : bests)
    if (better_sample(s, result.best)) result.best = s;
  result.records = std::move(records);
  return result;
}

}  // namespace chainskip
