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
#include <vector>

#include "chainskip/pipeline.hpp"

namespace chainskip {

/// Most chains a search tree may cut (2^11 = 2048 sub-problems).
inline constexpr std::size_t kMaxCuts = 11;

struct CutPlan {
  std::vector<QubitId> qubits;  // highest degree first
  bool symmetry_halved = false;
};

/// The c highest-degree program qubits (ties by id). Halving applies when
/// every linear coefficient is exactly zero. Throws InvalidArgument unless
/// c <= min(kMaxCuts, n).
CutPlan select_cuts(const IsingModel& model, std::size_t c);

struct SubProblem {
  std::uint64_t index = 0;
  Assignment fixing;
  IsingModel model;
};

/// Enumerates fixings in binary order: bit k of the index fixes plan qubit k
/// (0 -> -1, 1 -> +1). A halved plan keeps only fixings whose first cut
/// qubit is +1; each stands for itself and its spin-flipped twin.
std::vector<SubProblem> build_subproblems(const IsingModel& model, const CutPlan& plan);

/// Reinserts the fixed spins and re-scores on the original model. Throws
/// InvalidArgument when the supports overlap.
Sample decode(const Sample& sub_sample, const Assignment& fixing, const IsingModel& original);

/// Lower energy wins, ties go to the lexicographically smaller assignment.
bool better_sample(const Sample& a, const Sample& b);

struct SubProblemRecord {
  std::uint64_t index = 0;
  Assignment fixing;
  std::size_t distinct_samples = 0;
  std::uint64_t reads = 0;
  double best_energy = 0.0;  // decoded, original-model energy
  double mean_energy = 0.0;
  UnembedTotals unembed;
};

struct SkipperResult {
  CutPlan plan;
  Sample best;
  std::vector<SubProblemRecord> records;  // by sub-problem index
  std::optional<Embedding> embedding;     // shared by every sub-problem
  std::optional<EmbeddingMetrics> metrics;
  std::size_t n_qmi = 0;
};

/// Breadth-first chain skipping: cut c dominant qubits at once, solve every
/// sub-problem on one shared embedding, decode and keep the lowest energy.
/// c = 0 is the baseline pipeline. Throws EmbeddingFailure; sampler errors
/// are rethrown with the sub-problem index.
SkipperResult run_skipper(const IsingModel& model, std::size_t c, const Sampler& sampler,
                          const ExecutionOptions& opt, std::uint64_t seed);

}  // namespace chainskip
