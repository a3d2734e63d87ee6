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
#include <utility>
#include <vector>

#include "chainskip/embed.hpp"
#include "chainskip/ising.hpp"

namespace chainskip {

/// Majority-vote outcome for one chain. No value means the vote tied
/// (a balanced chain).
struct ChainResolution {
  std::optional<Spin> value;
  bool broken = false;

  bool balanced() const { return !value.has_value(); }
};

ChainResolution resolve_chain(const std::vector<Spin>& spins);

struct UnembedStats {
  std::size_t broken_chain_count = 0;
  std::size_t balanced_chain_count = 0;
  bool repaired_by_bruteforce = false;
  bool repaired_randomly = false;
};

/// Balanced chains up to this count are completed by exhaustive search
/// (2^10 = 1024 configurations); beyond it they are assigned at random.
inline constexpr std::size_t kDefaultBalancedLimit = 10;

/// Converts one hardware sample into a program-level sample.
///
/// Each chain takes its majority spin. With b balanced chains and
/// b <= b_max, all 2^b completions are scored on `logical` and the lowest
/// energy wins (ties: lexicographically smallest). Otherwise balanced qubits
/// are drawn uniformly from Rng(seed). Occurrences carry over and the energy
/// is recomputed on `logical`.
std::pair<Sample, UnembedStats> unembed_sample(const Sample& hw_sample, const Embedding& e,
                                               const IsingModel& logical,
                                               std::size_t b_max = kDefaultBalancedLimit,
                                               std::uint64_t seed = 0);

/// Occurrence-weighted totals over a whole sample set.
struct UnembedTotals {
  std::uint64_t reads = 0;
  std::uint64_t chains_per_read = 0;
  std::uint64_t broken_chains = 0;
  std::uint64_t balanced_chains = 0;
  std::uint64_t bruteforce_repairs = 0;
  std::uint64_t random_repairs = 0;

  double broken_fraction() const;
  UnembedTotals& operator+=(const UnembedTotals& o);
};

struct UnembeddedSet {
  SampleSet samples;
  UnembedTotals totals;
};

/// unembed_sample over every distinct sample (sample i uses
/// split_seed(seed, i)), optionally followed by SQC, then re-aggregated.
UnembeddedSet unembed_sampleset(const SampleSet& hw, const Embedding& e, const IsingModel& logical,
                                std::size_t b_max = kDefaultBalancedLimit, std::uint64_t seed = 0,
                                bool apply_sqc = false);

/// Single-qubit correction: steepest single-flip descent to a local minimum,
/// ties broken by lowest qubit id.
Assignment sqc(const IsingModel& model, const Assignment& a);

}  // namespace chainskip
