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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainskip/hwgraph.hpp"

namespace chainskip {

/// Program qubit -> chain of physical qubits (sorted, non-empty).
struct Embedding {
  std::map<QubitId, std::vector<QubitId>> chains;

  const std::vector<QubitId>& chain(QubitId program) const;
  bool operator==(const Embedding&) const = default;
};

struct EmbedderParams {
  double timeout_seconds = 10.0;
  int max_no_improvement = 5;
  int tries = 5;
  std::uint64_t seed = 0;

  /// 1000 s timeout, 20 failed improvement rounds, 20 tries.
  static EmbedderParams reference_scale(std::uint64_t seed = 0);
  /// Throws InvalidArgument unless all fields are positive.
  void validate() const;
};

struct EmbeddingMetrics {
  double avg_chain_len = 0.0;
  std::size_t max_chain_len = 0;
  double chain_len_variance = 0.0;  // population variance
  std::size_t used_qubits = 0;
  std::size_t unused_qubits = 0;
  double embed_time = 0.0;  // seconds
};

/// Result of find_embedding. Failure is reported here rather than thrown.
struct EmbedOutcome {
  std::optional<Embedding> embedding;
  int attempts = 0;
  /// Program qubits holding an overlap-free chain in the best attempt.
  std::size_t best_partial = 0;
  double seconds = 0.0;
  bool timed_out = false;

  bool ok() const { return embedding.has_value(); }
};

/// Heuristic minor embedding of `source` into `hw`.
///
/// Program qubits are placed in priority-first order, each as a tree of
/// shortest paths from a root qubit to the chains of its placed neighbours.
/// A qubit already used by w chains costs base^w, with the base chosen from
/// the current worst overlap so that distances stay exact in 64 bits. Path
/// segments are handed to the neighbour they lead to and reclaimed before
/// the next re-route. Improvement passes rip up one program qubit at a time:
/// pushdown passes forbid a chain from reaching a higher overlap than it
/// has, free passes take over when those stall. A try restarts from scratch
/// after max_no_improvement passes without a better overlap histogram. Once
/// the chains are disjoint, passes restricted to free qubits shorten them
/// until max_no_improvement passes bring no better chain-length histogram.
/// Deterministic for fixed inputs and seed unless the timeout fires.
EmbedOutcome find_embedding(const Graph& source, const HardwareGraph& hw, const EmbedderParams& p);

enum class ViolationKind {
  missing_chain,
  empty_chain,
  unknown_program_qubit,
  unknown_physical_qubit,
  overlap,
  disconnected_chain,
  missing_coupler,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  QubitId program = 0;   // offending program qubit (first endpoint for edges)
  QubitId other = 0;     // second program qubit for overlap / missing_coupler
  QubitId physical = 0;  // offending physical qubit where applicable
  std::string message;
};

/// Checks disjointness, chain connectivity and one coupler per logical edge.
/// An empty result means the embedding is valid.
std::vector<Violation> validate(const Embedding& e, const Graph& source, const HardwareGraph& hw);

EmbeddingMetrics metrics(const Embedding& e, const HardwareGraph& hw, double embed_time = 0.0);

}  // namespace chainskip
