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

#include "chainskip/embed.hpp"
#include "chainskip/ising.hpp"

namespace chainskip {

/// Magnitude S of the ferromagnetic intra-chain coupling.
struct ChainStrengthPolicy {
  enum class Mode { fixed, scaled };

  Mode mode = Mode::scaled;
  /// Fixed magnitude, or the factor alpha for S = alpha * max|coefficient|.
  double value = 2.0;

  static ChainStrengthPolicy fixed(double s) { return {Mode::fixed, s}; }
  static ChainStrengthPolicy scaled(double alpha) { return {Mode::scaled, alpha}; }

  void validate() const;
  /// S for a logical model. A scaled policy on a coefficient-free model
  /// falls back to S = alpha.
  double strength(const IsingModel& logical) const;
};

/// Maps a logical model onto hardware through an embedding (the QMI).
///
/// h_i is split equally over the qubits of chain(i); J_ij equally over every
/// hardware coupler joining chain(i) and chain(j); every coupler inside a
/// chain gets -S and the offset grows by S per such coupler, so a
/// chain-uniform assignment has the same energy on both levels. Throws
/// InvalidEmbedding when `e` is not a valid embedding of the model's
/// coupling graph.
IsingModel embed_model(const IsingModel& logical, const Embedding& e, const HardwareGraph& hw,
                       const ChainStrengthPolicy& cs = {});

/// Chain-uniform hardware assignment for a logical assignment.
Assignment embed_assignment(const Assignment& logical, const Embedding& e);

}  // namespace chainskip
