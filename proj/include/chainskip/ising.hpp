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
#include <set>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace chainskip {

/// Label of a program or physical qubit. Labels need not be dense.
using QubitId = std::uint32_t;

/// Spin value, always -1 or +1.
using Spin = std::int8_t;

/// Unordered qubit pair stored as (min, max).
using Edge = std::pair<QubitId, QubitId>;

inline Edge make_edge(QubitId a, QubitId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

using Assignment = std::map<QubitId, Spin>;

/// Sparse Ising Hamiltonian
///
///   E(z) = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j,  z_i in {-1,+1}.
///
/// Absent linear/quadratic keys are zero. A variable may exist without any
/// coefficient (e.g. an isolated qubit left behind by fixing). Quadratic keys
/// are canonical (i < j); self-couplings and non-finite coefficients are
/// rejected.
class IsingModel {
 public:
  IsingModel() = default;

  void add_variable(QubitId q);
  void set_linear(QubitId q, double value);
  void add_linear(QubitId q, double value);
  void set_quadratic(QubitId a, QubitId b, double value);
  void add_quadratic(QubitId a, QubitId b, double value);
  void set_offset(double value);
  void add_offset(double value);

  const std::set<QubitId>& variables() const { return variables_; }
  const std::map<QubitId, double>& linear() const { return linear_; }
  const std::map<Edge, double>& quadratic() const { return quadratic_; }
  double offset() const { return offset_; }

  double linear(QubitId q) const;
  double quadratic(QubitId a, QubitId b) const;
  bool contains(QubitId q) const { return variables_.count(q) != 0; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_interactions() const { return quadratic_.size(); }

  /// Neighbours of q in the coupling graph, ascending.
  const std::set<QubitId>& neighbors(QubitId q) const;
  std::size_t degree(QubitId q) const { return neighbors(q).size(); }

  /// Largest |h_i| or |J_ij|; 0 for a coefficient-free model.
  double max_abs_coefficient() const;

  /// Removes q together with every coefficient touching it. No folding.
  void remove_variable(QubitId q);

  bool operator==(const IsingModel& other) const = default;

 private:
  std::set<QubitId> variables_;
  std::map<QubitId, double> linear_;
  std::map<Edge, double> quadratic_;
  std::map<QubitId, std::set<QubitId>> adjacency_;
  double offset_ = 0.0;
};

/// Energy of a full assignment. Terms are summed in key order (linear, then
/// quadratic) and the offset is added last, so the result is reproducible
/// bit-for-bit. Throws MissingVariableError if `a` lacks a model variable;
/// extra entries in `a` are ignored.
double energy(const IsingModel& model, const Assignment& a);

/// Substitutes z_q = s: offset += h_q s, h_j += J_qj s for every neighbour j,
/// and q disappears. Throws UnknownQubitError.
IsingModel fix_qubit(const IsingModel& model, QubitId q, Spin s);

/// fix_qubit applied in ascending qubit order.
IsingModel fix_qubits(const IsingModel& model, const Assignment& fixing);

/// True iff every stored linear coefficient is exactly 0.0.
bool has_zero_linear(const IsingModel& model);

/// Variables by descending coupling degree, ties by ascending id.
std::vector<QubitId> degree_order(const IsingModel& model);

/// Flips every spin.
Assignment flipped(const Assignment& a);

/// Lexicographic comparison over ascending qubit ids with -1 < +1.
bool lexicographically_less(const Assignment& a, const Assignment& b);

inline constexpr std::size_t kDefaultOracleLimit = 24;

struct GroundState {
  Assignment assignment;
  double energy = 0.0;
};

/// Exact global minimum by exhaustive enumeration. Among exact minima the
/// lexicographically smallest assignment is returned and its energy is the
/// value of energy(model, assignment). Throws TooLargeError when the model
/// has more than `limit` variables.
GroundState brute_force_ground(const IsingModel& model,
                               std::size_t limit = kDefaultOracleLimit);

/// Dense, index-addressed view of an IsingModel for inner loops.
///
/// Index k corresponds to ids[k] (ascending). energy() reproduces
/// chainskip::energy exactly: same terms, same order.
class CompactIsing {
 public:
  explicit CompactIsing(const IsingModel& model);

  std::size_t size() const { return ids_.size(); }
  const std::vector<QubitId>& ids() const { return ids_; }
  double offset() const { return offset_; }
  double linear(std::size_t k) const { return h_[k]; }
  const std::vector<std::pair<std::uint32_t, double>>& adjacent(std::size_t k) const {
    return adjacency_[k];
  }

  double energy(std::span<const Spin> z) const;
  /// Local field h_k + sum_j J_kj z_j.
  double local_field(std::span<const Spin> z, std::size_t k) const;
  /// Energy change when z_k flips.
  double flip_delta(std::span<const Spin> z, std::size_t k) const {
    return -2.0 * z[k] * local_field(z, k);
  }

  Assignment to_assignment(std::span<const Spin> z) const;
  std::vector<Spin> from_assignment(const Assignment& a) const;

 private:
  std::vector<QubitId> ids_;
  std::vector<double> h_;
  std::vector<std::pair<std::uint32_t, double>> linear_terms_;  // stored keys only
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> quadratic_terms_;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency_;
  double offset_ = 0.0;
};

/// One measured spin configuration.
struct Sample {
  Assignment assignment;
  double energy = 0.0;
  std::uint64_t occurrences = 1;
};

/// Distinct samples ordered by (energy, lexicographic assignment); the
/// occurrence counts sum to num_reads.
struct SampleSet {
  std::vector<Sample> samples;
  std::uint64_t num_reads = 0;

  bool empty() const { return samples.empty(); }
  const Sample& lowest() const;
  /// Occurrence-weighted mean energy.
  double mean_energy() const;
};

/// Merges identical assignments, recomputes energies on `model` and sorts.
SampleSet aggregate(const IsingModel& model, std::vector<Sample> samples);

}  // namespace chainskip
