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
#include <string>
#include <vector>

#include "chainskip/ising.hpp"

namespace chainskip {

enum class Topology { chimera, grid, complete, custom };

std::string to_string(Topology t);

/// Undirected simple graph over qubit ids with sorted adjacency lists.
///
/// Used both for hardware connectivity (the embedding target) and for the
/// logical coupling graph of a model (the embedding source).
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list, symmetrizing and deduplicating. `extra_nodes`
  /// adds isolated vertices. Throws InvalidArgument on a self-loop.
  static Graph from_edges(const std::vector<Edge>& edges,
                          const std::vector<QubitId>& extra_nodes = {},
                          Topology topology = Topology::custom);

  const std::vector<QubitId>& nodes() const { return nodes_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  Topology topology() const { return topology_; }

  /// Dense index of id, or npos.
  std::size_t index_of(QubitId id) const;
  bool contains(QubitId id) const { return index_of(id) != npos; }

  /// Neighbours by dense index, ascending.
  const std::vector<std::size_t>& neighbors_of_index(std::size_t k) const { return adjacency_[k]; }
  std::vector<QubitId> neighbors(QubitId id) const;
  bool has_edge(QubitId a, QubitId b) const;
  std::vector<Edge> edges() const;

  // Chimera parameters, zero for other topologies.
  std::size_t chimera_m = 0, chimera_n = 0, chimera_t = 0;
  // Grid parameters, zero for other topologies.
  std::size_t grid_rows = 0, grid_cols = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<QubitId> nodes_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t num_edges_ = 0;
  Topology topology_ = Topology::custom;
};

using HardwareGraph = Graph;

/// Chimera C(m, n, t): an m x n lattice of K_{t,t} unit cells.
///
/// Qubit id = ((row * n + col) * 2 + shore) * t + k. Shore-0 qubits couple
/// vertically to the same (shore, k) qubit of the cell below; shore-1 qubits
/// couple horizontally to the cell on the right.
HardwareGraph chimera(std::size_t m, std::size_t n, std::size_t t);

/// rows x cols grid, id = r * cols + c, 4-neighbour couplers.
HardwareGraph grid(std::size_t rows, std::size_t cols);

HardwareGraph complete(std::size_t n);

/// Validating wrapper over Graph::from_edges; rejects an empty result.
HardwareGraph from_edge_list(const std::vector<Edge>& edges);

/// Coupling graph of a model: every variable is a node, every quadratic key an edge.
Graph coupling_graph(const IsingModel& model);

}  // namespace chainskip
