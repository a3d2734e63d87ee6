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

#include "chainskip/hwgraph.hpp"

#include <algorithm>
#include <limits>

#include "chainskip/error.hpp"

namespace chainskip {

std::string to_string(Topology t) {
  switch (t) {
    case Topology::chimera: return "chimera";
    case Topology::grid: return "grid";
    case Topology::complete: return "complete";
    case Topology::custom: return "custom";
  }
  return "custom";
}

Graph Graph::from_edges(const std::vector<Edge>& edges, const std::vector<QubitId>& extra_nodes,
                        Topology topology) {
  Graph g;
  g.topology_ = topology;
  g.nodes_ = extra_nodes;
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-loop on qubit " + std::to_string(a));
    canon.push_back(make_edge(a, b));
    g.nodes_.push_back(a);
    g.nodes_.push_back(b);
  }
  std::sort(g.nodes_.begin(), g.nodes_.end());
  g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  g.adjacency_.assign(g.nodes_.size(), {});
  for (const auto& [a, b] : canon) {
    auto i = g.index_of(a), j = g.index_of(b);
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.num_edges_ = canon.size();
  return g;
}

std::size_t Graph::index_of(QubitId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return npos;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<QubitId> Graph::neighbors(QubitId id) const {
  auto k = index_of(id);
  if (k == npos) throw UnknownQubitError("qubit " + std::to_string(id) + " not in graph");
  std::vector<QubitId> out;
  out.reserve(adjacency_[k].size());
  for (auto j : adjacency_[k]) out.push_back(nodes_[j]);
  return out;
}

bool Graph::has_edge(QubitId a, QubitId b) const {
  auto i = index_of(a), j = index_of(b);
  if (i == npos || j == npos) return false;
  const auto& adj = adjacency_[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (auto j : adjacency_[i])
      if (i < j) out.emplace_back(nodes_[i], nodes_[j]);
  return out;
}

HardwareGraph chimera(std::size_t m, std::size_t n, std::size_t t) {
  if (m < 1 || n < 1 || t < 1) throw InvalidArgument("chimera dimensions must be >= 1");
  constexpr std::size_t limit = std::numeric_limits<QubitId>::max() / 4;
  if (m > limit / n || m * n > limit / (2 * t))
    throw InvalidArgument("chimera graph too large for 32-bit qubit ids");

  auto id = [&](std::size_t r, std::size_t c, std::size_t shore, std::size_t k) {
    return static_cast<QubitId>(((r * n + c) * 2 + shore) * t + k);
  };
  std::vector<Edge> edges;
  edges.reserve(m * n * t * t + t * (n * (m - 1) + m * (n - 1)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = 0; b < t; ++b) edges.emplace_back(id(r, c, 0, a), id(r, c, 1, b));
      for (std::size_t k = 0; k < t; ++k) {
        if (r + 1 < m) edges.emplace_back(id(r, c, 0, k), id(r + 1, c, 0, k));
        if (c + 1 < n) edges.emplace_back(id(r, c, 1, k), id(r, c + 1, 1, k));
      }
    }
  }
  std::vector<QubitId> all(2 * m * n * t);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<QubitId>(i);
  Graph g = Graph::from_edges(edges, all, Topology::chimera);
  g.chimera_m = m;
  g.chimera_n = n;
  g.chimera_t = t;
  return g;
}

HardwareGraph grid(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("grid dimensions must be >= 1");
  if (rows > std::numeric_limits<QubitId>::max() / cols) throw InvalidArgument("grid too large");
  std::vector<Edge> edges;
  std::vector<QubitId> all(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto q = static_cast<QubitId>(r * cols + c);
      all[q] = q;
      if (c + 1 < cols) edges.emplace_back(q, q + 1);
      if (r + 1 < rows) edges.emplace_back(q, static_cast<QubitId>(q + cols));
    }
  }
  Graph g = Graph::from_edges(edges, all, Topology::grid);
  g.grid_rows = rows;
  g.grid_cols = cols;
  return g;
}

HardwareGraph complete(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  if (n > 65536) throw InvalidArgument("complete graph too large");
  std::vector<Edge> edges;
  std::vector<QubitId> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = static_cast<QubitId>(i);
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<QubitId>(i), static_cast<QubitId>(j));
  }
  return Graph::from_edges(edges, all, Topology::complete);
}

HardwareGraph from_edge_list(const std::vector<Edge>& edges) {
  Graph g = Graph::from_edges(edges);
  if (g.num_nodes() == 0) throw InvalidArgument("hardware graph has no qubits");
  return g;
}

Graph coupling_graph(const IsingModel& model) {
  std::vector<Edge> edges;
  edges.reserve(model.num_interactions());
  for (const auto& [e, v] : model.quadratic()) edges.push_back(e);
  return Graph::from_edges(edges, {model.variables().begin(), model.variables().end()});
}

}  // namespace chainskip
