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


// Independent reference implementations used by the tests. Nothing here
// calls into the library except for its plain data types.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chainskip/ising.hpp"

namespace oracle {

using chainskip::Assignment;
using chainskip::IsingModel;
using chainskip::QubitId;
using chainskip::Spin;

// Direct evaluation of offset + sum h z + sum J z z.
inline double direct_energy(const IsingModel& m, const Assignment& a) {
  double e = m.offset();
  for (const auto& [q, h] : m.linear()) e += h * a.at(q);
  for (const auto& [edge, j] : m.quadratic()) e += j * a.at(edge.first) * a.at(edge.second);
  return e;
}

// Spin of bit k in mask, bit set means +1.
inline Assignment from_mask(const std::vector<QubitId>& ids, std::uint64_t mask) {
  Assignment a;
  for (std::size_t k = 0; k < ids.size(); ++k) a[ids[k]] = ((mask >> k) & 1U) ? Spin{1} : Spin{-1};
  return a;
}

// Plain 2^n enumeration.
inline double ground_energy(const IsingModel& m) {
  std::vector<QubitId> ids(m.variables().begin(), m.variables().end());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask)
    best = std::min(best, direct_energy(m, from_mask(ids, mask)));
  return best;
}

// Every assignment reaching the minimum within tol.
inline std::vector<Assignment> ground_states(const IsingModel& m, double tol = 1e-9) {
  std::vector<QubitId> ids(m.variables().begin(), m.variables().end());
  const double e0 = ground_energy(m);
  std::vector<Assignment> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
    Assignment a = from_mask(ids, mask);
    if (direct_energy(m, a) <= e0 + tol) out.push_back(a);
  }
  return out;
}

// Random sparse model on ids 0..n-1 with edge probability p.
inline IsingModel random_model(std::size_t n, double p, std::uint64_t seed, bool with_h = true) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> w(0.0, 1.0);
  std::bernoulli_distribution keep(p);
  IsingModel m;
  for (QubitId i = 0; i < n; ++i) {
    m.add_variable(i);
    if (with_h) m.set_linear(i, w(g));
  }
  for (QubitId i = 0; i < n; ++i)
    for (QubitId j = i + 1; j < n; ++j)
      if (keep(g)) m.set_quadratic(i, j, w(g));
  return m;
}

// Connected components of a qubit subset under an adjacency predicate.
template <class Adjacent>
std::size_t components(const std::vector<QubitId>& nodes, Adjacent adjacent) {
  std::vector<int> label(nodes.size(), -1);
  std::size_t count = 0;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = static_cast<int>(count);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < nodes.size(); ++v)
        if (label[v] < 0 && adjacent(nodes[u], nodes[v])) {
          label[v] = static_cast<int>(count);
          stack.push_back(v);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace oracle
