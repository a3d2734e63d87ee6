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

#include "chainskip/qmi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chainskip/error.hpp"

namespace chainskip {

void ChainStrengthPolicy::validate() const {
  if (!(value > 0.0) || !std::isfinite(value))
    throw InvalidArgument("chain strength value must be positive");
}

double ChainStrengthPolicy::strength(const IsingModel& logical) const {
  validate();
  if (mode == Mode::fixed) return value;
  double m = logical.max_abs_coefficient();
  return m > 0.0 ? value * m : value;
}

IsingModel embed_model(const IsingModel& logical, const Embedding& e, const HardwareGraph& hw,
                       const ChainStrengthPolicy& cs) {
  const double s = cs.strength(logical);
  const auto violations = validate(e, coupling_graph(logical), hw);
  for (const auto& v : violations) {
    if (v.kind == ViolationKind::missing_coupler)
      throw InvalidEmbedding("zero couplers for logical edge: " + v.message);
  }
  if (!violations.empty()) throw InvalidEmbedding("invalid embedding: " + violations.front().message);

  IsingModel phys;
  for (QubitId q : logical.variables())
    for (QubitId p : e.chain(q)) phys.add_variable(p);

  for (const auto& [q, h] : logical.linear()) {
    const auto& chain = e.chain(q);
    const double part = h / static_cast<double>(chain.size());
    for (QubitId p : chain) phys.add_linear(p, part);
  }

  for (const auto& [edge, j] : logical.quadratic()) {
    const auto& a = e.chain(edge.first);
    const auto& b = e.chain(edge.second);
    std::vector<Edge> couplers;
    for (QubitId u : a)
      for (QubitId v : hw.neighbors(u))
        if (std::binary_search(b.begin(), b.end(), v)) couplers.emplace_back(u, v);
    if (couplers.empty())
      throw InvalidEmbedding("zero couplers between chains of " + std::to_string(edge.first) + " and " +
                             std::to_string(edge.second));
    const double part = j / static_cast<double>(couplers.size());
    for (const auto& [u, v] : couplers) phys.set_quadratic(u, v, part);
  }

  std::size_t intra = 0;
  for (QubitId q : logical.variables()) {
    const auto& chain = e.chain(q);
    for (QubitId u : chain)
      for (QubitId v : hw.neighbors(u))
        if (u < v && std::binary_search(chain.begin(), chain.end(), v)) {
          phys.set_quadratic(u, v, -s);
          ++intra;
        }
  }
  phys.set_offset(logical.offset() + s * static_cast<double>(intra));
  return phys;
}

Assignment embed_assignment(const Assignment& logical, const Embedding& e) {
  Assignment out;
  for (const auto& [q, spin] : logical)
    for (QubitId p : e.chain(q)) out[p] = spin;
  return out;
}

}  // namespace chainskip
