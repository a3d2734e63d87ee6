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

#include "chainskip/unembed.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "chainskip/error.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

ChainResolution resolve_chain(const std::vector<Spin>& spins) {
  if (spins.empty()) throw InvalidArgument("empty chain");
  long sum = 0;
  for (Spin s : spins) sum += s;
  ChainResolution r;
  r.broken = static_cast<std::size_t>(std::abs(sum)) != spins.size();
  if (sum > 0) r.value = Spin{1};
  if (sum < 0) r.value = Spin{-1};
  return r;
}

std::pair<Sample, UnembedStats> unembed_sample(const Sample& hw_sample, const Embedding& e,
                                               const IsingModel& logical, std::size_t b_max,
                                               std::uint64_t seed) {
  UnembedStats stats;
  Assignment a;
  std::vector<QubitId> balanced;
  for (QubitId q : logical.variables()) {
    auto it = e.chains.find(q);
    if (it == e.chains.end()) throw MissingVariableError("no chain for program qubit " + std::to_string(q));
    std::vector<Spin> spins;
    spins.reserve(it->second.size());
    for (QubitId p : it->second) {
      auto s = hw_sample.assignment.find(p);
      if (s == hw_sample.assignment.end())
        throw MissingVariableError("hardware sample lacks physical qubit " + std::to_string(p));
      spins.push_back(s->second);
    }
    ChainResolution r = resolve_chain(spins);
    if (r.broken) ++stats.broken_chain_count;
    if (r.balanced()) {
      ++stats.balanced_chain_count;
      balanced.push_back(q);
      a[q] = Spin{-1};
    } else {
      a[q] = *r.value;
    }
  }

  const std::size_t b = balanced.size();
  if (b > 0 && b <= b_max) {
    stats.repaired_by_bruteforce = true;
    // First balanced qubit is the most significant bit, so increasing masks
    // visit completions in lexicographic order and the first minimum wins.
    Assignment best;
    double best_energy = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
      for (std::size_t k = 0; k < b; ++k)
        a[balanced[k]] = ((mask >> (b - 1 - k)) & 1U) ? Spin{1} : Spin{-1};
      double en = energy(logical, a);
      if (mask == 0 || en < best_energy) {
        best_energy = en;
        best = a;
      }
    }
    a = std::move(best);
  } else if (b > b_max) {
    stats.repaired_randomly = true;
    Rng rng(seed);
    for (QubitId q : balanced) a[q] = (rng() & 1U) ? Spin{1} : Spin{-1};
  }

  Sample out{a, energy(logical, a), hw_sample.occurrences};
  return {std::move(out), stats};
}

double UnembedTotals::broken_fraction() const {
  const double denom = static_cast<double>(reads) * static_cast<double>(chains_per_read);
  return denom > 0 ? static_cast<double>(broken_chains) / denom : 0.0;
}

UnembedTotals& UnembedTotals::operator+=(const UnembedTotals& o) {
  reads += o.reads;
  chains_per_read = std::max(chains_per_read, o.chains_per_read);
  broken_chains += o.broken_chains;
  balanced_chains += o.balanced_chains;
  bruteforce_repairs += o.bruteforce_repairs;
  random_repairs += o.random_repairs;
  return *this;
}

UnembeddedSet unembed_sampleset(const SampleSet& hw, const Embedding& e, const IsingModel& logical,
                                std::size_t b_max, std::uint64_t seed, bool apply_sqc) {
  UnembeddedSet out;
  out.totals.chains_per_read = logical.num_variables();
  std::vector<Sample> logical_samples;
  logical_samples.reserve(hw.samples.size());
  for (std::size_t i = 0; i < hw.samples.size(); ++i) {
    const Sample& s = hw.samples[i];
    auto [ls, st] = unembed_sample(s, e, logical, b_max, split_seed(seed, i));
    if (apply_sqc) ls.assignment = sqc(logical, ls.assignment);
    out.totals.reads += s.occurrences;
    out.totals.broken_chains += st.broken_chain_count * s.occurrences;
    out.totals.balanced_chains += st.balanced_chain_count * s.occurrences;
    if (st.repaired_by_bruteforce) out.totals.bruteforce_repairs += s.occurrences;
    if (st.repaired_randomly) out.totals.random_repairs += s.occurrences;
    logical_samples.push_back(std::move(ls));
  }
  out.samples = aggregate(logical, std::move(logical_samples));
  return out;
}

Assignment sqc(const IsingModel& model, const Assignment& a) {
  const CompactIsing m(model);
  std::vector<Spin> z = m.from_assignment(a);
  for (;;) {
    double best = 0.0;
    std::size_t chosen = m.size();
    for (std::size_t k = 0; k < m.size(); ++k) {
      double d = m.flip_delta(z, k);
      if (d < best) {
        best = d;
        chosen = k;
      }
    }
    if (chosen == m.size()) break;
    z[chosen] = static_cast<Spin>(-z[chosen]);
  }
  Assignment out = a;
  for (std::size_t k = 0; k < m.size(); ++k) out[m.ids()[k]] = z[k];
  return out;
}

}  // namespace chainskip
