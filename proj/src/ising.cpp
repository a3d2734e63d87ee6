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

#include "chainskip/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "chainskip/error.hpp"

namespace chainskip {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite coefficient");
}

std::string qubit_name(QubitId q) { return std::to_string(q); }

}  // namespace

void IsingModel::add_variable(QubitId q) { variables_.insert(q); }

void IsingModel::set_linear(QubitId q, double value) {
  require_finite(value);
  variables_.insert(q);
  linear_[q] = value;
}

void IsingModel::add_linear(QubitId q, double value) {
  require_finite(value);
  variables_.insert(q);
  auto [it, inserted] = linear_.try_emplace(q, value);
  if (!inserted) {
    it->second += value;
    require_finite(it->second);
  }
}

void IsingModel::set_quadratic(QubitId a, QubitId b, double value) {
  if (a == b) throw InvalidArgument("self-coupling on qubit " + qubit_name(a));
  require_finite(value);
  variables_.insert(a);
  variables_.insert(b);
  quadratic_[make_edge(a, b)] = value;
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

void IsingModel::add_quadratic(QubitId a, QubitId b, double value) {
  if (a == b) throw InvalidArgument("self-coupling on qubit " + qubit_name(a));
  require_finite(value);
  variables_.insert(a);
  variables_.insert(b);
  auto [it, inserted] = quadratic_.try_emplace(make_edge(a, b), value);
  if (!inserted) {
    it->second += value;
    require_finite(it->second);
  }
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

void IsingModel::set_offset(double value) {
  require_finite(value);
  offset_ = value;
}

void IsingModel::add_offset(double value) {
  require_finite(value);
  offset_ += value;
}

double IsingModel::linear(QubitId q) const {
  auto it = linear_.find(q);
  return it == linear_.end() ? 0.0 : it->second;
}

double IsingModel::quadratic(QubitId a, QubitId b) const {
  auto it = quadratic_.find(make_edge(a, b));
  return it == quadratic_.end() ? 0.0 : it->second;
}

const std::set<QubitId>& IsingModel::neighbors(QubitId q) const {
  static const std::set<QubitId> none;
  if (!contains(q)) throw UnknownQubitError("unknown qubit " + qubit_name(q));
  auto it = adjacency_.find(q);
  return it == adjacency_.end() ? none : it->second;
}

double IsingModel::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [q, v] : linear_) m = std::max(m, std::abs(v));
  for (const auto& [e, v] : quadratic_) m = std::max(m, std::abs(v));
  return m;
}

void IsingModel::remove_variable(QubitId q) {
  if (!contains(q)) throw UnknownQubitError("unknown qubit " + qubit_name(q));
  if (auto it = adjacency_.find(q); it != adjacency_.end()) {
    for (QubitId j : it->second) {
      quadratic_.erase(make_edge(q, j));
      auto& back = adjacency_[j];
      back.erase(q);
      if (back.empty()) adjacency_.erase(j);
    }
    adjacency_.erase(it);
  }
  linear_.erase(q);
  variables_.erase(q);
}

double energy(const IsingModel& model, const Assignment& a) {
  auto spin = [&a](QubitId q) -> double {
    auto it = a.find(q);
    if (it == a.end()) throw MissingVariableError("assignment lacks qubit " + qubit_name(q));
    return it->second;
  };
  for (QubitId q : model.variables()) spin(q);

  double sum = 0.0;
  for (const auto& [q, v] : model.linear()) sum += v * spin(q);
  for (const auto& [e, v] : model.quadratic()) sum += v * spin(e.first) * spin(e.second);
  return sum + model.offset();
}

IsingModel fix_qubit(const IsingModel& model, QubitId q, Spin s) {
  if (!model.contains(q)) throw UnknownQubitError("cannot fix unknown qubit " + qubit_name(q));
  IsingModel out = model;
  for (QubitId j : model.neighbors(q)) out.add_linear(j, model.quadratic(q, j) * s);
  out.add_offset(model.linear(q) * s);
  out.remove_variable(q);
  return out;
}

IsingModel fix_qubits(const IsingModel& model, const Assignment& fixing) {
  for (const auto& [q, s] : fixing)
    if (!model.contains(q)) throw UnknownQubitError("cannot fix unknown qubit " + qubit_name(q));
  IsingModel out = model;
  for (const auto& [q, s] : fixing) out = fix_qubit(out, q, s);
  return out;
}

bool has_zero_linear(const IsingModel& model) {
  return std::all_of(model.linear().begin(), model.linear().end(),
                     [](const auto& kv) { return kv.second == 0.0; });
}

std::vector<QubitId> degree_order(const IsingModel& model) {
  std::vector<QubitId> order(model.variables().begin(), model.variables().end());
  std::stable_sort(order.begin(), order.end(), [&model](QubitId a, QubitId b) {
    return model.degree(a) > model.degree(b);
  });
  return order;
}

Assignment flipped(const Assignment& a) {
  Assignment out;
  for (const auto& [q, s] : a) out.emplace_hint(out.end(), q, static_cast<Spin>(-s));
  return out;
}

bool lexicographically_less(const Assignment& a, const Assignment& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------

CompactIsing::CompactIsing(const IsingModel& model)
    : ids_(model.variables().begin(), model.variables().end()),
      h_(ids_.size(), 0.0),
      adjacency_(ids_.size()),
      offset_(model.offset()) {
  auto index = [this](QubitId q) {
    return static_cast<std::uint32_t>(std::lower_bound(ids_.begin(), ids_.end(), q) - ids_.begin());
  };
  for (const auto& [q, v] : model.linear()) {
    auto k = index(q);
    h_[k] = v;
    linear_terms_.emplace_back(k, v);
  }
  for (const auto& [e, v] : model.quadratic()) {
    auto i = index(e.first), j = index(e.second);
    quadratic_terms_.emplace_back(i, j, v);
    adjacency_[i].emplace_back(j, v);
    adjacency_[j].emplace_back(i, v);
  }
}

double CompactIsing::energy(std::span<const Spin> z) const {
  double sum = 0.0;
  for (const auto& [k, v] : linear_terms_) sum += v * static_cast<double>(z[k]);
  for (const auto& [i, j, v] : quadratic_terms_)
    sum += v * static_cast<double>(z[i]) * static_cast<double>(z[j]);
  return sum + offset_;
}

double CompactIsing::local_field(std::span<const Spin> z, std::size_t k) const {
  double f = h_[k];
  for (const auto& [j, v] : adjacency_[k]) f += v * z[j];
  return f;
}

Assignment CompactIsing::to_assignment(std::span<const Spin> z) const {
  Assignment a;
  for (std::size_t k = 0; k < ids_.size(); ++k) a.emplace_hint(a.end(), ids_[k], z[k]);
  return a;
}

std::vector<Spin> CompactIsing::from_assignment(const Assignment& a) const {
  std::vector<Spin> z(ids_.size());
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    auto it = a.find(ids_[k]);
    if (it == a.end()) throw MissingVariableError("assignment lacks qubit " + qubit_name(ids_[k]));
    z[k] = it->second;
  }
  return z;
}

// ---------------------------------------------------------------------------

namespace {

// Walks all 2^n states in Gray-code order with incremental energies.
// Variable k maps to bit (n-1-k), so the integer state orders assignments
// lexicographically. visit(state, z, approx_energy) is called for every state.
template <class Visit>
void gray_walk(const CompactIsing& m, Visit&& visit) {
  const std::size_t n = m.size();
  std::vector<Spin> z(n, -1);
  std::vector<double> field(n);
  auto resync = [&] {
    for (std::size_t k = 0; k < n; ++k) field[k] = m.local_field(z, k);
    return m.energy(z);
  };
  double e = resync();
  std::uint64_t state = 0;
  visit(state, std::span<const Spin>(z), e);

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const std::size_t v = n - 1 - static_cast<std::size_t>(bit);
    state ^= std::uint64_t{1} << bit;
    e += -2.0 * z[v] * field[v];
    z[v] = static_cast<Spin>(-z[v]);
    for (const auto& [j, w] : m.adjacent(v)) field[j] += 2.0 * w * z[v];
    if ((i & 0x3FFF) == 0) e = resync();
    visit(state, std::span<const Spin>(z), e);
  }
}

}  // namespace

GroundState brute_force_ground(const IsingModel& model, std::size_t limit) {
  const std::size_t n = model.num_variables();
  if (n > limit || n >= 63)
    throw TooLargeError("brute force over " + std::to_string(n) + " variables exceeds limit " +
                        std::to_string(limit));
  const CompactIsing m(model);

  double approx_min = std::numeric_limits<double>::infinity();
  gray_walk(m, [&](std::uint64_t, std::span<const Spin>, double e) {
    approx_min = std::min(approx_min, e);
  });

  double scale = 1.0 + std::abs(model.offset());
  for (const auto& [q, v] : model.linear()) scale += std::abs(v);
  for (const auto& [e, v] : model.quadratic()) scale += std::abs(v);
  const double tol = 1e-9 * scale;

  // Second pass re-evaluates near-minimal states with the canonical summation
  // so the reported minimum is exact and ties break lexicographically.
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_state = 0;
  std::vector<Spin> best_z(n, -1);
  gray_walk(m, [&](std::uint64_t state, std::span<const Spin> z, double e) {
    if (e > approx_min + tol) return;
    double exact = m.energy(z);
    if (exact < best || (exact == best && state < best_state)) {
      best = exact;
      best_state = state;
      std::copy(z.begin(), z.end(), best_z.begin());
    }
  });

  GroundState g;
  g.assignment = m.to_assignment(best_z);
  g.energy = energy(model, g.assignment);
  return g;
}

// ---------------------------------------------------------------------------

const Sample& SampleSet::lowest() const {
  if (samples.empty()) throw InvalidArgument("empty sample set");
  return samples.front();
}

double SampleSet::mean_energy() const {
  if (samples.empty() || num_reads == 0) throw InvalidArgument("empty sample set");
  double sum = 0.0;
  for (const auto& s : samples) sum += s.energy * static_cast<double>(s.occurrences);
  return sum / static_cast<double>(num_reads);
}

SampleSet aggregate(const IsingModel& model, std::vector<Sample> samples) {
  std::map<Assignment, std::uint64_t, bool (*)(const Assignment&, const Assignment&)> counts(
      &lexicographically_less);
  for (auto& s : samples) {
    if (s.occurrences == 0) continue;
    counts[std::move(s.assignment)] += s.occurrences;
  }
  SampleSet out;
  out.samples.reserve(counts.size());
  for (auto& [a, occ] : counts) {
    out.num_reads += occ;
    out.samples.push_back(Sample{a, energy(model, a), occ});
  }
  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const Sample& x, const Sample& y) { return x.energy < y.energy; });
  return out;
}

}  // namespace chainskip
