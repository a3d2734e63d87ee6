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


#include <cmath>

#include "doctest.h"
#include "chainskip/error.hpp"
#include "chainskip/ising.hpp"
#include "oracle.hpp"

using namespace chainskip;

TEST_CASE("model stores canonical coefficients") {
  IsingModel m;
  m.set_quadratic(3, 1, 0.5);
  m.add_quadratic(1, 3, 0.25);
  m.add_linear(2, -1.0);
  CHECK(m.num_variables() == 3);
  CHECK(m.quadratic(1, 3) == 0.75);
  CHECK(m.quadratic(3, 1) == 0.75);
  CHECK(m.quadratic().begin()->first == Edge{1, 3});
  CHECK(m.linear(1) == 0.0);
  CHECK(m.degree(1) == 1);
  CHECK(m.max_abs_coefficient() == 1.0);
  CHECK_THROWS_AS(m.set_quadratic(2, 2, 1.0), InvalidArgument);
  CHECK_THROWS_AS(m.set_linear(0, NAN), InvalidArgument);
  m.remove_variable(3);
  CHECK(m.num_interactions() == 0);
  CHECK(m.degree(1) == 0);
}

TEST_CASE("energy matches direct evaluation") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    IsingModel m = oracle::random_model(8, 0.5, seed);
    m.set_offset(0.375);
    std::vector<QubitId> ids(m.variables().begin(), m.variables().end());
    for (std::uint64_t mask = 0; mask < 256; mask += 37) {
      Assignment a = oracle::from_mask(ids, mask);
      CHECK(energy(m, a) == doctest::Approx(oracle::direct_energy(m, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy rejects a partial assignment") {
  IsingModel m;
  m.set_quadratic(0, 1, 1.0);
  CHECK_THROWS_AS(energy(m, Assignment{{0, 1}}), MissingVariableError);
  CHECK(energy(m, Assignment{{0, 1}, {1, -1}, {7, 1}}) == -1.0);
}

TEST_CASE("fixing a qubit preserves every completion energy") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const IsingModel m = oracle::random_model(7, 0.6, seed);
    for (QubitId q : {0u, 3u, 6u})
      for (Spin s : {Spin{-1}, Spin{1}}) {
        const IsingModel f = fix_qubit(m, q, s);
        CHECK_FALSE(f.contains(q));
        std::vector<QubitId> rest(f.variables().begin(), f.variables().end());
        for (std::uint64_t mask = 0; mask < (1u << rest.size()); ++mask) {
          Assignment a = oracle::from_mask(rest, mask);
          Assignment full = a;
          full[q] = s;
          CHECK(oracle::direct_energy(f, a) == doctest::Approx(oracle::direct_energy(m, full)).epsilon(1e-12));
        }
      }
  }
}

TEST_CASE("fixing on a worked example") {
  IsingModel m;
  m.set_linear(0, 1.0);
  m.set_linear(1, -0.5);
  m.set_quadratic(0, 1, 2.0);
  m.set_quadratic(0, 2, -1.0);
  const IsingModel f = fix_qubit(m, 0, Spin{-1});
  CHECK(f.offset() == -1.0);
  CHECK(f.linear(1) == -2.5);
  CHECK(f.linear(2) == 1.0);
  CHECK(f.num_interactions() == 0);
  CHECK_THROWS_AS(fix_qubit(m, 9, Spin{1}), UnknownQubitError);
  CHECK(fix_qubits(m, {{0, -1}, {2, 1}}).offset() == 0.0);
}

TEST_CASE("brute force agrees with plain enumeration") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const IsingModel m = oracle::random_model(3 + seed % 10, 0.4, seed, seed % 2 == 0);
    const GroundState g = brute_force_ground(m);
    CHECK(g.energy == doctest::Approx(oracle::ground_energy(m)).epsilon(1e-12));
    CHECK(g.energy == energy(m, g.assignment));
    // lexicographically smallest of the optimal set
    for (const auto& a : oracle::ground_states(m, 0.0)) CHECK_FALSE(lexicographically_less(a, g.assignment));
  }
}

TEST_CASE("brute force tie-breaking on a symmetric model") {
  IsingModel m;
  m.set_quadratic(0, 1, -1.0);
  const GroundState g = brute_force_ground(m);
  CHECK(g.energy == -1.0);
  CHECK(g.assignment == Assignment{{0, -1}, {1, -1}});
  CHECK_THROWS_AS(brute_force_ground(oracle::random_model(5, 0.5, 1), 4), TooLargeError);
  CHECK(brute_force_ground(IsingModel{}).energy == 0.0);
}

TEST_CASE("lexicographic order and flipping") {
  Assignment a{{1, -1}, {2, 1}};
  Assignment b{{1, 1}, {2, -1}};
  CHECK(lexicographically_less(a, b));
  CHECK_FALSE(lexicographically_less(b, a));
  CHECK(flipped(a) == b);
}

TEST_CASE("degree order and zero-linear detection") {
  IsingModel m;
  m.set_quadratic(0, 5, 1.0);
  m.set_quadratic(5, 2, 1.0);
  m.set_quadratic(2, 0, 1.0);
  m.set_quadratic(5, 7, 1.0);
  CHECK(degree_order(m) == std::vector<QubitId>{5, 0, 2, 7});
  CHECK(has_zero_linear(m));
  m.set_linear(7, 0.1);
  CHECK_FALSE(has_zero_linear(m));
}

TEST_CASE("compact view reproduces energies bit for bit") {
  const IsingModel m = oracle::random_model(9, 0.5, 42);
  const CompactIsing c(m);
  std::vector<QubitId> ids(m.variables().begin(), m.variables().end());
  for (std::uint64_t mask = 0; mask < 512; mask += 7) {
    Assignment a = oracle::from_mask(ids, mask);
    std::vector<Spin> z = c.from_assignment(a);
    CHECK(c.energy(z) == energy(m, a));
    for (std::size_t k = 0; k < z.size(); ++k) {
      Assignment b = a;
      b[ids[k]] = static_cast<Spin>(-b[ids[k]]);
      CHECK(c.flip_delta(z, k) == doctest::Approx(oracle::direct_energy(m, b) - oracle::direct_energy(m, a)).epsilon(1e-12));
    }
    CHECK(c.to_assignment(z) == a);
  }
}

TEST_CASE("aggregate merges and orders samples") {
  IsingModel m;
  m.set_quadratic(0, 1, 1.0);
  std::vector<Sample> raw{{{{0, 1}, {1, 1}}, 0.0, 2}, {{{0, 1}, {1, -1}}, 0.0, 1}, {{{0, 1}, {1, 1}}, 0.0, 3}};
  const SampleSet s = aggregate(m, raw);
  REQUIRE(s.samples.size() == 2);
  CHECK(s.num_reads == 6);
  CHECK(s.lowest().energy == -1.0);
  CHECK(s.samples[1].occurrences == 5);
  CHECK(s.mean_energy() == doctest::Approx((-1.0 + 5.0) / 6.0));
}
