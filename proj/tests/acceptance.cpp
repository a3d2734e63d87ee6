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


// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
// exits non-zero when any selected criterion fails. With arguments, only
// the listed criteria run (e.g. `acceptance 4 5`).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chainskip/bench.hpp"
#include "chainskip/embed.hpp"
#include "chainskip/qmi.hpp"
#include "chainskip/runtime.hpp"
#include "chainskip/sampler.hpp"
#include "chainskip/skipper.hpp"
#include "chainskip/skipperg.hpp"
#include "chainskip/unembed.hpp"
#include "oracle.hpp"

using namespace chainskip;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first few failures for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream s;
    s << summary << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
    if (failures_) s << " first failures: " << notes_.str();
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::ostringstream notes_;
};

SamplerConfig reads(std::uint64_t n) {
  SamplerConfig cfg;
  cfg.num_reads = n;
  return cfg;
}

// 1. Exact recovery through Skipper with exact sub-problem sampling.
Verdict exact_recovery() {
  Tally t;
  const ExactSampler exact(reads(1));
  for (std::uint64_t k = 0; k < 50; ++k) {
    const BAParams p{10 + k % 9, 2 + k % 2, 1000 + k, k % 3 == 0 ? LinearMode::zero : LinearMode::normal};
    const IsingModel m = ba_model(p);
    const double ground = brute_force_ground(m).energy;
    for (std::size_t c : {1, 3, 5}) {
      const SkipperResult r = run_skipper(m, c, exact, ExecutionOptions{}, k);
      t.check(r.best.energy == ground, "model " + std::to_string(k) + " c=" + std::to_string(c));
    }
  }
  return t.verdict("50 BA-2/BA-3 models, n 10..18, c in {1,3,5}, zero tolerance");
}

// 2. Symmetry halving against the full tree.
Verdict symmetry_halving() {
  Tally t;
  const ExactSampler exact(reads(1));
  for (std::uint64_t k = 0; k < 30; ++k) {
    const IsingModel m = ba_model({8 + k % 7, 1 + k % 3, 2000 + k, LinearMode::zero});
    for (std::size_t c = 1; c <= 4; ++c) {
      const SkipperResult halved = run_skipper(m, c, exact, ExecutionOptions{}, k);
      CutPlan full = halved.plan;
      full.symmetry_halved = false;
      const auto subs = build_subproblems(m, full);
      double best = 0.0;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const double e = decode(exact.sample(subs[i].model, 0).lowest(), subs[i].fixing, m).energy;
        if (i == 0 || e < best) best = e;
      }
      const std::string tag = "model " + std::to_string(k) + " c=" + std::to_string(c);
      t.check(halved.plan.symmetry_halved, tag + " not halved");
      t.check(halved.n_qmi == (std::size_t{1} << (c - 1)), tag + " halved count");
      t.check(subs.size() == (std::size_t{1} << c), tag + " full count");
      t.check(halved.best.energy == best, tag + " energy");
    }
  }
  return t.verdict("30 zero-linear models, n 8..14, c 1..4, halved vs full tree");
}

// 3. Embedding validity and determinism.
Verdict embedding_validity() {
  Tally t;
  const std::vector<std::pair<std::string, HardwareGraph>> targets{
      {"chimera(4,4,4)", chimera(4, 4, 4)}, {"grid(12,12)", grid(12, 12)}};
  std::size_t successes = 0, calls = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::size_t m = 1 + k % 6;
    const auto& [name, hw] = targets[(k / 6) % 2];
    const bool is_grid = hw.topology() == Topology::grid;
    // sizes from comfortable to near the limit of each target
    const std::size_t n = m + 2 + (k * 7) % (is_grid ? 28 / m + 6 : 60 / m + 8);
    const Graph src = ba_graph({n, m, 3000 + k});
    EmbedderParams p;
    p.seed = k;
    p.tries = 2;
    const EmbedOutcome a = find_embedding(src, hw, p);
    const EmbedOutcome b = find_embedding(src, hw, p);
    ++calls;
    const std::string tag = name + " BA-" + std::to_string(m) + " n=" + std::to_string(n);
    t.check(a.ok() == b.ok(), tag + " outcome differs");
    if (!a.ok()) continue;
    ++successes;
    t.check(validate(*a.embedding, src, hw).empty(), tag + " invalid");
    t.check(b.ok() && *a.embedding == *b.embedding, tag + " not reproducible");
  }
  Verdict v = t.verdict(std::to_string(calls) + " calls, " + std::to_string(successes) + " successes validated and re-run");
  if (successes == 0) v.pass = false;
  return v;
}

// 4. The QMI keeps the logical ground state and chains stay intact.
Verdict qmi_equivalence() {
  Tally t;
  const HardwareGraph hw = chimera(2, 2, 2);
  for (std::uint64_t k = 0; k < 30; ++k) {
    const std::size_t n = 3 + k % 4;
    const IsingModel logical = oracle::random_model(n, 0.7, 4000 + k, k % 2 == 0);
    EmbedderParams p;
    p.seed = k;
    const EmbedOutcome out = find_embedding(coupling_graph(logical), hw, p);
    const std::string tag = "model " + std::to_string(k);
    t.check(out.ok(), tag + " did not embed");
    if (!out.ok()) continue;
    const IsingModel phys = embed_model(logical, *out.embedding, hw);
    const GroundState pg = brute_force_ground(phys);
    const double lg = oracle::ground_energy(logical);
    t.check(std::abs(pg.energy - lg) <= 1e-9, tag + " energy");
    for (const auto& [q, chain] : out.embedding->chains) {
      std::set<Spin> spins;
      for (QubitId x : chain) spins.insert(pg.assignment.at(x));
      t.check(spins.size() == 1, tag + " broken chain");
    }
  }
  return t.verdict("30 models, n 3..6, into chimera(2,2,2), alpha=2");
}

// 5. Unembedding properties.
Verdict unembedding() {
  Tally t;
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = 1 + 2 * (g() % 6);
    std::vector<Spin> spins(len);
    int sum = 0;
    for (auto& s : spins) sum += (s = (g() & 1U) ? Spin{1} : Spin{-1});
    const ChainResolution r = resolve_chain(spins);
    t.check(r.value.has_value() && *r.value == (sum > 0 ? 1 : -1), "vote " + std::to_string(trial));
  }
  // balanced chains, b <= 5, against an exhaustive completion search
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::size_t n = 7;
    const std::size_t b = 1 + k % 5;
    const IsingModel m = oracle::random_model(n, 0.5, 5000 + k);
    Embedding e;
    Assignment hw, known;
    std::vector<QubitId> tied;
    for (QubitId i = 0; i < n; ++i) {
      e.chains[i] = {2 * i, 2 * i + 1};
      const Spin s = (g() & 1U) ? Spin{1} : Spin{-1};
      if (i < b) {
        hw[2 * i] = s;
        hw[2 * i + 1] = static_cast<Spin>(-s);
        tied.push_back(i);
      } else {
        hw[2 * i] = hw[2 * i + 1] = s;
        known[i] = s;
      }
    }
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (1u << b); ++mask) {
      Assignment a = known;
      for (const auto& [q, s] : oracle::from_mask(tied, mask)) a[q] = s;
      const double en = oracle::direct_energy(m, a);
      if (mask == 0 || en < best) best = en;
    }
    const auto [s, st] = unembed_sample(Sample{hw, 0.0, 1}, e, m);
    t.check(st.repaired_by_bruteforce && std::abs(s.energy - best) <= 1e-12, "balanced " + std::to_string(k));
  }
  // b > 10 goes through the seeded random path
  for (std::uint64_t k = 0; k < 20; ++k) {
    const std::size_t n = 11 + k % 5;
    const IsingModel m = oracle::random_model(n, 0.3, 6000 + k);
    Embedding e;
    Assignment hw;
    for (QubitId i = 0; i < n; ++i) {
      e.chains[i] = {2 * i, 2 * i + 1};
      hw[2 * i] = 1;
      hw[2 * i + 1] = -1;
    }
    const auto [x, sx] = unembed_sample(Sample{hw, 0.0, 1}, e, m, kDefaultBalancedLimit, k);
    const auto [y, sy] = unembed_sample(Sample{hw, 0.0, 1}, e, m, kDefaultBalancedLimit, k);
    t.check(sx.repaired_randomly && !sx.repaired_by_bruteforce, "random path " + std::to_string(k));
    t.check(x.assignment == y.assignment, "random path determinism " + std::to_string(k));
  }
  return t.verdict("10^4 vote fuzz cases, 200 balanced cases b<=5, 20 cases b>10");
}

// 6. Skipper-G contract.
Verdict skipper_g_contract() {
  Tally t;
  const ExactSampler exact(reads(4));
  const IsingModel big = ba_model({16, 3, 7000, LinearMode::normal});
  for (std::size_t c = 0; c <= kMaxCuts; ++c) {
    const SkipperGResult r = run_skipper_g(big, c, exact, ExecutionOptions{}, c);
    t.check(r.n_qmi == 2 * c + 1, "c=" + std::to_string(c) + " QMI count");
    t.check(r.levels_completed == c, "c=" + std::to_string(c) + " levels");
    for (std::size_t i = 1; i < r.path.size(); ++i) {
      const std::uint64_t parent = r.path[i - 1];
      t.check(r.path[i] == 2 * parent || r.path[i] == 2 * parent + 1, "path step");
      t.check(r.nodes[2 * i - 1].index == 2 * parent && r.nodes[2 * i].index == 2 * parent + 1, "child indices");
    }
    if (c >= 1) t.check(r.nodes[1].index == 2 && r.nodes[2].index == 3, "root children are 2 and 3");
  }
  for (std::uint64_t k = 0; k < 50; ++k) {
    const IsingModel m = ba_model({10 + k % 9, 2 + k % 3, 7100 + k, k % 2 ? LinearMode::normal : LinearMode::zero});
    const SkipperGResult r = run_skipper_g(m, 1 + k % 6, exact, ExecutionOptions{}, k);
    t.check(r.best.energy <= r.nodes[0].best.energy, "never worse, instance " + std::to_string(k));
  }
  return t.verdict("QMI count for c 0..11, 2x/2x+1 indexing, never-worse on 50 instances");
}

// 7. Desk-scale trends on chimera(8,8,4).
Verdict desk_trends() {
  const HardwareGraph hw = chimera(8, 8, 4);
  std::size_t max_ok = 0, cap_ok = 0, unused_ok = 0;
  const std::size_t seeds = 10;
  std::ostringstream rows;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    ModelFamily family = [seed](std::size_t n) { return ba_model({n, 3, seed, LinearMode::zero}); };
    EmbedderParams p;
    p.seed = seed;
    const CapacityResult base = capacity_search(family, hw, 0, p, seed, 4);
    const CapacityResult cut = capacity_search(family, hw, 5, p, seed, 4);
    if (!base.metrics || !cut.metrics) continue;
    max_ok += cut.metrics->max_chain_len <= base.metrics->max_chain_len;
    cap_ok += cut.capacity >= base.capacity;
    unused_ok += cut.metrics->unused_qubits <= base.metrics->unused_qubits;
    std::printf("  seed %2llu  capacity %3zu -> %3zu  max chain %2zu -> %2zu  unused %3zu -> %3zu\n",
                static_cast<unsigned long long>(seed), base.capacity, cut.capacity, base.metrics->max_chain_len,
                cut.metrics->max_chain_len, base.metrics->unused_qubits, cut.metrics->unused_qubits);
  }
  const bool a = max_ok * 10 >= seeds * 8, b = cap_ok * 10 >= seeds * 8, c = unused_ok * 10 >= seeds * 7;
  std::ostringstream s;
  s << "(a) max chain " << max_ok << "/" << seeds << (a ? " ok" : " below 8") << ", (b) capacity " << cap_ok << "/"
    << seeds << (b ? " ok" : " below 8") << ", (c) unused qubits " << unused_ok << "/" << seeds
    << (c ? " ok" : " below 7");
  return {a && b && c, s.str()};
}

// 8. Runtime arithmetic.
Verdict runtime_arithmetic() {
  Tally t;
  const RuntimeParams shared = RuntimeParams::for_mode(AccessMode::shared);
  t.check(total_runtime(shared, 1, 0, Scheme::baseline).total == 1806.0, "baseline shared total");
  t.check(t_emb(shared, 10) == 180.0, "t_emb(1800, 10)");
  t.check(t_qmi(shared) == 2.0, "t_qmi cap");
  return t.verdict("1806 s baseline, 180 s embedding at c=10, 2.0 s QMI cap");
}

// 9. Simulated annealing sanity.
Verdict sa_sanity() {
  std::size_t hits = 0, er_ok = 0;
  const std::size_t runs = 20;
  for (std::uint64_t k = 0; k < runs; ++k) {
    const IsingModel m = ba_model({10, 2 + k % 2, 9000 + k, k % 2 ? LinearMode::normal : LinearMode::zero});
    SamplerConfig cfg = reads(4000);
    cfg.seed = k;
    const double best = sa_sample(m, cfg).lowest().energy;
    const double ground = oracle::ground_energy(m);
    hits += std::abs(best - ground) <= 1e-9;
    er_ok += energy_residual(best, ground) >= 0.0;
  }
  std::ostringstream s;
  s << hits << "/" << runs << " reach the exact minimum, ER >= 0 in " << er_ok << "/" << runs;
  return {hits * 100 >= runs * 95 && er_ok == runs, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{exact_recovery,    symmetry_halving, embedding_validity,
                                                       qmi_equivalence,   unembedding,      skipper_g_contract,
                                                       desk_trends,       runtime_arithmetic, sa_sanity};
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1-9 ...]\n", argv[0]);
      return 2;
    }
    selected.insert(static_cast<std::size_t>(k));
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.insert(k);

  int failed = 0;
  for (std::size_t k : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = criteria[k - 1]();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", k, v.detail.c_str(), s);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
