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

#include "chainskip/sampler.hpp"

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "chainskip/error.hpp"
#include "chainskip/parallel.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

void SamplerConfig::validate() const {
  if (num_reads < 1) throw InvalidArgument("num_reads must be >= 1");
  if (sweeps < 1) throw InvalidArgument("sweeps must be >= 1");
  if (!(beta_start > 0.0) || !(beta_end > 0.0)) throw InvalidArgument("inverse temperatures must be positive");
  if (!(flip_p >= 0.0 && flip_p < 1.0)) throw InvalidArgument("flip probability must be in [0, 1)");
}

SampleSet exact_sample(const IsingModel& model, const SamplerConfig& cfg) {
  cfg.validate();
  GroundState g = brute_force_ground(model, cfg.exact_limit);
  SampleSet out;
  out.num_reads = cfg.num_reads;
  out.samples.push_back(Sample{std::move(g.assignment), g.energy, cfg.num_reads});
  return out;
}

SampleSet sa_sample(const IsingModel& model, const SamplerConfig& cfg) {
  cfg.validate();
  const CompactIsing m(model);
  const std::size_t n = m.size();
  const auto reads = static_cast<std::size_t>(cfg.num_reads);

  std::vector<double> betas(static_cast<std::size_t>(cfg.sweeps));
  for (std::size_t s = 0; s < betas.size(); ++s) {
    double frac = betas.size() == 1 ? 1.0 : static_cast<double>(s) / static_cast<double>(betas.size() - 1);
    betas[s] = cfg.beta_start * std::pow(cfg.beta_end / cfg.beta_start, frac);
  }

  std::vector<std::vector<Spin>> states(reads);
  parallel_for(reads, [&](std::size_t r) {
    Rng rng(split_seed(cfg.seed, r));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Spin> z(n);
    for (auto& s : z) s = (rng() & 1U) ? Spin{1} : Spin{-1};
    std::vector<double> field(n);
    for (std::size_t k = 0; k < n; ++k) field[k] = m.local_field(z, k);

    for (double beta : betas) {
      for (std::size_t k = 0; k < n; ++k) {
        const double delta = -2.0 * z[k] * field[k];
        if (delta <= 0.0 || unit(rng) < std::exp(-beta * delta)) {
          z[k] = static_cast<Spin>(-z[k]);
          for (const auto& [j, w] : m.adjacent(k)) field[j] += 2.0 * w * z[k];
        }
      }
    }
    states[r] = std::move(z);
  });

  std::map<std::vector<Spin>, std::uint64_t> counts;
  for (auto& z : states) ++counts[std::move(z)];
  std::vector<Sample> samples;
  samples.reserve(counts.size());
  for (const auto& [z, occ] : counts) samples.push_back(Sample{m.to_assignment(z), 0.0, occ});
  return aggregate(model, std::move(samples));
}

ExactSampler::ExactSampler(SamplerConfig cfg) : cfg_(cfg) { cfg_.validate(); }

SampleSet ExactSampler::sample(const IsingModel& model, std::uint64_t seed) const {
  SamplerConfig c = cfg_;
  c.seed = seed;
  return exact_sample(model, c);
}

SimulatedAnnealingSampler::SimulatedAnnealingSampler(SamplerConfig cfg) : cfg_(cfg) { cfg_.validate(); }

SampleSet SimulatedAnnealingSampler::sample(const IsingModel& model, std::uint64_t seed) const {
  SamplerConfig c = cfg_;
  c.seed = seed;
  return sa_sample(model, c);
}

FlipNoiseSampler::FlipNoiseSampler(std::shared_ptr<const Sampler> inner, double p, std::uint64_t seed)
    : inner_(std::move(inner)), p_(p), seed_(seed) {
  if (!inner_) throw InvalidArgument("flip noise needs an inner sampler");
  if (!(p_ >= 0.0 && p_ < 1.0)) throw InvalidArgument("flip probability must be in [0, 1)");
}

SampleSet FlipNoiseSampler::sample(const IsingModel& model, std::uint64_t seed) const {
  SampleSet clean = inner_->sample(model, seed);
  if (p_ == 0.0) return clean;

  Rng rng(split_seed(seed_, seed));
  std::bernoulli_distribution flip(p_);
  std::vector<Sample> reads;
  reads.reserve(static_cast<std::size_t>(clean.num_reads));
  for (const auto& s : clean.samples) {
    for (std::uint64_t k = 0; k < s.occurrences; ++k) {
      Assignment a = s.assignment;
      for (auto& [q, spin] : a)
        if (flip(rng)) spin = static_cast<Spin>(-spin);
      reads.push_back(Sample{std::move(a), 0.0, 1});
    }
  }
  return aggregate(model, std::move(reads));
}

std::shared_ptr<const Sampler> with_flip_noise(std::shared_ptr<const Sampler> inner, double p,
                                               std::uint64_t seed) {
  return std::make_shared<FlipNoiseSampler>(std::move(inner), p, seed);
}

}  // namespace chainskip
