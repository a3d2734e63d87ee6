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

#include <cstdint>
#include <memory>
#include <string>

#include "chainskip/ising.hpp"

namespace chainskip {

struct SamplerConfig {
  std::uint64_t num_reads = 4000;
  std::uint64_t seed = 0;
  // Simulated annealing.
  int sweeps = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;
  // Flip noise.
  double flip_p = 0.0;
  // Exact sampler variable limit.
  std::size_t exact_limit = kDefaultOracleLimit;

  void validate() const;
};

/// Exact ground state as a single sample carrying every read.
SampleSet exact_sample(const IsingModel& model, const SamplerConfig& cfg);

/// num_reads independent simulated-annealing restarts. Read k starts from
/// uniformly random spins drawn from Rng(split_seed(seed, k)) and performs
/// `sweeps` sequential single-spin Metropolis sweeps along a geometric
/// inverse-temperature schedule from beta_start to beta_end.
SampleSet sa_sample(const IsingModel& model, const SamplerConfig& cfg);

/// Something that turns a model into a SampleSet.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const IsingModel& model, std::uint64_t seed) const = 0;
  virtual std::string name() const = 0;
};

class ExactSampler final : public Sampler {
 public:
  explicit ExactSampler(SamplerConfig cfg = {});
  SampleSet sample(const IsingModel& model, std::uint64_t seed) const override;
  std::string name() const override { return "exact"; }

 private:
  SamplerConfig cfg_;
};

class SimulatedAnnealingSampler final : public Sampler {
 public:
  explicit SimulatedAnnealingSampler(SamplerConfig cfg = {});
  SampleSet sample(const IsingModel& model, std::uint64_t seed) const override;
  std::string name() const override { return "sa"; }

 private:
  SamplerConfig cfg_;
};

/// Flips every qubit of every read of the inner sampler independently with
/// probability p, then re-aggregates with recomputed energies.
class FlipNoiseSampler final : public Sampler {
 public:
  FlipNoiseSampler(std::shared_ptr<const Sampler> inner, double p, std::uint64_t seed);
  SampleSet sample(const IsingModel& model, std::uint64_t seed) const override;
  std::string name() const override { return inner_->name() + "+noise"; }

 private:
  std::shared_ptr<const Sampler> inner_;
  double p_;
  std::uint64_t seed_;
};

std::shared_ptr<const Sampler> with_flip_noise(std::shared_ptr<const Sampler> inner, double p,
                                               std::uint64_t seed);

}  // namespace chainskip
