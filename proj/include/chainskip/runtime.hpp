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
#include <cstdint>
#include <string>

namespace chainskip {

enum class Scheme { baseline, skipper, skipperg };
enum class AccessMode { shared, dedicated };

std::string to_string(Scheme s);
std::string to_string(AccessMode m);
Scheme scheme_from_string(const std::string& s);

/// End-to-end runtime assumptions, all in seconds.
struct RuntimeParams {
  double t_emb_baseline = 1800.0;  // 30 min
  double t_queue = 1.0;            // shared access; dedicated is 0
  double t_net = 1.0;
  double t_classical = 2.0;        // 1 s pre + 1 s post
  double t_p = 0.0;
  double delta = 0.010;            // annealer initialisation
  double t_s = 0.0005;             // one anneal + readout
  std::uint64_t reads = 4000;
  double t_qmi_cap = 2.0;

  static RuntimeParams for_mode(AccessMode mode);
  /// Throws InvalidArgument on negative or non-finite values.
  void validate() const;
};

/// min(t_p + delta + reads * t_s, t_qmi_cap).
double t_qmi(const RuntimeParams& p);

/// Embedding time with c skipped chains: the baseline for c <= 1, else
/// t_emb_baseline / c.
double t_emb(const RuntimeParams& p, std::size_t c);

/// QMIs a scheme issues: 1, 2^c (2^(c-1) when halved), or 2c + 1.
std::size_t expected_qmis(Scheme s, std::size_t c, bool zero_linear);

struct RuntimeEstimate {
  double t_emb = 0.0;
  double t_qmi = 0.0;
  std::size_t n_qmi = 0;
  /// T_emb + N_QMI (T_queue + T_QMI + T_net) + T_classical.
  double total = 0.0;
  /// Same with every QMI running concurrently on dedicated hardware.
  double total_parallel_qmi = 0.0;
};

/// Throws InvalidArgument when n_qmi is inconsistent with the scheme.
/// Skipper-G embeds its levels in parallel, so its T_emb is the root's.
RuntimeEstimate total_runtime(const RuntimeParams& p, std::size_t n_qmi, std::size_t c, Scheme s);

}  // namespace chainskip
