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

#include "chainskip/runtime.hpp"

#include <algorithm>
#include <cmath>

#include "chainskip/error.hpp"

namespace chainskip {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::baseline: return "baseline";
    case Scheme::skipper: return "skipper";
    case Scheme::skipperg: return "skipper-g";
  }
  return "baseline";
}

std::string to_string(AccessMode m) { return m == AccessMode::shared ? "shared" : "dedicated"; }

Scheme scheme_from_string(const std::string& s) {
  if (s == "baseline") return Scheme::baseline;
  if (s == "skipper") return Scheme::skipper;
  if (s == "skipper-g" || s == "skipperg") return Scheme::skipperg;
  throw InvalidArgument("unknown scheme '" + s + "'");
}

RuntimeParams RuntimeParams::for_mode(AccessMode mode) {
  RuntimeParams p;
  p.t_queue = mode == AccessMode::shared ? 1.0 : 0.0;
  return p;
}

void RuntimeParams::validate() const {
  for (double v : {t_emb_baseline, t_queue, t_net, t_classical, t_p, delta, t_s, t_qmi_cap})
    if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("runtime parameters must be finite and non-negative");
}

double t_qmi(const RuntimeParams& p) {
  p.validate();
  return std::min(p.t_p + p.delta + static_cast<double>(p.reads) * p.t_s, p.t_qmi_cap);
}

double t_emb(const RuntimeParams& p, std::size_t c) {
  p.validate();
  return c <= 1 ? p.t_emb_baseline : p.t_emb_baseline / static_cast<double>(c);
}

std::size_t expected_qmis(Scheme s, std::size_t c, bool zero_linear) {
  switch (s) {
    case Scheme::baseline: return 1;
    case Scheme::skipper:
      if (c == 0) return 1;
      return std::size_t{1} << (zero_linear ? c - 1 : c);
    case Scheme::skipperg: return 2 * c + 1;
  }
  return 1;
}

RuntimeEstimate total_runtime(const RuntimeParams& p, std::size_t n_qmi, std::size_t c, Scheme s) {
  p.validate();
  const bool consistent = n_qmi == expected_qmis(s, c, false) || n_qmi == expected_qmis(s, c, true);
  if (!consistent)
    throw InvalidArgument(std::to_string(n_qmi) + " QMIs is inconsistent with scheme " + to_string(s) +
                          " and c=" + std::to_string(c));
  RuntimeEstimate r;
  r.n_qmi = n_qmi;
  r.t_qmi = t_qmi(p);
  r.t_emb = s == Scheme::skipper ? t_emb(p, c) : p.t_emb_baseline;
  const double per_job = p.t_queue + r.t_qmi + p.t_net;
  r.total = r.t_emb + static_cast<double>(n_qmi) * per_job + p.t_classical;
  r.total_parallel_qmi = r.t_emb + per_job + p.t_classical;
  return r;
}

}  // namespace chainskip
