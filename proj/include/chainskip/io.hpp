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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainskip/embed.hpp"
#include "chainskip/hwgraph.hpp"
#include "chainskip/ising.hpp"

namespace chainskip {

using json = nlohmann::ordered_json;

// Model: {"variables":[ids], "h":{"id":coef}, "J":[[i,j,coef],...], "offset":x}
json model_to_json(const IsingModel& model);
IsingModel model_from_json(const json& j);

// Hardware: {"topology":"chimera","m":..,"n":..,"t":..}, {"topology":"grid",
// "rows":..,"cols":..}, {"topology":"complete","n":..} or
// {"topology":"custom","edges":[[a,b],...]}.
json graph_to_json(const HardwareGraph& g);
HardwareGraph graph_from_json(const json& j);

/// Parses "chimera:m,n,t", "grid:r,c", "complete:n" or "none" (empty graph).
HardwareGraph parse_hardware_spec(const std::string& spec);

// Embedding: {"chains":{"<program id>":[physical ids...]}}
json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& j);

json metrics_to_json(const EmbeddingMetrics& m);

/// One JSON object per line, {"spins":[...],"energy":e,"occ":k}, with spins
/// listed in ascending qubit order.
std::string sampleset_to_jsonl(const SampleSet& s);
SampleSet sampleset_from_jsonl(const std::string& text, const std::vector<QubitId>& variables);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace chainskip
