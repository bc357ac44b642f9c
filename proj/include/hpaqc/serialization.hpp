// Copyright 2026 The hpaqc Authors
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
#include <string_view>
#include <vector>

#include "json.hpp"
#include "hpaqc/adiabatic_sim.hpp"
#include "hpaqc/pbf.hpp"
#include "hpaqc/quadratizer.hpp"

namespace hpaqc {

using Json = nlohmann::json;

/// [{"coeff": c, "vars": [...]}, ...] in canonical term order.
Json pbf_to_json(const PseudoBoolean& f);
PseudoBoolean pbf_from_json(const Json& terms);

struct HamiltonianFile {
  int n_vars = 0;
  PseudoBoolean energy;
  Json metadata = Json::object();
};

Json hamiltonian_to_json(const HamiltonianFile& file);
HamiltonianFile hamiltonian_from_json(const Json& doc);

Json ledger_to_json(const std::vector<Substitution>& ledger);
std::vector<Substitution> ledger_from_json(const Json& doc);

struct InstanceSpec {
  std::string sequence;
  int dimension = 2;
};

InstanceSpec instance_from_json(const Json& doc);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump_json(const Json& doc);
Json parse_json(std::string_view text, std::string_view source);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// printf "%.17g".
std::string format_real(double value);

std::string spectrum_csv(const SpectrumTrace<double>& trace);
/// Rows of s followed by 2^n ground-state probabilities.
std::string snapshots_csv(const SpectrumTrace<double>& trace);

}  // namespace hpaqc
