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

#include "hpaqc/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hpaqc/error.hpp"
#include "hpaqc/presets.hpp"

namespace hpaqc {
namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}

const Json& require(const Json& doc, const char* key, const char* where) {
  if (!doc.is_object() || !doc.contains(key)) {
    parse_error(std::string(where) + ": missing field '" + key + "'");
  }
  return doc.at(key);
}

std::int64_t require_integer(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) parse_error(what + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

PseudoBoolean load_preset(std::string_view name) {
  if (name == "toy") return toy_hamiltonian();
  throw Error(ErrorKind::kInvalidArgument, "unknown preset '" + std::string(name) + "'");
}

Json pbf_to_json(const PseudoBoolean& f) {
  Json terms = Json::array();
  for (const auto& [vars, coeff] : f.terms()) {
    terms.push_back({{"coeff", coeff}, {"vars", vars}});
  }
  return terms;
}

PseudoBoolean pbf_from_json(const Json& terms) {
  if (!terms.is_array()) parse_error("polynomial must be a list of terms");
  PseudoBoolean f;
  for (const auto& term : terms) {
    const Coeff coeff = require_integer(require(term, "coeff", "term"), "coeff");
    const Json& vars = require(term, "vars", "term");
    if (!vars.is_array()) parse_error("vars must be a list");
    Monomial m;
    for (const auto& v : vars) {
      const auto index = require_integer(v, "variable index");
      if (index < 1 || index > std::numeric_limits<Var>::max()) {
        parse_error("variable index " + std::to_string(index) + " out of range");
      }
      m.push_back(static_cast<Var>(index));
    }
    f += PseudoBoolean::term(std::move(m), coeff);
  }
  return f;
}

Json hamiltonian_to_json(const HamiltonianFile& file) {
  return {{"n_vars", file.n_vars}, {"terms", pbf_to_json(file.energy)}, {"metadata", file.metadata}};
}

HamiltonianFile hamiltonian_from_json(const Json& doc) {
  HamiltonianFile file;
  file.energy = pbf_from_json(require(doc, "terms", "hamiltonian"));
  if (doc.contains("n_vars")) {
    file.n_vars = static_cast<int>(require_integer(doc.at("n_vars"), "n_vars"));
  } else {
    file.n_vars = file.energy.max_var();
  }
  if (file.n_vars < file.energy.max_var()) {
    parse_error("n_vars = " + std::to_string(file.n_vars) + " but q" +
                std::to_string(file.energy.max_var()) + " appears");
  }
  if (doc.contains("metadata")) file.metadata = doc.at("metadata");
  return file;
}

Json ledger_to_json(const std::vector<Substitution>& ledger) {
  Json out = Json::array();
  for (const auto& sub : ledger) out.push_back({{"a", sub.a}, {"b", sub.b}, {"ancilla", sub.ancilla}});
  return out;
}

std::vector<Substitution> ledger_from_json(const Json& doc) {
  if (!doc.is_array()) parse_error("ledger must be a list");
  std::vector<Substitution> ledger;
  for (const auto& entry : doc) {
    ledger.push_back({static_cast<Var>(require_integer(require(entry, "a", "ledger"), "a")),
                      static_cast<Var>(require_integer(require(entry, "b", "ledger"), "b")),
                      static_cast<Var>(require_integer(require(entry, "ancilla", "ledger"), "ancilla"))});
  }
  return ledger;
}

InstanceSpec instance_from_json(const Json& doc) {
  InstanceSpec spec;
  const Json& seq = require(doc, "sequence", "instance");
  if (!seq.is_string()) parse_error("sequence must be a string");
  spec.sequence = seq.get<std::string>();
  spec.dimension = static_cast<int>(require_integer(require(doc, "dimension", "instance"), "dimension"));
  return spec;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string(source) + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path.string() + "'");
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string spectrum_csv(const SpectrumTrace<double>& trace) {
  std::string out = "s";
  for (Eigen::Index j = 0; j < trace.eigenvalues.cols(); ++j) out += ",E" + std::to_string(j);
  out += '\n';
  for (std::size_t k = 0; k < trace.s_grid.size(); ++k) {
    out += format_real(trace.s_grid[k]);
    for (Eigen::Index j = 0; j < trace.eigenvalues.cols(); ++j) {
      out += ',' + format_real(trace.eigenvalues(static_cast<Eigen::Index>(k), j));
    }
    out += '\n';
  }
  return out;
}

std::string snapshots_csv(const SpectrumTrace<double>& trace) {
  if (trace.snapshots.empty()) return {};
  std::string out = "s";
  for (Eigen::Index b = 0; b < trace.snapshots.front().size(); ++b) out += ",p" + std::to_string(b);
  out += '\n';
  for (std::size_t k = 0; k < trace.s_grid.size(); ++k) {
    out += format_real(trace.s_grid[k]);
    for (Eigen::Index b = 0; b < trace.snapshots[k].size(); ++b) {
      out += ',' + format_real(trace.snapshots[k](b));
    }
    out += '\n';
  }
  return out;
}

}  // namespace hpaqc
