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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hpaqc/adiabatic_sim.hpp"
#include "hpaqc/classical_oracle.hpp"
#include "hpaqc/error.hpp"
#include "hpaqc/hp_hamiltonian.hpp"
#include "hpaqc/lattice_encoding.hpp"
#include "hpaqc/presets.hpp"
#include "hpaqc/quadratizer.hpp"
#include "hpaqc/resource_counter.hpp"
#include "hpaqc/serialization.hpp"

namespace hpaqc::cli {
namespace {

namespace fs = std::filesystem;

// Sequences above this length need --allow-large for a full expansion.
constexpr int kDefaultBuildLimit = 8;

struct Manifest {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> outputs;
};

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string read_input(const std::string& path, Manifest& manifest) {
  std::string text = read_text_file(path);
  manifest.inputs[path] = fnv1a_hex(text);
  return text;
}

void write_output(const std::string& path, const std::string& content, Manifest& manifest) {
  write_text_file(path, content);
  manifest.outputs[path] = fnv1a_hex(content);
}

void write_manifest(const std::string& primary, const Manifest& manifest) {
  Json doc = {{"command", manifest.command},
              {"arguments", manifest.args},
              {"inputs", manifest.inputs},
              {"outputs", manifest.outputs},
              {"version", kVersion},
              {"timestamp", timestamp()}};
  write_text_file(primary + ".manifest.json", dump_json(doc));
}

Json census_json(const PseudoBoolean& f) {
  Json out = Json::array();
  for (const auto& [k, count] : term_census(f)) out.push_back({{"k", k}, {"count", count}});
  return out;
}

struct InstanceArgs {
  std::string sequence;
  std::string instance_file;
  int dimension = 2;
};

void add_instance_options(CLI::App* app, InstanceArgs& args) {
  app->add_option("--sequence", args.sequence, "HP sequence, e.g. HPPH");
  app->add_option("--instance", args.instance_file, "JSON file {sequence, dimension}");
  app->add_option("--dim", args.dimension, "Lattice dimension (2 or 3)");
}

LatticeInstance resolve_instance(const InstanceArgs& args, Manifest& manifest) {
  if (args.sequence.empty() == args.instance_file.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of --sequence or --instance");
  }
  if (!args.instance_file.empty()) {
    const auto spec = instance_from_json(
        parse_json(read_input(args.instance_file, manifest), args.instance_file));
    return LatticeInstance::parse(spec.sequence, spec.dimension);
  }
  return LatticeInstance::parse(args.sequence, args.dimension);
}

struct HamiltonianSource {
  std::string in;
  std::string preset;
};

void add_source_options(CLI::App* app, HamiltonianSource& source) {
  app->add_option("--in", source.in, "Hamiltonian JSON file");
  app->add_option("--preset", source.preset, "Built-in input (toy)");
}

HamiltonianFile resolve_hamiltonian(const HamiltonianSource& source, Manifest& manifest) {
  if (source.in.empty() == source.preset.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of --in or --preset");
  }
  if (!source.preset.empty()) {
    HamiltonianFile file;
    file.energy = load_preset(source.preset);
    file.n_vars = file.energy.max_var();
    file.metadata = {{"preset", source.preset}};
    return file;
  }
  return hamiltonian_from_json(parse_json(read_input(source.in, manifest), source.in));
}

void require_size(const LatticeInstance& instance, bool allow_large) {
  if (instance.length() > kDefaultBuildLimit && !allow_large) {
    throw Error(ErrorKind::kLimitExceeded,
                "N = " + std::to_string(instance.length()) + " exceeds " +
                    std::to_string(kDefaultBuildLimit) + "; pass --allow-large to expand anyway");
  }
}

Json layout_json(const LatticeInstance& instance, const ProteinHamiltonian& built) {
  Json free = Json::array();
  for (int residue : built.free_residues) {
    for (int axis = 1; axis <= instance.dimension(); ++axis) {
      Json vars = Json::array();
      Json original = Json::array();
      for (int bit = 1; bit <= instance.bits_per_axis(); ++bit) {
        const Var v = instance.variable(residue, axis, bit);
        original.push_back(v);
        vars.push_back(built.relabeling.at(v));
      }
      free.push_back({{"residue", residue}, {"axis", axis}, {"vars", vars}, {"original_vars", original}});
    }
  }
  const auto pinned = fixed_bindings(instance);
  const auto [first, second] = instance.fixed_residues();
  Json fixed = Json::array();
  int row = 0;
  for (int residue : {first, second}) {
    std::vector<int> site(pinned.sites.row(row).data(),
                          pinned.sites.row(row).data() + pinned.sites.cols());
    fixed.push_back({{"residue", residue}, {"site", site}});
    ++row;
  }
  return {{"free", free}, {"fixed", fixed}};
}

void echo_layout(const Json& layout, std::ostream& out) {
  for (const auto& entry : layout.at("free")) {
    out << "residue " << entry.at("residue").get<int>() << " axis " << entry.at("axis").get<int>()
        << ":";
    for (const auto& v : entry.at("vars")) out << " q" << v.get<int>();
    out << " (from";
    for (const auto& v : entry.at("original_vars")) out << " q" << v.get<int>();
    out << ")\n";
  }
  for (const auto& entry : layout.at("fixed")) {
    out << "residue " << entry.at("residue").get<int>() << " pinned at (";
    const auto& site = entry.at("site");
    for (std::size_t k = 0; k < site.size(); ++k) out << (k ? "," : "") << site[k].get<int>();
    out << ")\n";
  }
}

// --- build ---------------------------------------------------------------

struct BuildArgs {
  InstanceArgs instance;
  std::string preset;
  std::optional<Coeff> lambda0;
  std::optional<Coeff> lambda1;
  bool allow_large = false;
  std::string out;
};

void run_build(const BuildArgs& args, Manifest& manifest, std::ostream& out) {
  HamiltonianFile file;
  if (!args.preset.empty()) {
    if (!args.instance.sequence.empty() || !args.instance.instance_file.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "--preset cannot be combined with an instance");
    }
    file.energy = load_preset(args.preset);
    file.n_vars = file.energy.max_var();
    file.metadata = {{"preset", args.preset},
                     {"degree", degree(file.energy)},
                     {"census", census_json(file.energy)}};
  } else {
    const auto instance = resolve_instance(args.instance, manifest);
    require_size(instance, args.allow_large);
    auto weights = PenaltyWeights::defaults(instance.length());
    if (args.lambda0) weights.lambda0 = *args.lambda0;
    if (args.lambda1) weights.lambda1 = *args.lambda1;
    weights.validate();
    const auto built =
        build_protein(instance, weights, ContactMatrix::from_sequence(instance.sequence()));
    const Json layout = layout_json(instance, built);
    file.energy = built.energy;
    file.n_vars = instance.free_vars();
    file.metadata = {{"sequence", sequence_to_string(instance.sequence())},
                     {"dimension", instance.dimension()},
                     {"lambda0", weights.lambda0},
                     {"lambda1", weights.lambda1},
                     {"degree", degree(built.energy)},
                     {"census", census_json(built.energy)},
                     {"layout", layout},
                     {"blocks", built.blocks}};
    echo_layout(layout, out);
  }
  write_output(args.out, dump_json(hamiltonian_to_json(file)), manifest);
  out << "wrote " << args.out << " (" << file.n_vars << " variables, " << file.energy.size()
      << " terms)\n";
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
  HamiltonianSource source;
  std::optional<Coeff> delta;
  std::string out;
  std::string ledger;
  bool verify = false;
};

Json report_json(const ReductionReport& report) {
  Json doc = {{"passed", report.passed},
              {"exhaustive", report.exhaustive},
              {"checked_states", report.checked_states},
              {"consistent_match", report.consistent_match},
              {"minimum_preserved", report.minimum_preserved},
              {"multiset_match", report.multiset_match},
              {"min_original", report.min_original},
              {"max_original", report.max_original}};
  doc["min_penalized"] = report.min_penalized ? Json(*report.min_penalized) : Json(nullptr);
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    doc["counterexample"] = {{"original", c.original}, {"extended", c.extended},
                             {"expected", c.expected}, {"actual", c.actual}, {"reason", c.reason}};
  }
  return doc;
}

void run_reduce(const ReduceArgs& args, Manifest& manifest, std::ostream& out) {
  const HamiltonianFile input = resolve_hamiltonian(args.source, manifest);
  QuadratizeOptions options;
  options.delta = args.delta;
  options.original_vars = input.n_vars;
  if (input.metadata.contains("blocks")) {
    options.blocks = input.metadata.at("blocks").get<std::vector<std::vector<Var>>>();
  }
  const auto result = quadratize(input.energy, options);

  HamiltonianFile file;
  file.energy = result.reduced;
  file.n_vars = result.total_vars;
  file.metadata = {{"delta", result.delta},
                   {"original_vars", result.original_vars},
                   {"ancillas", result.total_vars - result.original_vars},
                   {"substitutions", ledger_to_json(result.substitutions)},
                   {"degree", degree(result.reduced)},
                   {"census", census_json(result.reduced)}};
  if (args.verify) {
    const auto report = verify_reduction(input.energy, result);
    file.metadata["verification"] = report_json(report);
    if (!report.passed) {
      throw Error(ErrorKind::kVerification,
                  "reduced function does not preserve the original spectrum: " +
                      report_json(report).dump());
    }
  }
  write_output(args.out, dump_json(hamiltonian_to_json(file)), manifest);
  if (!args.ledger.empty()) {
    write_output(args.ledger, dump_json(ledger_to_json(result.substitutions)), manifest);
  }
  out << "wrote " << args.out << " (delta " << result.delta << ", "
      << result.total_vars - result.original_vars << " ancillas, " << result.reduced.size()
      << " terms)\n";
}

// --- spectrum ------------------------------------------------------------

struct SpectrumArgs {
  HamiltonianSource source;
  int points = 101;
  int levels = 15;
  std::string solver = "eigen";
  std::string out;
  std::string snapshots;
  std::string summary;
};

Json nullable(double value) { return std::isnan(value) ? Json(nullptr) : Json(value); }

void run_spectrum(const SpectrumArgs& args, Manifest& manifest, std::ostream& out) {
  const HamiltonianFile input = resolve_hamiltonian(args.source, manifest);
  const auto h = to_spin_hamiltonian<double>(input.energy, input.n_vars);
  SpectrumOptions options;
  options.s_points = args.points;
  options.levels = args.levels;
  options.snapshots = !args.snapshots.empty();
  options.solver = args.solver == "jacobi" ? EigenSolverKind::kJacobi : EigenSolverKind::kEigen;
  const auto trace = spectrum_trace(h, options);

  write_output(args.out, spectrum_csv(trace), manifest);
  if (options.snapshots) write_output(args.snapshots, snapshots_csv(trace), manifest);
  if (!args.summary.empty()) {
    Json degenerate = Json::array();
    for (std::size_t k = 0; k < trace.s_grid.size(); ++k) {
      if (trace.degenerate_at(k)) {
        degenerate.push_back({{"s", trace.s_grid[k]}, {"multiplicity", trace.ground_degeneracy[k]}});
      }
    }
    auto s_at = [&](Eigen::Index i) {
      return i < 0 ? Json(nullptr) : Json(trace.s_grid[static_cast<std::size_t>(i)]);
    };
    Json doc = {{"n_qubits", h.n_qubits()},
                {"points", args.points},
                {"levels", args.levels},
                {"g_min", nullable(trace.g_min)},
                {"s_at_g_min", s_at(trace.g_min_index)},
                {"g_min_interior", nullable(trace.g_min_interior)},
                {"s_at_g_min_interior", s_at(trace.g_min_interior_index)},
                {"epsilon", nullable(trace.epsilon)},
                {"degenerate_ground", degenerate}};
    write_output(args.summary, dump_json(doc), manifest);
  }
  out << "wrote " << args.out << " (" << args.points << " points, " << args.levels
      << " levels); g_min over (0,1) = " << format_real(trace.g_min_interior) << "\n";
}

// --- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  InstanceArgs instance;
  bool long_run = false;
  bool no_symmetry = false;
  bool no_prune = false;
  std::string out;
};

void run_enumerate(const EnumerateArgs& args, Manifest& manifest, std::ostream& out) {
  std::vector<Residue> sequence;
  int dimension = args.instance.dimension;
  if (args.instance.sequence.empty() == args.instance.instance_file.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of --sequence or --instance");
  }
  if (!args.instance.instance_file.empty()) {
    const auto spec = instance_from_json(parse_json(
        read_input(args.instance.instance_file, manifest), args.instance.instance_file));
    sequence = parse_sequence(spec.sequence);
    dimension = spec.dimension;
  } else {
    sequence = parse_sequence(args.instance.sequence);
  }
  EnumerateOptions options;
  options.long_run = args.long_run;
  options.use_symmetry = !args.no_symmetry;
  options.prune = !args.no_prune;
  const auto result = enumerate_native(sequence, dimension, options);

  Json witness = Json::array();
  for (Eigen::Index i = 0; i < result.witness.rows(); ++i) {
    std::vector<int> row(result.witness.row(i).data(),
                         result.witness.row(i).data() + result.witness.cols());
    witness.push_back(row);
  }
  Json doc = {{"sequence", sequence_to_string(sequence)},
              {"dimension", dimension},
              {"min_energy", result.min_energy},
              {"degeneracy", result.degeneracy},
              {"witness", witness}};
  write_output(args.out, dump_json(doc), manifest);
  out << "min energy " << result.min_energy << " with " << result.degeneracy << " walks ("
      << result.nodes_visited << " nodes visited)\n";
}

// --- count ---------------------------------------------------------------

struct CountArgs {
  InstanceArgs instance;
  bool quadratize = false;
  bool allow_large = false;
  std::string out;
};

Json monomials_json(const std::vector<Monomial>& list) {
  Json out = Json::array();
  for (const auto& m : list) out.push_back(m);
  return out;
}

void run_count(const CountArgs& args, Manifest& manifest, std::ostream& out) {
  const auto instance = resolve_instance(args.instance, manifest);
  Json doc = {{"sequence", sequence_to_string(instance.sequence())},
              {"dimension", instance.dimension()}};
  const auto bounds = table1_counts(instance.length(), instance.dimension());
  const std::int64_t ancillas = count_ancillas_protein(instance.length(), instance.dimension());
  doc["free_qubits"] = instance.free_vars();
  doc["ancilla_qubits"] = ancillas;
  doc["total_qubits"] = total_qubits_2local(instance.length(), instance.dimension());

  const bool expand = instance.length() <= kDefaultBuildLimit || args.allow_large;
  Json localities = Json::array();
  if (expand) {
    ResourceOptions options;
    options.run_quadratizer = args.quadratize;
    const auto report = resource_report(instance, options);
    for (const auto& [k, bound] : report.per_locality_bound) {
      localities.push_back({{"k", k}, {"bound", bound}, {"actual", report.per_locality_actual.at(k)}});
    }
    Json deviations = Json::array();
    for (const auto& d : report.deviations) {
      deviations.push_back({{"k", d.k},
                            {"bound", d.bound},
                            {"actual", d.actual},
                            {"missing", monomials_json(d.missing)},
                            {"unexpected", monomials_json(d.unexpected)}});
    }
    doc["within_bound"] = report.within_bound();
    doc["deviations"] = deviations;
    if (report.empirical_ancillas) doc["empirical_ancillas"] = *report.empirical_ancillas;
  } else {
    for (const auto& [k, bound] : bounds) localities.push_back({{"k", k}, {"bound", bound}});
  }
  doc["localities"] = localities;
  write_output(args.out, dump_json(doc), manifest);
  out << "total 2-local qubits " << doc["total_qubits"].get<std::int64_t>() << " ("
      << instance.free_vars() << " free + " << ancillas << " ancilla)\n";
}

void emit_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice protein to adiabatic spectrum toolkit", "hpaqc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Expand an HP instance into a pseudo-Boolean energy");
  add_instance_options(build_cmd, build.instance);
  build_cmd->add_option("--preset", build.preset, "Built-in input (toy)");
  build_cmd->add_option("--lambda0", build.lambda0, "Overlap penalty weight (lambda0 > lambda1)");
  build_cmd->add_option("--lambda1", build.lambda1, "Chain-connectivity penalty weight");
  build_cmd->add_flag("--allow-large", build.allow_large, "Permit N > 8");
  build_cmd->add_option("--out", build.out, "Output Hamiltonian JSON")->required();

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Quadratize to a 2-local energy");
  add_source_options(reduce_cmd, reduce.source);
  reduce_cmd->add_option("--delta", reduce.delta, "Penalty weight for the AND gadgets");
  reduce_cmd->add_option("--out", reduce.out, "Output Hamiltonian JSON")->required();
  reduce_cmd->add_option("--ledger", reduce.ledger, "Output substitution ledger JSON");
  reduce_cmd->add_flag("--verify", reduce.verify, "Check that the low-lying spectrum is kept");

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Instantaneous spectrum along the sweep");
  add_source_options(spectrum_cmd, spectrum.source);
  spectrum_cmd->add_option("--points", spectrum.points, "Number of s grid points");
  spectrum_cmd->add_option("--levels", spectrum.levels, "Eigenvalues kept per point");
  spectrum_cmd->add_option("--solver", spectrum.solver, "eigen or jacobi")
      ->check(CLI::IsMember({"eigen", "jacobi"}));
  spectrum_cmd->add_option("--out", spectrum.out, "Output eigenvalue CSV")->required();
  spectrum_cmd->add_option("--snapshots", spectrum.snapshots, "Output ground-state CSV");
  spectrum_cmd->add_option("--summary", spectrum.summary, "Output gap summary JSON");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exact minimum over self-avoiding walks");
  add_instance_options(enumerate_cmd, enumerate.instance);
  enumerate_cmd->add_flag("--long-run", enumerate.long_run, "Allow sequences up to 24");
  enumerate_cmd->add_flag("--no-symmetry", enumerate.no_symmetry, "Disable symmetry reduction");
  enumerate_cmd->add_flag("--no-prune", enumerate.no_prune, "Disable bound pruning");
  enumerate_cmd->add_option("--out", enumerate.out, "Output result JSON")->required();

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Term counts and qubit resources");
  add_instance_options(count_cmd, count.instance);
  count_cmd->add_flag("--quadratize", count.quadratize, "Also count ancillas empirically");
  count_cmd->add_flag("--allow-large", count.allow_large, "Expand even when N > 8");
  count_cmd->add_option("--out", count.out, "Output report JSON")->required();

  std::vector<const char*> argv{"hpaqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::Success&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return 2;
  }

  Manifest manifest;
  manifest.args = args;
  try {
    if (build_cmd->parsed()) {
      manifest.command = "build";
      run_build(build, manifest, out);
      write_manifest(build.out, manifest);
    } else if (reduce_cmd->parsed()) {
      manifest.command = "reduce";
      run_reduce(reduce, manifest, out);
      write_manifest(reduce.out, manifest);
    } else if (spectrum_cmd->parsed()) {
      manifest.command = "spectrum";
      run_spectrum(spectrum, manifest, out);
      write_manifest(spectrum.out, manifest);
    } else if (enumerate_cmd->parsed()) {
      manifest.command = "enumerate";
      run_enumerate(enumerate, manifest, out);
      write_manifest(enumerate.out, manifest);
    } else {
      manifest.command = "count";
      run_count(count, manifest, out);
      write_manifest(count.out, manifest);
    }
  } catch (const Error& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return 2;
  } catch (const Json::exception& e) {
    emit_error(err, "parse", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
    return 2;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hpaqc::cli
