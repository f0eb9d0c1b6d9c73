// Command-line front end: sample potentials, synthesize encoding circuits,
// reconstruct, and score fidelity.

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "potevo/io.hpp"
#include "potevo/potential.hpp"
#include "potevo/recon.hpp"
#include "potevo/sim.hpp"
#include "potevo/synth_hadamard.hpp"
#include "potevo/synth_poly.hpp"
#include "potevo/walsh.hpp"

namespace {

using nlohmann::json;
using namespace potevo;

struct ModelOptions {
  std::string model = "nai";
  double a1 = 0.0299;
  double a2 = 2.163;
  double r1 = 5.102;
  std::string file;  // tabulated CSV
  int n = 4;
  double x_min = 0.0;
  double x_max = 10.0;
};

struct EncodeOptions {
  std::string method = "hadamard";
  int order = 2;
  std::string ordering = "natural";
  bool optimize = false;
  double t = 1.0;
  int ccp_count = -1;  // partial third order when >= 0
  std::string ccp_select = "prefix";
};

void add_model_flags(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--model", opts.model, "Potential model: nai|shifted-exp|decay-exp|tabulated")
      ->check(CLI::IsMember({"nai", "shifted-exp", "decay-exp", "tabulated"}));
  cmd->add_option("--a1", opts.a1, "NaI wall amplitude");
  cmd->add_option("--a2", opts.a2, "NaI wall inverse length");
  cmd->add_option("--r1", opts.r1, "NaI wall offset");
  cmd->add_option("--file", opts.file, "CSV file for the tabulated model");
  cmd->add_option("--n", opts.n, "Qubit count");
  cmd->add_option("--xmin", opts.x_min, "Lower coordinate bound");
  cmd->add_option("--xmax", opts.x_max, "Upper coordinate bound (excluded from the lattice)");
}

void add_encode_flags(CLI::App* cmd, EncodeOptions& opts) {
  cmd->add_option("--method", opts.method, "hadamard|poly")
      ->check(CLI::IsMember({"hadamard", "poly"}));
  cmd->add_option("--order", opts.order, "Polynomial order r (poly method)");
  cmd->add_option("--ordering", opts.ordering, "Z-mask ordering: natural|gray")
      ->check(CLI::IsMember({"natural", "gray"}));
  cmd->add_flag("--optimize", opts.optimize, "Run adjacent-CNOT cancellation");
  cmd->add_option("--t", opts.t, "Evolution time");
  cmd->add_option("--ccp", opts.ccp_count, "Restrict third order to this many CCp subsets");
  cmd->add_option("--ccp-select", opts.ccp_select, "Partial CCp selection: prefix|greedy")
      ->check(CLI::IsMember({"prefix", "greedy"}));
}

PotentialGrid make_grid(const ModelOptions& opts) {
  if (opts.model == "tabulated") {
    if (opts.file.empty()) throw std::invalid_argument("tabulated model needs --file");
    return grid_from_csv(read_file(opts.file));
  }
  PotentialModel model = ShiftedExp{};
  if (opts.model == "nai") model = RittnerExp{opts.a1, opts.a2, opts.r1};
  else if (opts.model == "decay-exp") model = DecayExp{};
  return sample_model(model, opts.n, opts.x_min, opts.x_max);
}

struct EncodeResult {
  Circuit circuit;
  json report;
};

EncodeResult encode_grid(const PotentialGrid& grid, const EncodeOptions& opts) {
  EncodeResult result;
  result.report["method"] = opts.method;
  result.report["n"] = grid.n;
  result.report["t"] = opts.t;

  if (opts.method == "hadamard") {
    const WalshSpectrum spectrum = analyze<double>(grid.values);
    const MaskOrdering ordering =
        opts.ordering == "gray" ? MaskOrdering::GrayCode : MaskOrdering::Natural;
    result.circuit = synthesize_exact(spectrum, opts.t, ordering);
    if (opts.optimize) result.circuit = cancel_adjacent_cnots(result.circuit);
    result.report["ordering"] = opts.ordering;
    result.report["cnot_bound"] = cnot_count_bound(grid.n);
    result.report["rz_expected"] = (std::uint64_t{1} << grid.n) - 1;
  } else {
    if (opts.order > grid.n) throw std::invalid_argument("order exceeds qubit count");
    if (opts.order > 3 && opts.ccp_count < 0)
      throw std::invalid_argument("orders above 3 have no native phase gate");
    IncidenceSystem sys;
    if (opts.ccp_count >= 0) {
      const auto ccp = opts.ccp_select == "greedy"
                           ? ccp_greedy_subsets(grid.n, opts.ccp_count, grid, opts.t)
                           : ccp_prefix_subsets(grid.n, opts.ccp_count);
      sys = build_incidence_with_ccp(grid.n, ccp);
    } else {
      sys = build_incidence(grid.n, opts.order);
    }
    const FitResult fit = solve_least_squares(sys, grid, opts.t);
    result.circuit = synthesize_poly(fit, sys);
    result.report["order"] = opts.order;
    result.report["parameters_K"] = sys.parameter_count();
    result.report["gate_complexity"] = gate_complexity(grid.n, std::min(opts.order, grid.n));
    result.report["fit"] = fit_to_json(fit, sys);
  }

  const GateCounts counts = count_gates(result.circuit);
  result.report["gate_counts"] = {
      {"global_phase", counts.global_phase}, {"rz", counts.rz},       {"cnot", counts.cnot},
      {"phase", counts.phase},               {"cphase", counts.cphase}, {"ccphase", counts.ccphase},
      {"total", counts.total}};

  // Verify the synthesized diagonal against direct exponentiation.
  const DiagonalUnitary diag = circuit_diagonal(result.circuit);
  double max_err = 0.0;
  for (Eigen::Index k = 0; k < diag.entries.size(); ++k) {
    const std::complex<double> target =
        std::polar(1.0, -grid.values[k] * opts.t);
    max_err = std::max(max_err, std::abs(diag.entries[k] - target));
  }
  result.report["diagonal_max_error"] = max_err;
  result.report["verified"] =
      opts.method == "hadamard" ? max_err < 1e-10 : true;
  return result;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POTEVO_SEED")) return std::strtoull(env, nullptr, 10);
  return 12345;
}

int cmd_sample(const ModelOptions& model, const std::string& csv_path,
               const std::string& json_path) {
  const PotentialGrid grid = make_grid(model);
  if (!csv_path.empty()) write_file(csv_path, grid_to_csv(grid));
  if (!json_path.empty()) write_file(json_path, grid_to_json(grid).dump(2) + "\n");
  json summary = {{"n", grid.n},
                  {"dx", grid.dx},
                  {"v_min", grid.values.minCoeff()},
                  {"v_max", grid.values.maxCoeff()}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_encode(const ModelOptions& model, const EncodeOptions& encode,
               const std::string& circuit_path, const std::string& qasm_path,
               const std::string& report_path) {
  const PotentialGrid grid = make_grid(model);
  EncodeResult result = encode_grid(grid, encode);
  if (!circuit_path.empty()) write_file(circuit_path, circuit_to_json(result.circuit).dump(2) + "\n");
  if (!qasm_path.empty()) write_file(qasm_path, export_qasm(result.circuit));
  if (!report_path.empty()) write_file(report_path, result.report.dump(2) + "\n");
  std::cout << result.report.dump(2) << "\n";
  return result.report["verified"].get<bool>() ? 0 : 1;
}

int cmd_reconstruct(const ModelOptions& model, const EncodeOptions& encode,
                    const std::string& out_path, const std::string& report_path) {
  const PotentialGrid grid = make_grid(model);
  EncodeResult result = encode_grid(grid, encode);
  const DiagonalUnitary diag = circuit_diagonal(result.circuit);
  const Reconstruction rec = reconstruct_potential(diag, encode.t);
  const ErrorSummary errors = compare(grid, rec.values);
  if (!out_path.empty()) write_file(out_path, reconstruction_to_csv(grid, rec));
  json report = {{"method", encode.method},
                 {"n", grid.n},
                 {"t", encode.t},
                 {"max_abs_error", errors.max_abs_error},
                 {"rmse", errors.rmse},
                 {"wrapped_points",
                  static_cast<std::uint64_t>(
                      std::count(rec.wrap_flags.begin(), rec.wrap_flags.end(), true))}};
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_fidelity(const ModelOptions& model, const EncodeOptions& encode, std::uint64_t shots,
                 std::uint64_t seed, const NoiseModel& noise, std::uint64_t trajectories,
                 const std::string& report_path) {
  if (shots == 0) throw std::invalid_argument("shot count must be >= 1");
  const PotentialGrid grid = make_grid(model);
  EncodeResult result = encode_grid(grid, encode);

  const StateVector initial = StateVector::basis(grid.n, 0);
  const StateVector evolved = evolve(initial, result.circuit);
  const SwapTestResult swap = swap_test(initial, evolved, shots, seed);

  json report;
  report["method"] = encode.method;
  report["n"] = grid.n;
  report["fidelity_exact"] = fidelity_exact(initial, evolved);
  report["swap_test"] = {{"estimate", swap.estimate},
                         {"std_error", swap.std_error},
                         {"shots", swap.shots}};
  if (noise.p1 > 0.0 || noise.p2 > 0.0 || noise.p3 > 0.0) {
    const NoisyFidelity noisy = evolve_noisy(initial, result.circuit, noise, trajectories);
    report["noisy"] = {{"mean_fidelity", noisy.mean_fidelity},
                       {"std_error", noisy.std_error},
                       {"trajectories", noisy.trajectories},
                       {"p1", noise.p1},
                       {"p2", noise.p2},
                       {"p3", noise.p3}};
  }
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_gatecount_sweep(int n_min, int n_max, int order, const std::string& out_path) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad sweep range");
  std::string csv = "n,hadamard_rz,hadamard_cnot,hadamard_total,poly_total\n";
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint64_t rz = (std::uint64_t{1} << n) - 1;
    const std::uint64_t cnot = cnot_count_bound(n);
    const std::uint64_t poly = gate_complexity(n, std::min(order, n));
    csv += std::to_string(n) + "," + std::to_string(rz) + "," + std::to_string(cnot) + "," +
           std::to_string(rz + cnot) + "," + std::to_string(poly) + "\n";
  }
  if (!out_path.empty()) write_file(out_path, csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal time-evolution encoding of 1-D potentials"};
  app.require_subcommand(1);

  ModelOptions model;
  EncodeOptions encode;
  std::string csv_path, json_path, circuit_path, qasm_path, report_path, out_path;
  std::uint64_t shots = 10000;
  std::uint64_t seed = default_seed();
  std::uint64_t trajectories = 1000;
  NoiseModel noise;
  int n_min = 2, n_max = 10;

  CLI::App* sample = app.add_subcommand("sample", "Sample a potential onto a 2^n lattice");
  add_model_flags(sample, model);
  sample->add_option("--csv", csv_path, "Output grid CSV path");
  sample->add_option("--json", json_path, "Output grid JSON path");

  CLI::App* enc = app.add_subcommand("encode", "Synthesize an encoding circuit");
  add_model_flags(enc, model);
  add_encode_flags(enc, encode);
  enc->add_option("--circuit", circuit_path, "Output circuit JSON path");
  enc->add_option("--qasm", qasm_path, "Output OpenQASM 2.0 path");
  enc->add_option("--report", report_path, "Output report JSON path");

  CLI::App* rec = app.add_subcommand("reconstruct", "Encode, simulate and recover the potential");
  add_model_flags(rec, model);
  add_encode_flags(rec, encode);
  rec->add_option("--out", out_path, "Output reconstruction CSV path");
  rec->add_option("--report", report_path, "Output error summary JSON path");

  CLI::App* fid = app.add_subcommand("fidelity", "Swap-test fidelity of the evolved state");
  add_model_flags(fid, model);
  add_encode_flags(fid, encode);
  fid->add_option("--shots", shots, "Swap-test shots");
  fid->add_option("--seed", seed, "RNG seed (default from POTEVO_SEED)");
  fid->add_option("--p1", noise.p1, "Depolarizing probability per 1-qubit gate");
  fid->add_option("--p2", noise.p2, "Depolarizing probability per 2-qubit gate");
  fid->add_option("--p3", noise.p3, "Depolarizing probability per 3-qubit gate");
  fid->add_option("--trajectories", trajectories, "Noise trajectories");
  fid->add_option("--report", report_path, "Output fidelity JSON path");

  CLI::App* sweep = app.add_subcommand("gatecount-sweep", "Gate counts vs qubit count");
  sweep->add_option("--nmin", n_min, "Smallest qubit count");
  sweep->add_option("--nmax", n_max, "Largest qubit count");
  sweep->add_option("--order", encode.order, "Polynomial order for the poly column");
  sweep->add_option("--out", out_path, "Output CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(model, csv_path, json_path);
    if (enc->parsed()) return cmd_encode(model, encode, circuit_path, qasm_path, report_path);
    if (rec->parsed()) return cmd_reconstruct(model, encode, out_path, report_path);
    if (fid->parsed()) {
      noise.seed = seed;
      return cmd_fidelity(model, encode, shots, seed, noise, trajectories, report_path);
    }
    if (sweep->parsed()) return cmd_gatecount_sweep(n_min, n_max, encode.order, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
