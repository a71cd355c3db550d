// Copyright 2026 The stirap-chain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stirap/cli.hpp"

#include <filesystem>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "stirap/report_io.hpp"
#include "stirap/verify.hpp"

namespace stirap::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct RunConfig {
  std::vector<std::string> circuit_paths;
  std::string corpus_dir;
  double J = 1.0;
  double M = 10.0;
  double s = 0.5;
  int s_grid = 0;
  std::vector<int> n_list = {2, 4, 6, 8, 10, 12};
  std::vector<double> T_list = {10, 30, 100, 300, 1000};
  std::string output_dir = ".";
  std::uint64_t seed = 1;
  bool force = false;
  Index register_basis = 0;
  std::string family = "identity";
  int register_width = 1;
  std::string schedule = "linear";
  double zero_tol = 0.0;  // 0 selects 1e-6 * max(J, M)
  double residual_tol = 1e-10;
  double max_phase = 0.1;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool circuit_required) {
  auto* c = cmd->add_option("--circuit", cfg.circuit_paths, "circuit file")->check(CLI::ExistingFile);
  if (circuit_required) c->required()->expected(1);
  cmd->add_option("--J", cfg.J, "boundary coupling")->capture_default_str();
  cmd->add_option("--M", cfg.M, "internal coupling")->capture_default_str();
  cmd->add_option("--out", cfg.output_dir, "output directory")->capture_default_str();
  cmd->add_flag("--force", cfg.force, "overwrite existing outputs");
}

double zero_tol(const RunConfig& cfg) {
  return cfg.zero_tol > 0 ? cfg.zero_tol : 1e-6 * std::max(cfg.J, cfg.M);
}

PointerModel load_model(const RunConfig& cfg, std::ostream& err) {
  PointerModel model(load_circuit(cfg.circuit_paths.front()), cfg.J, cfg.M);
  if (auto w = model.warning()) err << "warning: " << *w << "\n";
  return model;
}

std::vector<double> s_values(const RunConfig& cfg) {
  if (cfg.s_grid > 0) return uniform_grid(cfg.s_grid);
  return {cfg.s};
}

fs::path out_path(const RunConfig& cfg, const char* name) { return fs::path(cfg.output_dir) / name; }

/// Refuses up front so that a multi-file command never writes half its outputs.
void check_outputs(const RunConfig& cfg, std::initializer_list<const char*> names) {
  if (cfg.force) return;
  for (const char* n : names) {
    if (fs::exists(out_path(cfg, n))) {
      throw io::OutputExists(fmt::format("{} exists; pass --force to overwrite", out_path(cfg, n).string()));
    }
  }
}

int cmd_darkstate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_outputs(cfg, {"darkstate.json"});
  const PointerModel model = load_model(cfg, err);
  const CVector phi = register_basis_state(model, cfg.register_basis);
  const PointerState v = analytic_dark_state(model, cfg.s, phi);
  const CMatrix h = model.dense(cfg.s);
  const double residual = (h * v.amplitudes).norm() / v.norm();
  const double tolerance = cfg.residual_tol * std::max(cfg.J, cfg.M);

  const SpectrumResult eig = eigendecompose(h, zero_tol(cfg));
  const CVector unit = v.amplitudes / v.norm();
  const double deficit = 1.0 - (eig.zero_space.adjoint() * unit).squaredNorm();
  const bool dim_ok = eig.zero_space.cols() == model.register_dim();
  const bool match = dim_ok && deficit < 1e-9;

  json amps = json::array();
  for (Index i = 0; i < v.amplitudes.size(); ++i) amps.push_back({v.amplitudes(i).real(), v.amplitudes(i).imag()});
  json j;
  j["n"] = model.gate_count();
  j["register_width"] = model.circuit().register_width();
  j["J"] = cfg.J;
  j["M"] = cfg.M;
  j["s"] = cfg.s;
  j["register_basis"] = cfg.register_basis;
  j["amplitudes"] = std::move(amps);
  j["populations"] = site_populations(v);
  j["kernel_residual"] = residual;
  j["residual_tolerance"] = tolerance;
  j["zero_space_dimension"] = eig.zero_space.cols();
  j["zero_space_overlap_deficit"] = deficit;
  j["zero_space_match"] = match;
  io::write_file(out_path(cfg, "darkstate.json"), j.dump(2) + "\n", cfg.force);

  out << fmt::format("kernel residual {:.3e} (tolerance {:.1e}), zero space dim {}, overlap deficit {:.3e}\n",
                     residual, tolerance, eig.zero_space.cols(), deficit);
  out << "populations:";
  for (double p : site_populations(v)) out << fmt::format(" {:.6f}", p);
  out << "\n";
  if (residual > tolerance || !match) {
    err << "invariant violation: dark state is not in the computed zero space\n";
    return 2;
  }
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_outputs(cfg, {"spectrum.csv"});
  const PointerModel model = load_model(cfg, err);
  std::vector<std::pair<double, RVector>> spectra;
  for (double s : s_values(cfg)) {
    const SpectrumResult eig = eigendecompose(model.dense(s), zero_tol(cfg));
    out << fmt::format("s={:.4f} zero-space dim {} gap {:.12g}\n", s, eig.zero_space.cols(), eig.gap);
    spectra.emplace_back(s, eig.eigenvalues);
  }
  io::write_file(out_path(cfg, "spectrum.csv"), io::spectrum_csv(spectra), cfg.force);
  return 0;
}

int cmd_gapscan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_outputs(cfg, {"gaps.csv", "gapfit.json"});
  CircuitFamily family;
  if (cfg.family == "identity") {
    family = [w = cfg.register_width](int n) { return identity_circuit(n, w); };
  } else {
    family = [w = cfg.register_width, seed = cfg.seed](int n) { return random_rotation_circuit(n, w, seed); };
  }
  GapScanOptions opt;
  opt.J = cfg.J;
  opt.M = cfg.M;
  opt.s_grid = uniform_grid(cfg.s_grid > 0 ? cfg.s_grid : 101);
  opt.zero_tol = zero_tol(cfg);
  const GapScanResult scan = gap_scan(family, cfg.n_list, opt);

  json fit = io::gap_fit_json(scan);
  fit["family"] = cfg.family;
  fit["J"] = cfg.J;
  fit["M"] = cfg.M;
  fit["reference_alpha"] = -1.0;
  fit["within_reference_band"] = std::abs(scan.alpha + 1.0) <= 0.3;
  io::write_file(out_path(cfg, "gaps.csv"), io::gaps_csv(scan), cfg.force);
  io::write_file(out_path(cfg, "gapfit.json"), fit.dump(2) + "\n", cfg.force);

  for (const auto& r : scan.rows) out << fmt::format("n={:3d} min gap {:.12g} at s={:.2f}\n", r.n, r.min_gap, r.argmin_s);
  out << fmt::format("fit: gap ~ {:.6g} * n^{:.6f} (rms log residual {:.3g})\n", scan.prefactor, scan.alpha, scan.residual);
  if (std::abs(scan.alpha + 1.0) > 0.3) {
    out << fmt::format("note: measured exponent {:.3f} lies outside the 1/n band [-1.3, -0.7]\n", scan.alpha);
  }
  return 0;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_outputs(cfg, {"evolve.json", "trace.csv"});
  const PointerModel model = load_model(cfg, err);
  const CVector phi = register_basis_state(model, cfg.register_basis);
  ScheduleShape shape = cfg.schedule == "smoothstep" ? ScheduleShape::Smoothstep : ScheduleShape::Linear;
  EvolveOptions opt;
  opt.max_phase_per_step = cfg.max_phase;
  std::vector<double> times = cfg.T_list;
  const auto rows = adiabaticity_sweep(model, times, phi, shape, opt);

  json runs = json::array();
  for (const auto& r : rows) runs.push_back(io::to_json(r.report, true));
  json j;
  j["n"] = model.gate_count();
  j["register_width"] = model.circuit().register_width();
  j["J"] = cfg.J;
  j["M"] = cfg.M;
  j["schedule"] = cfg.schedule;
  j["register_basis"] = cfg.register_basis;
  j["runs"] = std::move(runs);
  io::write_file(out_path(cfg, "evolve.json"), j.dump(2) + "\n", cfg.force);
  io::write_file(out_path(cfg, "trace.csv"), io::trace_csv(rows.back().report, model.sites()), cfg.force);

  bool drift_ok = true;
  for (const auto& r : rows) {
    out << fmt::format("T={:<10g} fidelity {:.6f}  output population {:.6f}  max interior {:.3e}  norm drift {:.2e}\n",
                       r.total_time, r.final_fidelity, r.report.output_population, r.max_interior_population,
                       r.report.norm_drift);
    drift_ok = drift_ok && r.report.norm_drift <= 1e-9;
  }
  if (!drift_ok) {
    err << "invariant violation: norm drift above 1e-9\n";
    return 2;
  }
  return 0;
}

int cmd_compile_spin(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_outputs(cfg, {"couplings.json"});
  const PointerModel model = load_model(cfg, err);
  const PauliTermSum h = build_spin_h(model, cfg.s);
  json j;
  j["s"] = cfg.s;
  j["J"] = cfg.J;
  j["M"] = cfg.M;
  j["counter_spins"] = h.counter_spins();
  j["register_qubits"] = h.register_qubits();
  j["terms"] = io::to_json(h);
  io::write_file(out_path(cfg, "couplings.json"), j.dump(2) + "\n", cfg.force);
  out << fmt::format("{} Pauli terms, max weight {}\n", h.terms().size(), h.max_weight());
  return 0;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  check_outputs(cfg, {"gate_audit.json"});
  const auto audit = gate_table_audit();
  io::write_file(out_path(cfg, "gate_audit.json"), io::to_json(audit).dump(2) + "\n", cfg.force);
  for (const auto& e : audit) {
    out << fmt::format("{:<9} {:<14} {:<9} deviation {:.3e}  (x{} -> {:.3e})  {}\n", e.gate, e.part,
                       e.matches ? "match" : "MISMATCH", e.deviation, e.scale, e.scaled_deviation, e.note);
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<NamedCircuit> corpus;
  if (!cfg.corpus_dir.empty()) corpus = load_corpus(cfg.corpus_dir);
  for (const auto& p : cfg.circuit_paths) corpus.push_back({fs::path(p).filename().string(), load_circuit(p)});
  if (corpus.empty()) {
    corpus.push_back({"identity-2", identity_circuit(2)});
    corpus.push_back({"identity-4-q2", identity_circuit(4, 2)});
  }
  const auto groups = verify_invariants(corpus, cfg.J, cfg.M);
  int failed = 0;
  out << fmt::format("{:<18} {:>7}  {}\n", "group", "checks", "result");
  for (const auto& g : groups) {
    out << fmt::format("{:<18} {:>7}  {}\n", g.name, g.checks, g.passed ? "PASS" : "FAIL");
    for (const auto& f : g.failures) out << "    " << f << "\n";
    if (!g.passed) ++failed;
  }
  out << fmt::format("{} circuits, {} failed groups\n", corpus.size(), failed);
  return std::min(failed, 125);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adiabatic pointer-chain quantum computation toolkit", "stirap"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* darkstate = app.add_subcommand("darkstate", "analytic dark state and kernel check");
  add_common(darkstate, cfg, true);
  darkstate->add_option("--s", cfg.s, "schedule parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  darkstate->add_option("--register-basis", cfg.register_basis, "register basis input state")->capture_default_str();
  darkstate->add_option("--zero-tol", cfg.zero_tol, "zero eigenvalue tolerance (default 1e-6 max(J,M))");
  darkstate->add_option("--residual-tol", cfg.residual_tol, "kernel residual tolerance, relative to max(J,M)")
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "full spectrum of H(s)");
  add_common(spectrum, cfg, true);
  auto* s_opt = spectrum->add_option("--s", cfg.s, "schedule parameter")->check(CLI::Range(0.0, 1.0));
  spectrum->add_option("--s-grid", cfg.s_grid, "uniform grid with k points")->excludes(s_opt)->check(CLI::Range(2, 100001));
  spectrum->add_option("--zero-tol", cfg.zero_tol, "zero eigenvalue tolerance");

  auto* gapscan = app.add_subcommand("gapscan", "minimum gap against gate count");
  add_common(gapscan, cfg, false);
  gapscan->add_option("--n-list", cfg.n_list, "even gate counts")->delimiter(',');
  gapscan->add_option("--s-grid", cfg.s_grid, "s grid points (default 101)")->check(CLI::Range(21, 100001));
  gapscan->add_option("--family", cfg.family, "identity or random")->check(CLI::IsMember({"identity", "random"}));
  gapscan->add_option("--register-width", cfg.register_width, "register qubits")->check(CLI::Range(1, 6));
  gapscan->add_option("--seed", cfg.seed, "seed for the random-rotation family")->capture_default_str();
  gapscan->add_option("--zero-tol", cfg.zero_tol, "zero eigenvalue tolerance");

  auto* evolve = app.add_subcommand("evolve", "adiabatic sweep");
  add_common(evolve, cfg, true);
  evolve->add_option("--T-list", cfg.T_list, "total sweep times")->delimiter(',');
  evolve->add_option("--schedule", cfg.schedule, "linear or smoothstep")->check(CLI::IsMember({"linear", "smoothstep"}));
  evolve->add_option("--register-basis", cfg.register_basis, "register basis input state");
  evolve->add_option("--max-phase", cfg.max_phase, "dt * ||H|| bound per step")->capture_default_str();

  auto* compile = app.add_subcommand("compile-spin", "Pauli coupling table of the spin realization");
  add_common(compile, cfg, true);
  compile->add_option("--s", cfg.s, "schedule parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every invariant on a circuit corpus");
  verify->add_option("--circuit", cfg.circuit_paths, "circuit file (repeatable)")->check(CLI::ExistingFile);
  verify->add_option("--corpus", cfg.corpus_dir, "directory of .circ files")->check(CLI::ExistingDirectory);
  verify->add_option("--J", cfg.J, "boundary coupling");
  verify->add_option("--M", cfg.M, "internal coupling");

  auto* audit = app.add_subcommand("audit", "compare computed gate Hermitian parts with their tabulated forms");
  audit->add_option("--out", cfg.output_dir, "output directory");
  audit->add_flag("--force", cfg.force, "overwrite existing outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*darkstate) return cmd_darkstate(cfg, out, err);
    if (*spectrum) return cmd_spectrum(cfg, out, err);
    if (*gapscan) return cmd_gapscan(cfg, out, err);
    if (*evolve) return cmd_evolve(cfg, out, err);
    if (*compile) return cmd_compile_spin(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*audit) return cmd_audit(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace stirap::cli
