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

#include "stirap/report_io.hpp"

#include <fstream>

#include <fmt/format.h>

namespace stirap::io {

std::string real(double v) { return fmt::format("{:.17g}", v); }

void write_file(const std::filesystem::path& path, const std::string& content, bool force) {
  if (std::filesystem::exists(path) && !force) {
    throw OutputExists(fmt::format("{} exists; pass --force to overwrite", path.string()));
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

nlohmann::ordered_json to_json(const PauliTermSum& h) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : h.terms()) {
    nlohmann::ordered_json sites = nlohmann::ordered_json::array();
    for (const auto& s : t.sites) {
      sites.push_back({{"index", s.index},
                       {"space", s.space == SpinSpace::Counter ? "counter" : "register"},
                       {"letter", std::string(1, s.letter)}});
    }
    terms.push_back({{"coefficient", t.coefficient}, {"sites", std::move(sites)}});
  }
  return terms;
}

nlohmann::ordered_json to_json(const EvolveReport& r, bool include_trace) {
  nlohmann::ordered_json j;
  j["total_time"] = r.total_time;
  j["steps"] = r.steps;
  j["dt"] = r.dt;
  j["final_fidelity"] = r.final_fidelity;
  j["norm_drift"] = r.norm_drift;
  j["output_population"] = r.output_population;
  j["register_fidelity"] = r.register_fidelity;
  j["max_interior_population"] = r.max_interior_population;
  j["min_dark_overlap"] = r.min_dark_overlap;
  if (include_trace) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.trace) {
      rows.push_back({{"t", row.t}, {"populations", row.populations}});
    }
    j["site_population_trace"] = std::move(rows);
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<AuditEntry>& audit) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : audit) {
    out.push_back({{"gate", e.gate},
                   {"part", e.part},
                   {"tabulated", e.tabulated},
                   {"deviation", e.deviation},
                   {"scale", e.scale},
                   {"scaled_deviation", e.scaled_deviation},
                   {"matches", e.matches},
                   {"note", e.note}});
  }
  return out;
}

nlohmann::ordered_json gap_fit_json(const GapScanResult& scan) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : scan.rows) {
    rows.push_back({{"n", r.n}, {"min_gap", r.min_gap}, {"argmin_s", r.argmin_s}});
  }
  nlohmann::ordered_json j;
  j["alpha"] = scan.alpha;
  j["prefactor"] = scan.prefactor;
  j["residual"] = scan.residual;
  j["rows"] = std::move(rows);
  return j;
}

std::string gaps_csv(const GapScanResult& scan) {
  std::string out = "n,s,gap\n";
  for (const auto& p : scan.points) out += fmt::format("{},{},{}\n", p.n, real(p.s), real(p.gap));
  return out;
}

std::string trace_csv(const EvolveReport& report, Index sites) {
  std::string out = "t,s";
  for (Index k = 0; k < sites; ++k) out += fmt::format(",site{}", k);
  out += ",fidelity_to_dark\n";
  for (const auto& row : report.trace) {
    out += real(row.t) + "," + real(row.s);
    for (double p : row.populations) out += "," + real(p);
    out += "," + real(row.fidelity_to_dark) + "\n";
  }
  return out;
}

std::string spectrum_csv(const std::vector<std::pair<double, RVector>>& spectra) {
  std::string out = "s,index,eigenvalue\n";
  for (const auto& [s, ev] : spectra) {
    for (Index i = 0; i < ev.size(); ++i) out += fmt::format("{},{},{}\n", real(s), i, real(ev(i)));
  }
  return out;
}

}  // namespace stirap::io
