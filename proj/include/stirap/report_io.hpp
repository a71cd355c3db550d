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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "stirap/evolve.hpp"
#include "stirap/spectral.hpp"
#include "stirap/spin_model.hpp"

namespace stirap::io {

/// Fixed 17-significant-digit rendering used in every CSV file.
std::string real(double v);

class OutputExists : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `content` to `path`; refuses to replace an existing file unless
/// `force` is set.
void write_file(const std::filesystem::path& path, const std::string& content, bool force);

nlohmann::ordered_json to_json(const PauliTermSum& h);
nlohmann::ordered_json to_json(const EvolveReport& report, bool include_trace = false);
nlohmann::ordered_json to_json(const std::vector<AuditEntry>& audit);
nlohmann::ordered_json gap_fit_json(const GapScanResult& scan);

/// `n,s,gap`
std::string gaps_csv(const GapScanResult& scan);
/// `t,s,site0,...,site_{n+2},fidelity_to_dark`
std::string trace_csv(const EvolveReport& report, Index sites);
/// `s,index,eigenvalue`
std::string spectrum_csv(const std::vector<std::pair<double, RVector>>& spectra);

}  // namespace stirap::io
