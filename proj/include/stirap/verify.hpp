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

#include <string>
#include <vector>

#include "stirap/circuit.hpp"

namespace stirap {

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

struct CheckGroup {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
};

/// Runs every module invariant over the given circuits at desk scale:
/// circuit algebra, pointer-model symmetries and exact kernel, spectra,
/// spin-model sector equivalence, the gate-table audit and short sweeps.
std::vector<CheckGroup> verify_invariants(const std::vector<NamedCircuit>& corpus, double J, double M);

/// Loads every *.circ file in a directory, sorted by file name.
std::vector<NamedCircuit> load_corpus(const std::string& directory);

}  // namespace stirap
