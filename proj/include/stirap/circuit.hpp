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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stirap/linalg.hpp"

namespace stirap {

enum class GateKind { Hadamard, PiOver8, Rotation, CNOT, CustomUnitary };

std::string_view gate_kind_name(GateKind kind);

/// One gate of a circuit. Construct through the named factories, which
/// enforce the payload invariants.
///
/// For multi-qubit gates the local matrix uses little-endian ordering over
/// `targets`: targets[0] is the least-significant bit of the local index.
/// CNOT stores {control, target}.
class Gate {
 public:
  static Gate hadamard(int qubit);
  /// diag(1, e^{i pi/4})
  static Gate pi_over_8(int qubit);
  /// exp(-i theta/2 (n . sigma)); axis must have unit norm within 1e-12.
  static Gate rotation(int qubit, std::array<double, 3> axis, double angle);
  static Gate cnot(int control, int target);
  /// 1 or 2 targets, matrix of size 2^k, unitary within 1e-12.
  static Gate custom(std::vector<int> targets, CMatrix matrix);

  GateKind kind() const { return kind_; }
  const std::vector<int>& targets() const { return targets_; }
  const std::array<double, 3>& axis() const { return axis_; }
  double angle() const { return angle_; }

  /// Matrix on the gate's own targets (dimension 2^targets().size()).
  const CMatrix& local_matrix() const { return local_; }

  bool operator==(const Gate& other) const;

 private:
  Gate(GateKind kind, std::vector<int> targets, CMatrix local);

  GateKind kind_;
  std::vector<int> targets_;
  std::array<double, 3> axis_{0.0, 0.0, 1.0};
  double angle_ = 0.0;
  CMatrix local_;
};

/// An ordered gate list on an N-qubit register. Gate i (1-based in the
/// physics, 0-based in `gates()`) is applied i-th.
class Circuit {
 public:
  /// Throws InvalidArgument unless register_width >= 1, the gate count is
  /// even and >= 2, and every target index is < register_width.
  Circuit(int register_width, std::vector<Gate> gates);

  int register_width() const { return width_; }
  Index register_dim() const { return Index{1} << width_; }
  int gate_count() const { return static_cast<int>(gates_.size()); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int i) const { return gates_.at(static_cast<size_t>(i)); }

  bool operator==(const Circuit& other) const = default;

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// Hermitian decomposition U = symmetric - i * antisymmetric.
struct HermitianParts {
  CMatrix symmetric;      // (U + U^dagger) / 2
  CMatrix antisymmetric;  // (i/2) (U - U^dagger)
};

/// Embeds the gate into the full 2^N register; identity on other qubits.
CMatrix gate_unitary(const Gate& gate, int register_width);

/// U_n ... U_2 U_1, i.e. gate 0 of the list applied first.
CMatrix circuit_product(const Circuit& circuit);

/// Throws InvalidArgument if `u` is not unitary within 1e-12.
HermitianParts gate_hermitian_parts(const CMatrix& u);

/// Parses the line-oriented circuit format:
///
///   # comment
///   qubits 2
///   gate h 0
///   gate t 1
///   gate rot 0 axis 0 0 1 angle 1.5707963267948966
///   gate cnot 0 1
///   gate custom 0 1
///     1,0 0,0 0,0 0,0
///     ...
///
/// A custom gate lists its targets, followed by 2^k continuation lines of
/// 2^k `re,im` entries each (row-major). Throws ParseError on failure.
Circuit parse_circuit(std::string_view text);

Circuit load_circuit(const std::string& path);

/// Inverse of parse_circuit; numbers are written with 17 significant digits.
std::string serialize_circuit(const Circuit& circuit);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message, const std::string& source = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace stirap
