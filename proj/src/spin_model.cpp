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

#include "stirap/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace stirap {
namespace {

constexpr double kDropTol = 1e-15;

// Action of one letter on a basis bit: returns the phase; the bit flips for X and Y.
complex_t letter_phase(SpinSpace space, char letter, bool bit) {
  switch (letter) {
    case 'X': return 1.0;
    case 'Y':
      // register: Y|0> = i|1>, Y|1> = -i|0>; counter (bit 1 = up): Y|up> = i|down>
      if (space == SpinSpace::Register) return bit ? -kI : kI;
      return bit ? kI : -kI;
    case 'Z':
      if (space == SpinSpace::Register) return bit ? -1.0 : 1.0;
      return bit ? 1.0 : -1.0;
    default: throw InvalidArgument(fmt::format("bad Pauli letter '{}'", letter));
  }
}

}  // namespace

PauliTermSum::PauliTermSum(int counter_spins, int register_qubits)
    : counter_(counter_spins), register_(register_qubits) {
  if (counter_ < 0 || register_ < 0) throw InvalidArgument("negative spin count");
}

void PauliTermSum::add(double coefficient, std::vector<SiteLetter> sites) {
  std::sort(sites.begin(), sites.end());
  for (size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    const int limit = s.space == SpinSpace::Counter ? counter_ : register_;
    if (s.index < 0 || s.index >= limit) throw InvalidArgument("Pauli term index out of range");
    if (s.letter != 'X' && s.letter != 'Y' && s.letter != 'Z') throw InvalidArgument("bad Pauli letter");
    if (i > 0 && sites[i - 1].space == s.space && sites[i - 1].index == s.index) {
      throw InvalidArgument("two letters on the same site");
    }
  }
  auto same = [&](const PauliTerm& t) { return t.sites == sites; };
  if (auto it = std::find_if(terms_.begin(), terms_.end(), same); it != terms_.end()) {
    it->coefficient += coefficient;
    if (std::abs(it->coefficient) < kDropTol) terms_.erase(it);
    return;
  }
  if (std::abs(coefficient) < kDropTol) return;
  terms_.push_back({coefficient, std::move(sites)});
}

int PauliTermSum::max_weight() const {
  size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.sites.size());
  return static_cast<int>(w);
}

Eigen::SparseMatrix<complex_t> PauliTermSum::sparse() const {
  if (total_spins() > kSpinCap) {
    throw InvalidArgument(fmt::format("{} spins exceeds the spin-model cap of {}", total_spins(), kSpinCap));
  }
  const Index dim = Index{1} << total_spins();
  std::vector<Eigen::Triplet<complex_t>> triplets;
  triplets.reserve(terms_.size() * static_cast<size_t>(dim));
  for (const auto& term : terms_) {
    Index flip = 0;
    for (const auto& s : term.sites) {
      const int bit = s.space == SpinSpace::Register ? s.index : register_ + s.index;
      if (s.letter != 'Z') flip |= Index{1} << bit;
    }
    for (Index col = 0; col < dim; ++col) {
      complex_t amp = term.coefficient;
      for (const auto& s : term.sites) {
        const int bit = s.space == SpinSpace::Register ? s.index : register_ + s.index;
        amp *= letter_phase(s.space, s.letter, ((col >> bit) & 1) != 0);
      }
      triplets.emplace_back(col ^ flip, col, amp);
    }
  }
  Eigen::SparseMatrix<complex_t> m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(complex_t(0.0));
  return m;
}

CMatrix PauliTermSum::dense() const {
  if (total_spins() > kDenseSpinCap) {
    throw InvalidArgument(fmt::format("{} spins exceeds the dense cap of {}", total_spins(), kDenseSpinCap));
  }
  return CMatrix(sparse());
}

std::vector<std::pair<double, std::string>> pauli_expand(const CMatrix& hermitian) {
  const Index dim = hermitian.rows();
  int k = 0;
  while ((Index{1} << k) < dim) ++k;
  if ((Index{1} << k) != dim || hermitian.cols() != dim) throw InvalidArgument("pauli_expand: size must be 2^k");
  std::vector<std::pair<double, std::string>> out;
  const Index strings = Index{1} << (2 * k);
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  for (Index code = 0; code < strings; ++code) {
    std::string letters(static_cast<size_t>(k), 'I');
    for (int j = 0; j < k; ++j) letters[static_cast<size_t>(j)] = kLetters[(code >> (2 * j)) & 3];
    const complex_t c = (pauli::string_matrix(letters) * hermitian).trace() / static_cast<double>(dim);
    if (std::abs(c.imag()) > 1e-12) throw InvalidArgument("pauli_expand: matrix is not Hermitian");
    if (std::abs(c.real()) > kDropTol) out.emplace_back(c.real(), std::move(letters));
  }
  return out;
}

PauliTermSum build_spin_h(const PointerModel& model, double s) {
  check_schedule_parameter(s);
  const int n = model.gate_count();
  const int N = model.circuit().register_width();
  if (n + 3 + N > kSpinCap) {
    throw InvalidArgument(fmt::format("n + 3 + N = {} exceeds the spin-model cap of {}; use the pointer model",
                                      n + 3 + N, kSpinCap));
  }
  PauliTermSum h(n + 3, N);
  auto c = [](int i, char l) { return SiteLetter{SpinSpace::Counter, i, l}; };

  auto hopping = [&](double weight, int a, int b, std::vector<SiteLetter> reg) {
    auto xx = reg;
    xx.push_back(c(a, 'X'));
    xx.push_back(c(b, 'X'));
    auto yy = std::move(reg);
    yy.push_back(c(a, 'Y'));
    yy.push_back(c(b, 'Y'));
    h.add(weight, std::move(xx));
    h.add(weight, std::move(yy));
  };
  auto twisted = [&](double weight, int a, int b, std::vector<SiteLetter> reg) {
    auto xy = reg;
    xy.push_back(c(a, 'X'));
    xy.push_back(c(b, 'Y'));
    auto yx = std::move(reg);
    yx.push_back(c(a, 'Y'));
    yx.push_back(c(b, 'X'));
    h.add(weight, std::move(xy));
    h.add(-weight, std::move(yx));
  };

  hopping(s * model.J() / 2, 0, 1, {});
  hopping((1.0 - s) * model.J() / 2, n + 1, n + 2, {});

  for (int i = 1; i <= n; ++i) {
    const Gate& g = model.circuit().gate(i - 1);
    const HermitianParts parts = gate_hermitian_parts(g.local_matrix());
    auto register_letters = [&](const std::string& local) {
      std::vector<SiteLetter> reg;
      for (size_t j = 0; j < local.size(); ++j) {
        if (local[j] != 'I') reg.push_back({SpinSpace::Register, g.targets()[j], local[j]});
      }
      return reg;
    };
    for (const auto& [coef, letters] : pauli_expand(parts.symmetric)) {
      hopping(model.M() / 2 * coef, i, i + 1, register_letters(letters));
    }
    for (const auto& [coef, letters] : pauli_expand(parts.antisymmetric)) {
      twisted(model.M() / 2 * coef, i, i + 1, register_letters(letters));
    }
  }
  return h;
}

std::vector<Index> single_excitation_indices(int gate_count, int register_qubits) {
  const Index d = Index{1} << register_qubits;
  std::vector<Index> idx;
  idx.reserve(static_cast<size_t>((gate_count + 3) * d));
  for (int k = 0; k < gate_count + 3; ++k) {
    for (Index r = 0; r < d; ++r) idx.push_back(r | (Index{1} << (register_qubits + k)));
  }
  return idx;
}

std::vector<Index> zero_excitation_indices(int /*gate_count*/, int register_qubits) {
  std::vector<Index> idx;
  for (Index r = 0; r < (Index{1} << register_qubits); ++r) idx.push_back(r);
  return idx;
}

CMatrix restrict_to_indices(const Eigen::SparseMatrix<complex_t>& h_spin, const std::vector<Index>& indices) {
  std::vector<Index> position(static_cast<size_t>(h_spin.rows()), -1);
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= h_spin.rows()) throw InvalidArgument("sector index outside the spin space");
    position[static_cast<size_t>(indices[i])] = static_cast<Index>(i);
  }
  const auto m = static_cast<Index>(indices.size());
  CMatrix out = CMatrix::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    const Index col = indices[static_cast<size_t>(j)];
    for (Eigen::SparseMatrix<complex_t>::InnerIterator it(h_spin, col); it; ++it) {
      const Index i = position[static_cast<size_t>(it.row())];
      if (i >= 0) out(i, j) = it.value();
    }
  }
  return out;
}

CMatrix restrict_to_single_excitation(const Eigen::SparseMatrix<complex_t>& h_spin, int gate_count,
                                      int register_qubits) {
  const Index expected = Index{1} << (gate_count + 3 + register_qubits);
  if (h_spin.rows() != expected || h_spin.cols() != expected) {
    throw InvalidArgument("restrict_to_single_excitation: dimension mismatch");
  }
  return restrict_to_indices(h_spin, single_excitation_indices(gate_count, register_qubits));
}

CMatrix restrict_to_single_excitation(const CMatrix& h_spin, int gate_count, int register_qubits) {
  const Index expected = Index{1} << (gate_count + 3 + register_qubits);
  if (h_spin.rows() != expected || h_spin.cols() != expected) {
    throw InvalidArgument("restrict_to_single_excitation: dimension mismatch");
  }
  const auto idx = single_excitation_indices(gate_count, register_qubits);
  const auto m = static_cast<Index>(idx.size());
  CMatrix out(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < m; ++i) out(i, j) = h_spin(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  return out;
}

double excitation_defect(const Eigen::SparseMatrix<complex_t>& h_spin, int counter_spins, int register_qubits) {
  auto magnetization = [&](Index b) {
    int m = 0;
    for (int c = 0; c < counter_spins; ++c) m += ((b >> (register_qubits + c)) & 1) ? 1 : -1;
    return m;
  };
  double defect = 0.0;
  for (Index col = 0; col < h_spin.outerSize(); ++col) {
    const int mc = magnetization(col);
    for (Eigen::SparseMatrix<complex_t>::InnerIterator it(h_spin, col); it; ++it) {
      defect = std::max(defect, std::abs(it.value()) * std::abs(mc - magnetization(it.row())));
    }
  }
  return defect;
}

std::vector<AuditEntry> gate_table_audit() {
  using pauli::identity;
  using pauli::x;
  using pauli::y;
  using pauli::z;
  constexpr double kTol = 1e-12;
  const double r2 = std::sqrt(2.0);
  std::vector<AuditEntry> out;

  auto record = [&](std::string gate, std::string part, std::string tabulated, const CMatrix& computed,
                    const CMatrix& printed, double scale, std::string note) {
    AuditEntry e;
    e.gate = std::move(gate);
    e.part = std::move(part);
    e.tabulated = std::move(tabulated);
    e.deviation = max_abs(computed - printed);
    e.scale = scale;
    e.scaled_deviation = max_abs(computed - scale * printed);
    e.matches = e.scaled_deviation <= kTol;
    e.note = std::move(note);
    out.push_back(std::move(e));
  };

  const auto had = gate_hermitian_parts(Gate::hadamard(0).local_matrix());
  record("hadamard", "symmetric", "(X+Z)/sqrt2", had.symmetric, (x() + z()) / r2, 1.0, "");
  record("hadamard", "antisymmetric", "0", had.antisymmetric, CMatrix::Zero(2, 2), 1.0, "");

  const auto t = gate_hermitian_parts(Gate::pi_over_8(0).local_matrix());
  record("pi/8", "symmetric", "(1+sqrt2)/2 I + (1-sqrt2)/2 Z", t.symmetric,
         (1 + r2) / 2 * identity() + (1 - r2) / 2 * z(), 1.0,
         "computed diag(1, 1/sqrt2) = (1+1/sqrt2)/2 I + (1-1/sqrt2)/2 Z for T = diag(1, e^{i pi/4})");
  record("pi/8", "antisymmetric", "(Z-I)/sqrt2", t.antisymmetric, (z() - identity()) / r2, 1.0,
         "computed diag(0, -1/sqrt2) = (Z-I)/(2 sqrt2)");

  // rotation samples: several axes and angles, worst case reported
  const std::vector<std::pair<std::array<double, 3>, double>> samples = {
      {{0, 0, 1}, 0.0},
      {{1, 0, 0}, std::numbers::pi / 3},
      {{0, 1, 0}, 2.0},
      {{0, 0, 1}, std::numbers::pi},
      {{1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)}, 5.1},
      {{0.6, 0.0, 0.8}, -1.3},
  };
  double sym_dev = 0.0;
  double anti_dev = 0.0;
  for (const auto& [axis, angle] : samples) {
    const auto p = gate_hermitian_parts(Gate::rotation(0, axis, angle).local_matrix());
    const CMatrix n_sigma = axis[0] * x() + axis[1] * y() + axis[2] * z();
    sym_dev = std::max(sym_dev, max_abs(p.symmetric - std::cos(angle / 2) * identity()));
    anti_dev = std::max(anti_dev, max_abs(p.antisymmetric - std::sin(angle / 2) * n_sigma));
  }
  out.push_back({"rotation", "symmetric", "cos(theta/2) I", sym_dev, 1.0, sym_dev, sym_dev <= kTol,
                 fmt::format("worst case over {} axis/angle samples", samples.size())});
  out.push_back({"rotation", "antisymmetric", "sin(theta/2) (nx X + ny Y + nz Z)", anti_dev, 1.0, anti_dev,
                 anti_dev <= kTol, "printed with the symmetric label; matches as the antisymmetric part"});

  const auto cn = gate_hermitian_parts(Gate::cnot(0, 1).local_matrix());
  // qubit 1 = control (local bit 0), qubit 2 = target (local bit 1)
  const CMatrix printed = pauli::string_matrix("II") + pauli::string_matrix("ZI") +
                          pauli::string_matrix("IX") - pauli::string_matrix("ZX");
  record("cnot", "symmetric", "I1I2 + Z1I2 + I1X2 - Z1X2", cn.symmetric, printed, 0.5,
         "printed form is twice CNOT; matches after multiplying by 1/2");
  record("cnot", "antisymmetric", "0", cn.antisymmetric, CMatrix::Zero(4, 4), 1.0, "");
  return out;
}

}  // namespace stirap
