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

#include "stirap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <fmt/format.h>

#include "stirap/evolve.hpp"
#include "stirap/spectral.hpp"
#include "stirap/spin_model.hpp"

namespace stirap {
namespace {

class Group {
 public:
  explicit Group(std::string name) { g_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++g_.checks;
    if (!ok) {
      g_.passed = false;
      g_.failures.push_back(what);
    }
  }

  template <typename F>
  void guarded(const std::string& label, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, fmt::format("{}: {}", label, e.what()));
    }
  }

  CheckGroup take() { return std::move(g_); }

 private:
  CheckGroup g_;
};

const std::vector<double> kSGrid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

CheckGroup circuit_group(const std::vector<NamedCircuit>& corpus) {
  Group g("circuit");
  for (const auto& [name, c] : corpus) {
    g.guarded(name, [&] {
      for (const Gate& gate : c.gates()) {
        const HermitianParts p = gate_hermitian_parts(gate.local_matrix());
        g.expect(max_abs(p.symmetric - kI * p.antisymmetric - gate.local_matrix()) <= 1e-12,
                 name + ": U = Hs - i Ha");
        g.expect(hermiticity_defect(p.symmetric) <= 1e-12 && hermiticity_defect(p.antisymmetric) <= 1e-12,
                 name + ": parts Hermitian");
      }
      g.expect(unitarity_defect(circuit_product(c)) <= c.gate_count() * 1e-12, name + ": product unitary");
      g.expect(parse_circuit(serialize_circuit(c)) == c, name + ": serialize round trip");
    });
  }
  return g.take();
}

CheckGroup pointer_group(const std::vector<NamedCircuit>& corpus, double J, double M) {
  Group g("pointer_model");
  for (const auto& [name, c] : corpus) {
    g.guarded(name, [&] {
      const PointerModel model(c, J, M);
      const Index d = model.register_dim();
      CMatrix chiral = CMatrix::Zero(model.dimension(), model.dimension());
      for (Index k = 0; k < model.sites(); ++k) {
        chiral.block(k * d, k * d, d, d).setIdentity();
        if (k % 2) chiral.block(k * d, k * d, d, d) *= -1.0;
      }
      const CMatrix h0 = model.dense(0.0);
      const CMatrix h1 = model.dense(1.0);
      for (double s : kSGrid) {
        const CMatrix h = model.dense(s);
        g.expect(hermiticity_defect(h) <= 1e-12, fmt::format("{}: Hermitian at s={}", name, s));
        g.expect(max_abs(chiral * h * chiral + h) == 0.0, fmt::format("{}: chiral at s={}", name, s));
        g.expect(max_abs(h - (h0 + s * (h1 - h0))) <= 1e-12, fmt::format("{}: linear in s at s={}", name, s));
        for (Index r = 0; r < d; ++r) {
          const PointerState v = analytic_dark_state(model, s, register_basis_state(model, r));
          const double res = (h * v.amplitudes).norm() / v.norm();
          g.expect(res < 1e-10 * std::max(J, M), fmt::format("{}: kernel residual {} at s={}", name, res, s));
        }
      }
    });
  }
  return g.take();
}

CheckGroup spectral_group(const std::vector<NamedCircuit>& corpus, double J, double M) {
  Group g("spectral");
  for (const auto& [name, c] : corpus) {
    g.guarded(name, [&] {
      const PointerModel model(c, J, M);
      const PointerModel reference(identity_circuit(c.gate_count(), c.register_width()), J, M);
      const double tol = default_zero_tol(model);
      for (double s : kSGrid) {
        const CMatrix h = model.dense(s);
        const SpectrumResult eig = eigendecompose(h, tol);
        const double hnorm = eig.eigenvalues.cwiseAbs().maxCoeff();
        g.expect(eig.max_residual < 1e-9 * std::max(1.0, hnorm), fmt::format("{}: residual at s={}", name, s));
        g.expect(eig.zero_space.cols() == model.register_dim(),
                 fmt::format("{}: zero space dim {} at s={}", name, eig.zero_space.cols(), s));
        const Index m = eig.eigenvalues.size();
        double asym = 0.0;
        for (Index i = 0; i < m; ++i) asym = std::max(asym, std::abs(eig.eigenvalues(i) + eig.eigenvalues(m - 1 - i)));
        g.expect(asym < 1e-9, fmt::format("{}: spectrum symmetric at s={}", name, s));
        for (Index r = 0; r < model.register_dim(); ++r) {
          CVector v = analytic_dark_state(model, s, register_basis_state(model, r)).amplitudes;
          v.normalize();
          const double deficit = 1.0 - (eig.zero_space.adjoint() * v).squaredNorm();
          g.expect(deficit < 1e-9, fmt::format("{}: dark state outside zero space at s={}", name, s));
        }
        g.expect(std::abs(eig.gap - gap_at(reference, s, tol)) < 1e-9,
                 fmt::format("{}: gap differs from identity circuit at s={}", name, s));
      }
    });
  }
  return g.take();
}

CheckGroup spin_group(const std::vector<NamedCircuit>& corpus, double J, double M) {
  Group g("spin_model");
  for (const auto& [name, c] : corpus) {
    if (c.gate_count() + 3 + c.register_width() > 11) continue;
    g.guarded(name, [&] {
      const PointerModel model(c, J, M);
      for (double s : {0.0, 0.3, 0.7, 1.0}) {
        const PauliTermSum terms = build_spin_h(model, s);
        const auto h = terms.sparse();
        const CMatrix sector = restrict_to_single_excitation(h, c.gate_count(), c.register_width());
        g.expect(max_abs(sector - model.dense(s)) <= 1e-12, fmt::format("{}: sector equivalence at s={}", name, s));
        g.expect(excitation_defect(h, c.gate_count() + 3, c.register_width()) <= 1e-12,
                 fmt::format("{}: counter magnetization conserved at s={}", name, s));
        g.expect(terms.max_weight() <= 4, name + ": at most four-spin terms");
        const Eigen::SparseMatrix<complex_t> diff = h - Eigen::SparseMatrix<complex_t>(h.adjoint());
        double herm = 0.0;
        for (Index k = 0; k < diff.nonZeros(); ++k) herm = std::max(herm, std::abs(diff.valuePtr()[k]));
        g.expect(herm <= 1e-12, name + ": spin Hamiltonian Hermitian");
      }
    });
  }
  return g.take();
}

CheckGroup audit_group() {
  Group g("gate_table_audit");
  g.guarded("audit", [&] {
    for (const auto& e : gate_table_audit()) {
      const bool expect_match = e.gate != "pi/8";
      g.expect(e.matches == expect_match, fmt::format("{} {}: match={} unexpected", e.gate, e.part, e.matches));
    }
  });
  return g.take();
}

CheckGroup evolve_group(const std::vector<NamedCircuit>& corpus, double J, double M) {
  Group g("evolve");
  for (const auto& [name, c] : corpus) {
    g.guarded(name, [&] {
      const PointerModel model(c, J, M);
      const CVector phi = register_basis_state(model, 0);
      EvolveOptions opt;
      opt.record_trace = false;
      const auto quench = propagate(model, Schedule(1e-6), phi, opt);
      g.expect(quench.report.final_fidelity < 0.01, name + ": quench fidelity");
      const auto run = propagate(model, Schedule(20.0), phi, opt);
      g.expect(run.report.norm_drift <= 1e-9, fmt::format("{}: norm drift {}", name, run.report.norm_drift));
      g.expect(run.report.final_fidelity <= 1.0 + 1e-9, name + ": fidelity bounded");
    });
  }
  return g.take();
}

}  // namespace

std::vector<CheckGroup> verify_invariants(const std::vector<NamedCircuit>& corpus, double J, double M) {
  return {circuit_group(corpus),        pointer_group(corpus, J, M), spectral_group(corpus, J, M),
          spin_group(corpus, J, M),     audit_group(),               evolve_group(corpus, J, M)};
}

std::vector<NamedCircuit> load_corpus(const std::string& directory) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".circ") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedCircuit> out;
  for (const auto& f : files) out.push_back({f.filename().string(), load_circuit(f.string())});
  return out;
}

}  // namespace stirap
