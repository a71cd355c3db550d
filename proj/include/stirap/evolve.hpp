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

#include <optional>
#include <vector>

#include "stirap/pointer_model.hpp"

namespace stirap {

enum class ScheduleShape { Linear, Smoothstep };

/// s(t) over [0, T]; linear t/T or smoothstep 3u^2 - 2u^3 with u = t/T.
class Schedule {
 public:
  /// Throws InvalidArgument unless T > 0.
  explicit Schedule(double total_time, ScheduleShape shape = ScheduleShape::Linear);

  double total_time() const { return total_time_; }
  ScheduleShape shape() const { return shape_; }
  double s(double t) const;

 private:
  double total_time_;
  ScheduleShape shape_;
};

enum class Propagator {
  /// Taylor series of exp(-i H dt) applied through the matrix-free operator,
  /// summed until the next term drops below 1e-17 relative to the state.
  TaylorMatrixFree,
  /// Dense matrix exponential of the midpoint Hamiltonian.
  DenseExponential,
};

struct EvolveOptions {
  Propagator propagator = Propagator::TaylorMatrixFree;
  /// Step size chosen so that dt * norm_bound <= max_phase_per_step.
  double max_phase_per_step = 0.1;
  /// Overrides the step count when set.
  std::optional<long> fixed_steps;
  long max_steps = 10'000'000;
  int trace_samples = 200;
  bool record_trace = true;
};

struct TraceRow {
  double t = 0.0;
  double s = 0.0;
  std::vector<double> populations;  // per counter site
  double fidelity_to_dark = 0.0;
};

struct EvolveReport {
  double total_time = 0.0;
  long steps = 0;
  double dt = 0.0;
  double final_fidelity = 0.0;     // |<target|psi(T)>|^2
  double norm_drift = 0.0;         // max over steps of | ||psi|| - 1 |
  double output_population = 0.0; // population on counter site n+2 at T
  double register_fidelity = 0.0;  // register state on site n+2 vs (prod U) phi
  double max_interior_population = 0.0;  // max over steps of sites 1..n+1
  double min_dark_overlap = 1.0;   // min over trace samples of fidelity to the dark state
  std::vector<TraceRow> trace;
};

/// |<chi|psi>|^2 / (||chi||^2 ||psi||^2). Throws on a zero vector.
double fidelity(const CVector& psi, const CVector& chi);
double fidelity(const PointerState& psi, const PointerState& chi);

struct EvolveResult {
  PointerState final_state;
  EvolveReport report;
};

/// Integrates i d/dt psi = H(s(t)) psi from |0>_c|phi>_r; each step applies
/// exp(-i H(s(t_mid)) dt). Throws InvalidArgument when the required step
/// count exceeds options.max_steps.
EvolveResult propagate(const PointerModel& model, const Schedule& schedule, const CVector& phi,
                       const EvolveOptions& options = {});

struct SweepRow {
  double total_time = 0.0;
  double final_fidelity = 0.0;
  double max_interior_population = 0.0;
  EvolveReport report;
};

/// One propagate() per T (ascending, non-empty), run in parallel and
/// returned in T order.
std::vector<SweepRow> adiabaticity_sweep(const PointerModel& model, const std::vector<double>& times,
                                         const CVector& phi, ScheduleShape shape = ScheduleShape::Linear,
                                         const EvolveOptions& options = {});

}  // namespace stirap
