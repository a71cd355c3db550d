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

#include "stirap/pointer_model.hpp"

#include <cmath>

#include <fmt/format.h>

namespace stirap {
namespace {

constexpr double kNormTol = 1e-12;

void check_register_vector(const PointerModel& model, const CVector& phi) {
  if (phi.size() != model.register_dim()) {
    throw InvalidArgument(fmt::format("register vector has dimension {}, expected {}", phi.size(),
                                      model.register_dim()));
  }
  if (std::abs(phi.norm() - 1.0) > kNormTol) throw InvalidArgument("register vector is not normalized");
}

PointerState empty_state(const PointerModel& model) {
  return {CVector::Zero(model.dimension()), model.sites(), model.register_dim()};
}

}  // namespace

void check_schedule_parameter(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidArgument(fmt::format("s = {} outside [0, 1]", s));
}

PointerModel::PointerModel(Circuit circuit, double J, double M)
    : circuit_(std::move(circuit)), J_(J), M_(M) {
  if (!(J_ > 0.0) || !std::isfinite(J_)) throw InvalidArgument("J must be positive");
  if (!(M_ > 0.0) || !std::isfinite(M_)) throw InvalidArgument("M must be positive");

  const int n = circuit_.gate_count();
  const Index d = circuit_.register_dim();
  blocks_.reserve(static_cast<size_t>(n) + 2);
  is_identity_.reserve(static_cast<size_t>(n) + 2);
  blocks_.push_back(CMatrix::Identity(d, d));
  is_identity_.push_back(1);
  prefix_.push_back(CMatrix::Identity(d, d));
  for (const Gate& g : circuit_.gates()) {
    CMatrix u = gate_unitary(g, circuit_.register_width());
    prefix_.push_back(u * prefix_.back());
    const bool identity = max_abs(u - CMatrix::Identity(d, d)) == 0.0;
    blocks_.push_back(std::move(u));
    is_identity_.push_back(identity ? 1 : 0);
  }
  blocks_.push_back(CMatrix::Identity(d, d));
  is_identity_.push_back(1);
  product_ = prefix_.back();
}

std::optional<std::string> PointerModel::warning() const {
  if (M_ / J_ < 5.0) {
    return fmt::format("M/J = {:.3g} < 5: the dark state is not well separated from the chain", M_ / J_);
  }
  return std::nullopt;
}

double PointerModel::bond_weight(Index bond, double s) const {
  check_schedule_parameter(s);
  const Index last = sites() - 2;
  if (bond < 0 || bond > last) throw InvalidArgument("bond index out of range");
  if (bond == 0) return s * J_;
  if (bond == last) return (1.0 - s) * J_;
  return M_;
}

std::vector<double> PointerModel::weights(double s) const {
  std::vector<double> w(static_cast<size_t>(sites() - 1));
  for (Index b = 0; b < sites() - 1; ++b) w[static_cast<size_t>(b)] = bond_weight(b, s);
  return w;
}

kernels::ChainView PointerModel::chain(std::span<const double> weights) const {
  return {sites(), register_dim(), weights, blocks_, is_identity_};
}

CMatrix PointerModel::dense(double s) const {
  const Index d = register_dim();
  CMatrix h = CMatrix::Zero(dimension(), dimension());
  for (Index b = 0; b < sites() - 1; ++b) {
    const double w = bond_weight(b, s);
    // rows = destination site
    h.block((b + 1) * d, b * d, d, d) = w * blocks_[static_cast<size_t>(b)];
    h.block(b * d, (b + 1) * d, d, d) = w * blocks_[static_cast<size_t>(b)].adjoint();
  }
  return h;
}

void PointerModel::apply(double s, std::span<const complex_t> in, std::span<complex_t> out) const {
  const auto w = weights(s);
  kernels::chain_apply(chain(w), in, out);
}

CVector PointerModel::apply(double s, const CVector& in) const {
  CVector out(in.size());
  apply(s, std::span<const complex_t>(in.data(), static_cast<size_t>(in.size())),
        std::span<complex_t>(out.data(), static_cast<size_t>(out.size())));
  return out;
}

double PointerModel::norm_bound(double s) const {
  const auto w = weights(s);
  double bound = 0.0;
  for (size_t k = 0; k <= w.size(); ++k) {
    const double left = k > 0 ? w[k - 1] : 0.0;
    const double right = k < w.size() ? w[k] : 0.0;
    bound = std::max(bound, left + right);
  }
  return bound;
}

double PointerModel::norm_bound() const {
  // each site sum is affine in s, so the maximum sits at an endpoint
  return std::max(norm_bound(0.0), norm_bound(1.0));
}

PointerState initial_state(const PointerModel& model, const CVector& phi) {
  check_register_vector(model, phi);
  PointerState psi = empty_state(model);
  psi.amplitudes.head(model.register_dim()) = phi;
  return psi;
}

PointerState target_state(const PointerModel& model, const CVector& phi) {
  check_register_vector(model, phi);
  PointerState psi = empty_state(model);
  const Index d = model.register_dim();
  psi.amplitudes.segment((model.sites() - 1) * d, d) = model.full_product() * phi;
  return psi;
}

PointerState analytic_dark_state(const PointerModel& model, double s, const CVector& phi) {
  check_schedule_parameter(s);
  check_register_vector(model, phi);
  const int n = model.gate_count();
  if (n % 2 != 0) throw InvalidArgument("n must be even");
  const double J = model.J();
  const double M = model.M();
  const Index d = model.register_dim();

  PointerState psi = empty_state(model);
  psi.amplitudes.segment(0, d) = (1.0 - s) * J * phi;
  const double interior = s * (1.0 - s) * J * J / M;
  for (int i = 1; i <= n / 2; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    psi.amplitudes.segment(2 * i * d, d) = sign * interior * (model.prefix_product(2 * i - 1) * phi);
  }
  const double last_sign = ((n / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
  psi.amplitudes.segment((n + 2) * d, d) = last_sign * s * J * (model.full_product() * phi);
  return psi;
}

std::vector<double> site_populations(const PointerState& psi) {
  const double norm2 = psi.amplitudes.squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidArgument("site_populations: zero vector");
  const std::span<const complex_t> view(psi.amplitudes.data(), static_cast<size_t>(psi.amplitudes.size()));
  auto w = kernels::site_weights_serial(view, psi.sites, psi.register_dim);
  for (double& x : w) x /= norm2;
  return w;
}

CVector register_basis_state(const PointerModel& model, Index r) {
  if (r < 0 || r >= model.register_dim()) throw InvalidArgument("register basis index out of range");
  CVector e = CVector::Zero(model.register_dim());
  e(r) = 1.0;
  return e;
}

}  // namespace stirap
