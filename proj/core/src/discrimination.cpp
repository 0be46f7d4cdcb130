// Copyright 2026 The cohctl Authors
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

#include "cohctl/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cohctl {

namespace {

constexpr double kDegeneracyTol = 1e-10;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::dimension_mismatch, who);
  }
}

}  // namespace

DiscriminationInstance::DiscriminationInstance(ChannelImplementation fixed,
                                               ChannelImplementation candidate_a,
                                               ChannelImplementation candidate_b,
                                               double tol)
    : fixed_(std::move(fixed)), a_(std::move(candidate_a)), b_(std::move(candidate_b)) {
  if (fixed_.dim() != a_.dim() || a_.dim() != b_.dim()) {
    throw Error(Errc::dimension_mismatch, "discrimination instance dimensions");
  }
  if (!approx_equal(choi_of(a_.channel()).matrix, choi_of(b_.channel()).matrix, tol)) {
    throw Error(Errc::invalid_choi, "candidates implement different channels");
  }
}

ComplexMatrix DiscriminationInstance::tau() const {
  return transformation_matrix(a_).matrix - transformation_matrix(b_).matrix;
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_same_shape(rho, sigma, "trace_distance: shapes differ");
  require_density_matrix(rho);
  require_density_matrix(sigma);
  return 0.5 * trace_norm(rho - sigma);
}

OutputDistance output_distance(const DiscriminationInstance& inst,
                               const ControlState& c, const ComplexMatrix& rho) {
  const ControlledOutput out_a =
      controlled_output(inst.fixed(), inst.candidate_a(), c, rho);
  const ControlledOutput out_b =
      controlled_output(inst.fixed(), inst.candidate_b(), c, rho);
  const ComplexMatrix t0 = transformation_matrix(inst.fixed()).matrix;

  OutputDistance out;
  out.direct = trace_distance(out_a.matrix(), out_b.matrix());
  out.closed_form = std::abs(c.a()) * std::abs(c.b()) *
                    trace_norm(inst.tau() * rho * t0.adjoint());
  return out;
}

double diamond_bound(const ComplexMatrix& t1, const ComplexMatrix& t1p) {
  require_same_shape(t1, t1p, "diamond_bound: shapes differ");
  return 0.5 * spectral_norm(t1 - t1p);
}

ComplexVector optimal_input(const ComplexMatrix& t1, const ComplexMatrix& t1p) {
  require_same_shape(t1, t1p, "optimal_input: shapes differ");
  const ComplexMatrix tau = t1 - t1p;
  const HermitianEig eig = hermitian_eig(tau.adjoint() * tau);
  const double top = eig.values(0);
  if (top <= 0.0) throw Error(Errc::out_of_range, "optimal_input: tau = 0");

  const Eigen::Index n = tau.cols();
  ComplexMatrix projector = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n && top - eig.values(k) <= kDegeneracyTol * std::max(1.0, top); ++k) {
    projector += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  Eigen::Index pick = 0;
  double best = -1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double weight = projector.col(k).norm();
    if (weight > best + kDegeneracyTol) {
      best = weight;
      pick = k;
    }
  }
  ComplexVector psi = projector.col(pick) / best;
  psi *= std::polar(1.0, -std::arg(psi(pick)));
  return psi;
}

double success_probability(double distance) {
  constexpr double kSlack = 1e-12;
  if (!(distance >= -kSlack && distance <= 1.0 + kSlack)) {
    throw Error(Errc::out_of_range, "distance outside [0, 1]");
  }
  return 0.5 * (1.0 + std::clamp(distance, 0.0, 1.0));
}

double max_depolarising_distance(int d) {
  if (d < 2) throw Error(Errc::out_of_range, "max_depolarising_distance: d < 2");
  return 1.0 / std::sqrt(static_cast<double>(d));
}

}  // namespace cohctl
