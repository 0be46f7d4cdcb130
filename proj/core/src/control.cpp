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

#include "cohctl/control.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cohctl {

ControlState::ControlState(Complex a, Complex b, double tol) : a_(a), b_(b) {
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > tol) {
    throw Error(Errc::out_of_range,
                "control state norm^2 = " + std::to_string(n2) + ", expected 1");
  }
}

ControlState ControlState::plus() {
  return ControlState(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
}
ControlState ControlState::zero() { return ControlState(1.0, 0.0); }
ControlState ControlState::one() { return ControlState(0.0, 1.0); }

ControlledOutput::ControlledOutput(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0 ||
      matrix_.rows() == 0) {
    throw Error(Errc::dimension_mismatch, "controlled output must be 2d x 2d");
  }
}

ComplexMatrix ControlledOutput::block(int row, int col) const {
  const int d = target_dim();
  return matrix_.block(row * d, col * d, d, d);
}

ComplexMatrix ControlledOutput::control_marginal() const {
  return partial_trace(matrix_, 2, target_dim(), Keep::first);
}

ComplexMatrix ControlledOutput::target_marginal() const {
  return partial_trace(matrix_, 2, target_dim(), Keep::second);
}

bool ControlledOutput::is_valid(double tol) const {
  return is_density_matrix(matrix_, tol) &&
         approx_equal(offdiag10(), offdiag01().adjoint(), tol);
}

namespace {

ComplexMatrix assemble(const ComplexMatrix& b00, const ComplexMatrix& b01,
                       const ComplexMatrix& b10, const ComplexMatrix& b11) {
  const auto d = b00.rows();
  ComplexMatrix out(2 * d, 2 * d);
  out.block(0, 0, d, d) = b00;
  out.block(0, d, d, d) = b01;
  out.block(d, 0, d, d) = b10;
  out.block(d, d, d, d) = b11;
  return out;
}

void require_same_dim(int d0, int d1) {
  if (d0 != d1) {
    throw Error(Errc::dimension_mismatch,
                "channels act on dimensions " + std::to_string(d0) + " and " +
                    std::to_string(d1));
  }
}

void require_input(int d, const ComplexMatrix& rho) {
  if (rho.rows() != d || rho.cols() != d) {
    throw Error(Errc::dimension_mismatch,
                "input is " + std::to_string(rho.rows()) + "x" +
                    std::to_string(rho.cols()) + ", target dimension " +
                    std::to_string(d));
  }
  require_density_matrix(rho);
}

}  // namespace

LinearMap channel_map(const Channel& ch) {
  return {ch.dim(), ch.dim(),
          [ch](const ComplexMatrix& x) { return apply_linear(ch, x); }};
}

LinearMap controlled_map(const ChannelImplementation& i0,
                         const ChannelImplementation& i1, const ControlState& c) {
  require_same_dim(i0.dim(), i1.dim());
  const ComplexMatrix t0 = transformation_matrix(i0).matrix;
  const ComplexMatrix t1 = transformation_matrix(i1).matrix;
  const Complex a = c.a();
  const Complex b = c.b();
  return {i0.dim(), 2 * i0.dim(),
          [ch0 = i0.channel(), ch1 = i1.channel(), t0, t1, a, b](
              const ComplexMatrix& x) {
            const ComplexMatrix off = a * std::conj(b) * t0 * x * t1.adjoint();
            const ComplexMatrix off_rev = std::conj(a) * b * t1 * x * t0.adjoint();
            return assemble(std::norm(a) * apply_linear(ch0, x), off, off_rev,
                            std::norm(b) * apply_linear(ch1, x));
          }};
}

LinearMap classical_map(const Channel& ch0, const Channel& ch1,
                        std::array<double, 2> weights) {
  require_same_dim(ch0.dim(), ch1.dim());
  if (weights[0] < 0.0 || weights[1] < 0.0 ||
      std::abs(weights[0] + weights[1] - 1.0) > kDefaultTol) {
    throw Error(Errc::out_of_range, "classical weights must be >= 0 and sum to 1");
  }
  return {ch0.dim(), 2 * ch0.dim(), [ch0, ch1, weights](const ComplexMatrix& x) {
            const ComplexMatrix zero = ComplexMatrix::Zero(x.rows(), x.cols());
            return assemble(weights[0] * apply_linear(ch0, x), zero, zero,
                            weights[1] * apply_linear(ch1, x));
          }};
}

LinearMap switch_map(const Channel& ch0, const Channel& ch1,
                     const ControlState& c) {
  require_same_dim(ch0.dim(), ch1.dim());
  const Complex a = c.a();
  const Complex b = c.b();
  return {ch0.dim(), 2 * ch0.dim(), [ch0, ch1, a, b](const ComplexMatrix& x) {
            const int d = ch0.dim();
            ComplexMatrix off = ComplexMatrix::Zero(d, d);
            ComplexMatrix off_rev = ComplexMatrix::Zero(d, d);
            for (const auto& k : ch0.kraus()) {
              for (const auto& l : ch1.kraus()) {
                off += l * k * x * l.adjoint() * k.adjoint();
                off_rev += k * l * x * k.adjoint() * l.adjoint();
              }
            }
            return assemble(std::norm(a) * apply_linear(ch1, apply_linear(ch0, x)),
                            a * std::conj(b) * off, std::conj(a) * b * off_rev,
                            std::norm(b) * apply_linear(ch0, apply_linear(ch1, x)));
          }};
}

ControlledOutput controlled_output(const ChannelImplementation& i0,
                                   const ChannelImplementation& i1,
                                   const ControlState& c,
                                   const ComplexMatrix& rho) {
  const LinearMap map = controlled_map(i0, i1, c);
  require_input(map.dim_in, rho);
  return ControlledOutput(map(rho));
}

ControlledOutput classical_control(const ChannelImplementation& i0,
                                   const ChannelImplementation& i1,
                                   std::array<double, 2> weights,
                                   const ComplexMatrix& rho) {
  const LinearMap map = classical_map(i0.channel(), i1.channel(), weights);
  require_input(map.dim_in, rho);
  return ControlledOutput(map(rho));
}

ControlledOutput switch_output(const Channel& ch0, const Channel& ch1,
                               const ControlState& c, const ComplexMatrix& rho) {
  const LinearMap map = switch_map(ch0, ch1, c);
  require_input(map.dim_in, rho);
  return ControlledOutput(map(rho));
}

namespace {

// |env> embedded in an (n+1)-level register: level 0 holds the weight
// sqrt(1 - <env|env>) orthogonal to the dilation states, level i+1 holds
// <i|env>.
ComplexVector embed_env(const ComplexVector& env) {
  ComplexVector out(env.size() + 1);
  out(0) = std::sqrt(std::max(0.0, 1.0 - env.squaredNorm()));
  out.tail(env.size()) = env;
  return out;
}

// V|psi> = sum_i K_i|psi> (x) |i+1>, laid out target-major.
ComplexVector dilate(const Channel& ch, const ComplexVector& psi) {
  const int d = ch.dim();
  const auto levels = static_cast<Eigen::Index>(ch.kraus_count()) + 1;
  ComplexVector out = ComplexVector::Zero(d * levels);
  for (std::size_t i = 0; i < ch.kraus_count(); ++i) {
    const ComplexVector k_psi = ch.kraus()[i] * psi;
    for (int t = 0; t < d; ++t) {
      out(t * levels + static_cast<Eigen::Index>(i) + 1) = k_psi(t);
    }
  }
  return out;
}

}  // namespace

ControlledOutput stinespring_oracle(const ChannelImplementation& i0,
                                    const ChannelImplementation& i1,
                                    const ControlState& c,
                                    const ComplexMatrix& rho) {
  require_same_dim(i0.dim(), i1.dim());
  const int d = i0.dim();
  require_input(d, rho);

  const ComplexVector e0 = embed_env(i0.env());
  const ComplexVector e1 = embed_env(i1.env());
  const auto n0 = e0.size();
  const auto n1 = e1.size();
  const int env_dim = static_cast<int>(n0 * n1);
  const Eigen::Index branch = static_cast<Eigen::Index>(d) * env_dim;

  const HermitianEig eig = hermitian_eig(rho);
  ComplexMatrix joint = ComplexMatrix::Zero(2 * d, 2 * d);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double weight = eig.values(k);
    if (weight <= 0.0) continue;
    const ComplexVector psi = eig.vectors.col(k);

    // control (x) target (x) env0 (x) env1, first factor slowest.
    ComplexVector state = ComplexVector::Zero(2 * branch);
    const ComplexVector arm0 = dilate(i0.channel(), psi);  // target (x) env0
    const ComplexVector arm1 = dilate(i1.channel(), psi);  // target (x) env1
    for (int t = 0; t < d; ++t) {
      for (Eigen::Index x = 0; x < n0; ++x) {
        for (Eigen::Index y = 0; y < n1; ++y) {
          const Eigen::Index idx = (static_cast<Eigen::Index>(t) * n0 + x) * n1 + y;
          state(idx) = c.a() * arm0(t * n0 + x) * e1(y);
          state(branch + idx) = c.b() * e0(x) * arm1(t * n1 + y);
        }
      }
    }
    const ComplexMatrix pure = state * state.adjoint();
    joint += weight * partial_trace(pure, 2 * d, env_dim, Keep::first);
  }
  return ControlledOutput(std::move(joint));
}

}  // namespace cohctl
