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

// Global maps rho_in (target) -> rho_out (control (x) target):
//
//   coherent control   [[|a|^2 C0(rho),      a b* T0 rho T1^dag],
//                       [a* b T1 rho T0^dag, |b|^2 C1(rho)     ]]
//
//   quantum switch     [[|a|^2 C1.C0(rho),                 a b* sum L_j K_i rho L_j^dag K_i^dag],
//                       [a* b sum K_i L_j rho K_i^dag L_j^dag, |b|^2 C0.C1(rho)                  ]]
//
// The control qubit is the first tensor factor.

#pragma once

#include <array>
#include <functional>

#include "cohctl/implementation.hpp"

namespace cohctl {

/// a|0> + b|1>, normalized within tolerance.
class ControlState {
 public:
  ControlState(Complex a, Complex b, double tol = kDefaultTol);

  static ControlState plus();
  static ControlState zero();
  static ControlState one();

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

 private:
  Complex a_;
  Complex b_;
};

class ControlledOutput {
 public:
  /// `matrix` must be 2d x 2d.
  explicit ControlledOutput(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int target_dim() const noexcept { return static_cast<int>(matrix_.rows() / 2); }

  ComplexMatrix block(int row, int col) const;
  ComplexMatrix diag0() const { return block(0, 0); }
  ComplexMatrix diag1() const { return block(1, 1); }
  ComplexMatrix offdiag01() const { return block(0, 1); }
  ComplexMatrix offdiag10() const { return block(1, 0); }

  ComplexMatrix control_marginal() const;
  ComplexMatrix target_marginal() const;

  /// Hermitian, unit trace, PSD, offdiag10 = offdiag01^dagger, within tol.
  bool is_valid(double tol = kDefaultTol) const;

 private:
  ComplexMatrix matrix_;
};

/// A linear map on operators with fixed input/output dimensions. Used where
/// the map has to act on non-density operators, e.g. half of a bipartite
/// state.
struct LinearMap {
  int dim_in = 0;
  int dim_out = 0;
  std::function<ComplexMatrix(const ComplexMatrix&)> apply;

  ComplexMatrix operator()(const ComplexMatrix& x) const { return apply(x); }
};

LinearMap channel_map(const Channel& ch);
LinearMap controlled_map(const ChannelImplementation& i0,
                         const ChannelImplementation& i1, const ControlState& c);
LinearMap classical_map(const Channel& ch0, const Channel& ch1,
                        std::array<double, 2> weights);
LinearMap switch_map(const Channel& ch0, const Channel& ch1,
                     const ControlState& c);

ControlledOutput controlled_output(const ChannelImplementation& i0,
                                   const ChannelImplementation& i1,
                                   const ControlState& c,
                                   const ComplexMatrix& rho);

/// Independent route to controlled_output: builds the joint pure state over
/// control (x) target (x) env0 (x) env1 for each eigenvector of rho, traces
/// out both environments and mixes by eigenvalue. Each environment register
/// has (Kraus count + 1) levels; level 0 carries whatever part of |env> lies
/// outside the span of the dilation states |i>, which are levels 1..n.
ControlledOutput stinespring_oracle(const ChannelImplementation& i0,
                                    const ChannelImplementation& i1,
                                    const ControlState& c,
                                    const ComplexMatrix& rho);

/// w0 |0><0| (x) C0(rho) + w1 |1><1| (x) C1(rho). Errc::out_of_range for
/// negative weights or weights not summing to one.
ControlledOutput classical_control(const ChannelImplementation& i0,
                                   const ChannelImplementation& i1,
                                   std::array<double, 2> weights,
                                   const ComplexMatrix& rho);

ControlledOutput switch_output(const Channel& ch0, const Channel& ch1,
                               const ControlState& c, const ComplexMatrix& rho);

}  // namespace cohctl
