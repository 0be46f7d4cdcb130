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

// Telling apart two implementations (T1 vs T1') of the same channel C1 when
// it is coherently controlled against a fixed implementation (C0, T0).
// Only the off-diagonal blocks of the two outputs differ, which gives
//
//   D(outputs) = |a b| * || tau rho T0^dagger ||_1,   tau = T1 - T1'
//
// bounded above by ||tau||_2 / 2 for the |+> control, with equality for
// C0 = identity, T0 = 1 and the top eigenvector of tau^dagger tau as input.

#pragma once

#include "cohctl/control.hpp"

namespace cohctl {

class DiscriminationInstance {
 public:
  /// Throws Errc::dimension_mismatch on differing dimensions and
  /// Errc::invalid_choi when the candidates are different channels.
  DiscriminationInstance(ChannelImplementation fixed,
                         ChannelImplementation candidate_a,
                         ChannelImplementation candidate_b,
                         double tol = kDefaultTol);

  const ChannelImplementation& fixed() const noexcept { return fixed_; }
  const ChannelImplementation& candidate_a() const noexcept { return a_; }
  const ChannelImplementation& candidate_b() const noexcept { return b_; }

  /// tau = T1 - T1'.
  ComplexMatrix tau() const;

 private:
  ChannelImplementation fixed_;
  ChannelImplementation a_;
  ChannelImplementation b_;
};

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

struct OutputDistance {
  double direct = 0.0;       // trace distance of the two controlled outputs
  double closed_form = 0.0;  // |a b| * ||tau rho T0^dagger||_1
};

OutputDistance output_distance(const DiscriminationInstance& inst,
                               const ControlState& c, const ComplexMatrix& rho);

/// ||T1 - T1'||_2 / 2.
double diamond_bound(const ComplexMatrix& t1, const ComplexMatrix& t1p);

/// Top eigenvector of tau^dagger tau, made deterministic: the top eigenspace
/// projector P is applied to the computational basis vector |k> with the
/// largest ||P|k>|| (lowest k on ties) and the result is phased so that its
/// k-th component is real positive. Errc::out_of_range when tau = 0.
ComplexVector optimal_input(const ComplexMatrix& t1, const ComplexMatrix& t1p);

/// Helstrom success probability (1 + distance) / 2.
double success_probability(double distance);

/// 1/sqrt(d): the largest diamond_bound over admissible depolarising pairs.
double max_depolarising_distance(int d);

}  // namespace cohctl
