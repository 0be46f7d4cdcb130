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

// Channel implementations: a Kraus list plus the environment state of its
// Stinespring dilation. Two implementations of the same CPTP map act
// identically on their own, but once the map is coherently controlled the
// interference blocks depend on the transformation matrix
//
//     T = sum_i <env|i> K_i
//
// and the set of reachable T for a channel with Choi matrix C is
// { T : |T>> in range(C), <<T|C^+|T>> <= 1 }.

#pragma once

#include <string_view>

#include "cohctl/channel.hpp"

namespace cohctl {

inline constexpr double kAdmissibilityTol = 1e-8;

/// A channel together with the environment amplitudes <i|env>, one per Kraus
/// operator. <env|env> may be below one: the remaining weight sits on
/// environment states the dilation never references.
class ChannelImplementation {
 public:
  /// Throws Errc::length_mismatch or Errc::env_not_normalizable.
  ChannelImplementation(Channel channel, ComplexVector env,
                        double tol = kDefaultTol);

  const Channel& channel() const noexcept { return channel_; }
  const ComplexVector& env() const noexcept { return env_; }
  int dim() const noexcept { return channel_.dim(); }

 private:
  Channel channel_;
  ComplexVector env_;
};

struct TransformationMatrix {
  ComplexMatrix matrix;
};

/// T = sum_i conj(env_i) K_i.
TransformationMatrix transformation_matrix(const ChannelImplementation& impl);

struct Admissibility {
  bool admissible = false;
  double range_residual = 0.0;  // ||(1 - C C^+)|T>>|| / ||T>>||, 0 for T = 0
  double quadratic_form = 0.0;  // <<T|C^+|T>>
};

Admissibility admissible(const Channel& ch, const TransformationMatrix& t,
                         double tol = kAdmissibilityTol);

/// Builds an implementation over the canonical Kraus operators C_k of `ch`
/// whose transformation matrix is `t`. Throws Errc::inadmissible (message
/// carries both diagnostics) when `t` is outside the admissible set.
ChannelImplementation realize(const Channel& ch, const TransformationMatrix& t,
                              double tol = kAdmissibilityTol);

// Worked families. Each throws Errc::out_of_range when the requested T lies
// outside the family's constraint.

/// {K_0 = 1}, <env|0> = alpha, T = alpha * 1.
ChannelImplementation identity_implementation(int d, Complex alpha);
/// {K_0 = U}, T = alpha * U.
ChannelImplementation unitary_implementation(const ComplexMatrix& u,
                                             Complex alpha);
/// Weyl Kraus {U_i/d}, <env|i> = Tr[U_i^dagger T]; needs Tr[T^dagger T] <= 1/d.
ChannelImplementation depolarising_implementation(int d,
                                                  const ComplexMatrix& t);
/// Kraus of partial_depolarising_channel with
/// <env|0> = Tr[T]/sqrt(d^2 q + 1 - q), <env|i> = Tr[U_i^dagger T]/sqrt(1-q).
ChannelImplementation partial_depolarising_implementation(
    int d, double q, const ComplexMatrix& t);
/// T = alpha sqrt(1-p) 1 + beta sqrt(p) sigma_z.
ChannelImplementation phase_flip_implementation(double p, Complex alpha,
                                                Complex beta);
/// T = alpha sqrt(1-p) 1 + beta sqrt(p) sigma_x.
ChannelImplementation bit_flip_implementation(double p, Complex alpha,
                                              Complex beta);

enum class ImplementationKind {
  identity,
  unitary,
  depolarising,
  partial_depolarising,
  phase_flip,
  bit_flip,
};

std::string_view to_string(ImplementationKind kind) noexcept;
ImplementationKind implementation_kind_from_string(std::string_view name);

struct ImplementationParams {
  int d = 2;
  double p = 0.0;        // q or p
  Complex alpha = 1.0;
  Complex beta = 0.0;
  ComplexMatrix matrix;  // U for unitary, T for (partial) depolarising
};

ChannelImplementation standard_implementation(ImplementationKind kind,
                                              const ImplementationParams& params);

}  // namespace cohctl
