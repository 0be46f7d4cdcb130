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

#pragma once

#include <string_view>
#include <vector>

#include "cohctl/linalg.hpp"

namespace cohctl {

/// A CPTP map on a d-dimensional system, held as a Kraus list with
/// sum_i K_i^dagger K_i = 1. Only constructible through validate_channel(),
/// so every instance is trace preserving.
class Channel {
 public:
  int dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  std::size_t kraus_count() const noexcept { return kraus_.size(); }

 private:
  Channel(int dim, std::vector<ComplexMatrix> kraus)
      : dim_(dim), kraus_(std::move(kraus)) {}
  friend Channel validate_channel(std::vector<ComplexMatrix>, double);

  int dim_;
  std::vector<ComplexMatrix> kraus_;
};

struct ChoiMatrix {
  int dim_in = 0;
  int dim_out = 0;
  ComplexMatrix matrix;  // (dim_in*dim_out)-square, input factor first
};

/// Errors: not_square, dimension_mismatch, trace_preservation (distinct).
Channel validate_channel(std::vector<ComplexMatrix> kraus,
                         double tol = kDefaultTol);

/// sum_i K_i rho K_i^dagger for a validated density matrix rho.
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho,
                    double tol = kDefaultTol);
/// Same sum without input validation; the map is linear on any d x d operator.
ComplexMatrix apply_linear(const Channel& ch, const ComplexMatrix& x);

ChoiMatrix choi_of(const Channel& ch);

/// Checks PSD and Tr_out C = 1_in; throws Errc::invalid_choi otherwise.
void validate_choi(const ChoiMatrix& c, double tol = kDefaultTol);

/// C(rho) = Tr_in[C (rho^T (x) 1)], evaluated from the Choi matrix alone.
ComplexMatrix apply_via_choi(const ChoiMatrix& c, const ComplexMatrix& rho);

/// Eigenpairs of a Choi matrix above the relative cutoff; `kraus[k]` is
/// unvec(sqrt(lambda_k) v_k) and `vectors.col(k)` is v_k.
struct CanonicalDecomposition {
  RealVector values;
  ComplexMatrix vectors;
  std::vector<ComplexMatrix> kraus;
};
CanonicalDecomposition canonical_decomposition(
    const ChoiMatrix& c, double rank_tol = kDefaultRankTol);

Channel canonical_kraus(const ChoiMatrix& c,
                        double rank_tol = kDefaultRankTol);

/// New Kraus list K_i = sum_r u_ir M_r. `u` must be an isometry
/// (u^dagger u = 1) with u.cols() >= kraus count; missing M_r are zero.
Channel remix(const Channel& ch, const ComplexMatrix& u,
              double tol = kDefaultTol);

/// Weyl-Heisenberg basis U_(a,b) = X^a Z^b, index a*d + b.
std::vector<ComplexMatrix> weyl_basis(int d);

enum class ChannelKind {
  identity,
  unitary,
  depolarising,
  partial_depolarising,
  phase_flip,
  bit_flip,
  constant,
};

std::string_view to_string(ChannelKind kind) noexcept;
ChannelKind channel_kind_from_string(std::string_view name);

Channel identity_channel(int d);
Channel unitary_channel(const ComplexMatrix& u);
/// Kraus {U_i / d} over the Weyl basis.
Channel depolarising_channel(int d);
/// q*I + (1-q)*N with Kraus {sqrt(d^2 q + 1 - q)/d * 1, sqrt(1-q)/d * U_i}.
Channel partial_depolarising_channel(int d, double q);
/// Kraus {sqrt(1-p) 1, sqrt(p) sigma_z}.
Channel phase_flip_channel(double p);
/// Kraus {sqrt(1-p) 1, sqrt(p) sigma_x}.
Channel bit_flip_channel(double p);
/// rho -> sigma with K_(j,m) = sqrt(lambda_j) |v_j><m|, zero eigenvalues skipped.
Channel constant_channel(const ComplexMatrix& sigma);

/// Parameters for the generic factory; which fields matter depends on kind.
struct ChannelParams {
  int d = 2;
  double p = 0.0;        // q for partial_depolarising, p for flips
  ComplexMatrix matrix;  // unitary or constant-channel target
};
Channel standard_channel(ChannelKind kind, const ChannelParams& params);

}  // namespace cohctl
