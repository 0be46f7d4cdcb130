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

#include <vector>

#include "cohctl/control.hpp"

namespace cohctl {

/// Eigenvalues in (-1e-12, 0) are treated as zero; anything lower throws.
inline constexpr double kEntropyClampTol = 1e-12;

/// Von Neumann entropy in bits.
double entropy(const ComplexMatrix& rho);
/// H2(p) = -p log2 p - (1-p) log2 (1-p), H2(0) = H2(1) = 0.
double binary_entropy(double p);
/// Shannon entropy of a probability vector, in bits.
double shannon_entropy(const std::vector<double>& probabilities);

struct EnsembleItem {
  double probability = 0.0;
  ComplexMatrix state;
};

class Ensemble {
 public:
  /// Probabilities >= 0 summing to one; states valid and of equal dimension.
  explicit Ensemble(std::vector<EnsembleItem> items, double tol = kDefaultTol);

  const std::vector<EnsembleItem>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  int dim() const noexcept { return static_cast<int>(items_.front().state.rows()); }

 private:
  std::vector<EnsembleItem> items_;
};

/// I(A;B) on nu = sum_a p_a |a><a| (x) map(rho_a), using the classical-quantum
/// block structure: H(A) = H(p), H(AB) = H(p) + sum_a p_a H(map(rho_a)).
double holevo_lower_bound(const LinearMap& map, const Ensemble& ensemble);

/// H(B) - H(AB) for nu = (id (x) map)(nu0), nu0 on reference (x) input with
/// the reference first. The reference dimension is nu0.rows() / map.dim_in.
double coherent_info_bound(const LinearMap& map, const ComplexMatrix& nu0);

/// (id (x) map)(nu0) itself.
ComplexMatrix apply_on_second(const LinearMap& map, const ComplexMatrix& nu0);

/// -3/8 - (5/8) log2(5/8): qubit Holevo information of the depolarising switch.
double switch_holevo_qubit();
/// p - H2(p) + H2((1-p)/2): coherent-information bound for the coherently
/// controlled phase-flip / bit-flip pair with T = sqrt(p) sigma_z, sqrt(p) sigma_x.
double cc_dephasing_bound(double p);
/// (1/d) log2(5/4): Holevo lower bound for two coherently controlled
/// depolarising channels with T0 = T1 = |0><0|/sqrt(d).
double cc_depolarising_holevo(int d);

struct GridSearchResult {
  double best = 0.0;
  double theta = 0.0;  // polar angle of the second state
  double phi = 0.0;    // azimuth of the second state
  double probability = 0.0;  // weight of the first state
  std::size_t evaluations = 0;
};

/// Maximizes holevo_lower_bound over binary qubit pure-state ensembles on a
/// grid: Bloch angles in steps of `angle_step`, probability in steps of
/// `probability_step`. The first state is pinned to |0> and its azimuth to
/// zero; this loses nothing for maps covariant under target unitaries, such
/// as the depolarising switch.
GridSearchResult qubit_holevo_grid_search(const LinearMap& map,
                                          double angle_step,
                                          double probability_step);

}  // namespace cohctl
