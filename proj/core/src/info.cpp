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

#include "cohctl/info.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cohctl {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double entropy(const ComplexMatrix& rho) {
  require_density_matrix(rho);
  const HermitianEig eig = hermitian_eig(rho);
  double h = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -kEntropyClampTol) {
      throw Error(Errc::negative_eigenvalue,
                  "entropy: eigenvalue " + std::to_string(lambda));
    }
    h += plogp(lambda);
  }
  return h;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::out_of_range, "binary_entropy: p outside [0, 1]");
  }
  return plogp(p) + plogp(1.0 - p);
}

double shannon_entropy(const std::vector<double>& probabilities) {
  double h = 0.0;
  for (double p : probabilities) h += plogp(p);
  return h;
}

Ensemble::Ensemble(std::vector<EnsembleItem> items, double tol)
    : items_(std::move(items)) {
  if (items_.empty()) throw Error(Errc::length_mismatch, "empty ensemble");
  double total = 0.0;
  const auto d = items_.front().state.rows();
  for (const auto& item : items_) {
    if (item.probability < 0.0) {
      throw Error(Errc::out_of_range, "negative ensemble probability");
    }
    if (item.state.rows() != d) {
      throw Error(Errc::dimension_mismatch, "ensemble states differ in dimension");
    }
    require_density_matrix(item.state, tol);
    total += item.probability;
  }
  if (std::abs(total - 1.0) > tol) {
    throw Error(Errc::out_of_range,
                "ensemble probabilities sum to " + std::to_string(total));
  }
}

double holevo_lower_bound(const LinearMap& map, const Ensemble& ensemble) {
  if (ensemble.dim() != map.dim_in) {
    throw Error(Errc::dimension_mismatch, "ensemble dimension != map input");
  }
  std::vector<double> probabilities;
  ComplexMatrix average = ComplexMatrix::Zero(map.dim_out, map.dim_out);
  double conditional = 0.0;
  for (const auto& item : ensemble.items()) {
    probabilities.push_back(item.probability);
    if (item.probability == 0.0) continue;
    const ComplexMatrix out = map(item.state);
    average += item.probability * out;
    conditional += item.probability * entropy(out);
  }
  const double h_a = shannon_entropy(probabilities);
  const double h_b = entropy(average);
  const double h_ab = h_a + conditional;
  return h_a + h_b - h_ab;
}

ComplexMatrix apply_on_second(const LinearMap& map, const ComplexMatrix& nu0) {
  const auto din = static_cast<Eigen::Index>(map.dim_in);
  if (nu0.rows() != nu0.cols() || nu0.rows() % din != 0) {
    throw Error(Errc::dimension_mismatch,
                "bipartite input is not (r*" + std::to_string(din) + ")-square");
  }
  const Eigen::Index r = nu0.rows() / din;
  const Eigen::Index dout = map.dim_out;
  ComplexMatrix nu(r * dout, r * dout);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      nu.block(i * dout, j * dout, dout, dout) =
          map(nu0.block(i * din, j * din, din, din));
    }
  }
  return nu;
}

double coherent_info_bound(const LinearMap& map, const ComplexMatrix& nu0) {
  require_density_matrix(nu0);
  const ComplexMatrix nu = apply_on_second(map, nu0);
  const int r = static_cast<int>(nu0.rows() / map.dim_in);
  const ComplexMatrix nu_b = partial_trace(nu, r, map.dim_out, Keep::second);
  return entropy(nu_b) - entropy(nu);
}

double switch_holevo_qubit() {
  return -3.0 / 8.0 - 5.0 / 8.0 * std::log2(5.0 / 8.0);
}

double cc_dephasing_bound(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::out_of_range, "cc_dephasing_bound: p outside [0, 1]");
  }
  return p - binary_entropy(p) + binary_entropy((1.0 - p) / 2.0);
}

double cc_depolarising_holevo(int d) {
  if (d < 2) throw Error(Errc::out_of_range, "cc_depolarising_holevo: d < 2");
  return std::log2(5.0 / 4.0) / d;
}

GridSearchResult qubit_holevo_grid_search(const LinearMap& map,
                                          double angle_step,
                                          double probability_step) {
  if (map.dim_in != 2) {
    throw Error(Errc::dimension_mismatch, "grid search is over qubit inputs");
  }
  if (!(angle_step > 0.0) || !(probability_step > 0.0)) {
    throw Error(Errc::out_of_range, "grid steps must be positive");
  }
  const double pi = std::numbers::pi;
  const int n_theta = static_cast<int>(std::lround(pi / angle_step));
  const int n_phi = static_cast<int>(std::lround(2.0 * pi / angle_step));
  const int n_prob = static_cast<int>(std::lround(1.0 / probability_step));

  const ComplexMatrix first = ket_bra(2, 0, 0);
  const ComplexMatrix first_out = map(first);
  const double first_entropy = entropy(first_out);

  GridSearchResult best;
  for (int it = 0; it <= n_theta; ++it) {
    const double theta = it * angle_step;
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = ip * angle_step;
      ComplexVector psi(2);
      psi << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
      const ComplexMatrix second_out = map(psi * psi.adjoint());
      const double second_entropy = entropy(second_out);
      for (int iq = 0; iq <= n_prob; ++iq) {
        const double p = std::min(1.0, iq * probability_step);
        const ComplexMatrix average = p * first_out + (1.0 - p) * second_out;
        const double value = entropy(average) - p * first_entropy -
                             (1.0 - p) * second_entropy;
        ++best.evaluations;
        if (value > best.best) {
          best.best = value;
          best.theta = theta;
          best.phi = phi;
          best.probability = p;
        }
      }
      if (it == 0 || it == n_theta) break;  // poles: azimuth irrelevant
    }
  }
  return best;
}

}  // namespace cohctl
