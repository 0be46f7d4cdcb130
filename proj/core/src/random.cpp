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

#include "cohctl/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace cohctl {

ComplexMatrix random_gaussian(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexMatrix random_isometry(Rng& rng, int rows, int cols) {
  if (rows < cols) throw Error(Errc::dimension_mismatch, "isometry needs rows >= cols");
  const ComplexMatrix g = random_gaussian(rng, rows, cols);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

ComplexMatrix random_unitary(Rng& rng, int n) { return random_isometry(rng, n, n); }

ComplexMatrix random_hermitian(Rng& rng, int n) {
  const ComplexMatrix g = random_gaussian(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_psd(Rng& rng, int n, int rank) {
  const ComplexMatrix g = random_gaussian(rng, n, rank);
  return g * g.adjoint();
}

ComplexMatrix random_density(Rng& rng, int d) {
  const ComplexMatrix p = random_psd(rng, d, d);
  return p / p.trace().real();
}

ComplexVector random_pure_state(Rng& rng, int d) {
  const ComplexVector v = random_gaussian(rng, d, 1);
  return v / v.norm();
}

Channel random_channel(Rng& rng, int d, int kraus_count) {
  const ComplexMatrix v = random_isometry(rng, d * kraus_count, d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_count));
  for (int i = 0; i < kraus_count; ++i) kraus.push_back(v.middleRows(i * d, d));
  return validate_channel(std::move(kraus));
}

ComplexVector random_subnormalized(Rng& rng, int n, double max_norm) {
  std::uniform_real_distribution<double> uniform(0.0, max_norm);
  const ComplexVector v = random_gaussian(rng, n, 1);
  return v / v.norm() * uniform(rng);
}

}  // namespace cohctl
