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

// Shared helpers for the unit tests: seeded generators and independent
// reference computations that do not go through the library code under test.

#pragma once

#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cohctl/linalg.hpp"
#include "cohctl/random.hpp"

namespace cohctl::test {

inline Rng seeded(std::uint64_t salt = 0) { return Rng(20261019u + salt); }

inline ComplexVector basis(int d, int k) {
  ComplexVector v = ComplexVector::Zero(d);
  v(k) = 1.0;
  return v;
}

inline ComplexVector plus_state() {
  ComplexVector v(2);
  v << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  return v;
}

inline ComplexMatrix bell_density() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v * v.adjoint();
}

// Reference Kronecker product written from the index definition.
inline ComplexMatrix kron_reference(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

// Reference von Neumann entropy straight from Eigen's eigensolver.
inline double entropy_reference(const ComplexMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (rho + rho.adjoint()));
  double h = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double v = es.eigenvalues()(k);
    if (v > 1e-15) h -= v * std::log2(v);
  }
  return h;
}

// Reference trace norm as the sum of singular values via BDCSVD.
inline double trace_norm_reference(const ComplexMatrix& m) {
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues().sum();
}

inline ComplexMatrix reference_partial_trace_first_kept(const ComplexMatrix& m, int d1,
                                                        int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) {
      for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    }
  }
  return out;
}

inline ComplexMatrix reference_partial_trace_second_kept(const ComplexMatrix& m, int d1,
                                                         int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i) {
    for (int j = 0; j < d2; ++j) {
      for (int k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
    }
  }
  return out;
}

#define COHCTL_REQUIRE_CLOSE(a, b, tol)                                   \
  do {                                                                   \
    const double cohctl_dev_ = ::cohctl::max_abs_diff((a), (b));         \
    INFO("max entrywise deviation " << cohctl_dev_);                     \
    REQUIRE(cohctl_dev_ <= (tol));                                       \
  } while (false)

#define COHCTL_REQUIRE_ERRC(expr, errc)                                   \
  do {                                                                   \
    bool cohctl_thrown_ = false;                                         \
    try {                                                                \
      (void)(expr);                                                      \
    } catch (const ::cohctl::Error& e) {                                 \
      cohctl_thrown_ = true;                                             \
      INFO(e.what());                                                    \
      REQUIRE(e.code() == (errc));                                       \
    }                                                                    \
    REQUIRE(cohctl_thrown_);                                             \
  } while (false)

}  // namespace cohctl::test
