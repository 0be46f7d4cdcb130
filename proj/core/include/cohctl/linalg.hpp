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

// Dense complex linear algebra shared by every other module.
//
// Conventions:
//   * computational basis |0>,...,|d-1>, 0-indexed;
//   * tensor(a, b) puts the first factor on the slow index, so a 2d x 2d
//     control-target operator is a 2 x 2 grid of d x d target blocks;
//   * all comparisons are tolerance based.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

#include "cohctl/error.hpp"

namespace cohctl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance for validation predicates (Hermiticity, unit trace, PSD, ...).
inline constexpr double kDefaultTol = 1e-9;
/// Relative eigenvalue cutoff used by the pseudoinverse and canonical Kraus.
inline constexpr double kDefaultRankTol = 1e-12;

/// |T>> = sum_m |m> (x) T|m>, an element of H_in (x) H_out. The amplitude
/// at index m * dim_out + n is <n|T|m>.
struct ChoiVector {
  int dim_in = 0;
  int dim_out = 0;
  ComplexVector amplitudes;
};

enum class Keep { first, second };

struct HermitianEig {
  RealVector values;     // descending
  ComplexMatrix vectors; // orthonormal columns, matching `values`
};

// Elementary operators.
ComplexMatrix identity(int d);
ComplexMatrix ket(int d, int k);                   // d x 1 column
ComplexMatrix ket_bra(int d, int row, int col);    // |row><col|
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix pure_density(const ComplexVector& psi);  // |psi><psi|/<psi|psi>

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a (dim_first*dim_second)-square operator over the factor
/// that is not kept.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first,
                            int dim_second, Keep keep);

ChoiVector choi_vec(const ComplexMatrix& t);
ComplexMatrix unvec(const ChoiVector& v);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws Errc::not_hermitian unless `m` is square and Hermitian within `tol`.
HermitianEig hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix: the eigenpairs with
/// lambda > rank_tol * lambda_max are inverted, the rest dropped.
ComplexMatrix pseudoinverse(const ComplexMatrix& m,
                            double rank_tol = kDefaultRankTol,
                            double tol = kDefaultTol);

RealVector singular_values(const ComplexMatrix& m);
double trace_norm(const ComplexMatrix& m);
double spectral_norm(const ComplexMatrix& m);
double hs_norm(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);
/// True iff u^dagger u = 1 (columns orthonormal); allows rows >= cols.
bool is_isometry(const ComplexMatrix& u, double tol = kDefaultTol);

/// Validates Hermitian, unit trace and PSD within `tol`; throws
/// Errc::invalid_density_matrix (or not_square) otherwise.
void require_density_matrix(const ComplexMatrix& rho, double tol = kDefaultTol);
bool is_density_matrix(const ComplexMatrix& rho, double tol = kDefaultTol);

double min_eigenvalue(const ComplexMatrix& hermitian);

}  // namespace cohctl
