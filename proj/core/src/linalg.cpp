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

#include "cohctl/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace cohctl {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::not_square: return "matrix not square";
    case Errc::not_hermitian: return "matrix not Hermitian";
    case Errc::negative_eigenvalue: return "negative eigenvalue";
    case Errc::invalid_density_matrix: return "invalid density matrix";
    case Errc::trace_preservation: return "trace preservation violated";
    case Errc::invalid_choi: return "invalid Choi matrix";
    case Errc::not_unitary: return "matrix not unitary";
    case Errc::out_of_range: return "parameter out of range";
    case Errc::length_mismatch: return "length mismatch";
    case Errc::env_not_normalizable: return "environment not normalizable";
    case Errc::inadmissible: return "inadmissible transformation matrix";
    case Errc::unknown_case: return "unknown case";
    case Errc::schema: return "schema violation";
  }
  return "error";
}

namespace {

double scale_of(const ComplexMatrix& m) {
  return std::max(1.0, m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::not_square, std::string(who) + ": got " +
                                      std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()));
  }
}

}  // namespace

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix ket(int d, int k) {
  if (k < 0 || k >= d) throw Error(Errc::out_of_range, "ket index");
  ComplexMatrix v = ComplexMatrix::Zero(d, 1);
  v(k, 0) = 1.0;
  return v;
}

ComplexMatrix ket_bra(int d, int row, int col) {
  if (row < 0 || row >= d || col < 0 || col >= d) {
    throw Error(Errc::out_of_range, "ket_bra index");
  }
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0,
       1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0),
       Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0,
       0.0, -1.0;
  return m;
}

ComplexMatrix pure_density(const ComplexVector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 == 0.0) throw Error(Errc::out_of_range, "pure_density: zero vector");
  return psi * psi.adjoint() / n2;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first,
                            int dim_second, Keep keep) {
  if (dim_first <= 0 || dim_second <= 0 ||
      m.rows() != static_cast<Eigen::Index>(dim_first) * dim_second ||
      m.cols() != m.rows()) {
    throw Error(Errc::dimension_mismatch,
                "partial_trace: operator is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", factors " +
                    std::to_string(dim_first) + "*" + std::to_string(dim_second));
  }
  if (keep == Keep::first) {
    ComplexMatrix out(dim_first, dim_first);
    for (int i = 0; i < dim_first; ++i) {
      for (int j = 0; j < dim_first; ++j) {
        out(i, j) = m.block(i * dim_second, j * dim_second, dim_second,
                            dim_second).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_second, dim_second);
  for (int i = 0; i < dim_first; ++i) {
    out += m.block(i * dim_second, i * dim_second, dim_second, dim_second);
  }
  return out;
}

ChoiVector choi_vec(const ComplexMatrix& t) {
  ChoiVector v;
  v.dim_in = static_cast<int>(t.cols());
  v.dim_out = static_cast<int>(t.rows());
  v.amplitudes.resize(t.size());
  for (Eigen::Index m = 0; m < t.cols(); ++m) {
    for (Eigen::Index n = 0; n < t.rows(); ++n) {
      v.amplitudes(m * t.rows() + n) = t(n, m);
    }
  }
  return v;
}

ComplexMatrix unvec(const ChoiVector& v) {
  if (v.amplitudes.size() != static_cast<Eigen::Index>(v.dim_in) * v.dim_out) {
    throw Error(Errc::length_mismatch, "unvec: amplitude count != dim_in*dim_out");
  }
  ComplexMatrix t(v.dim_out, v.dim_in);
  for (int m = 0; m < v.dim_in; ++m) {
    for (int n = 0; n < v.dim_out; ++n) {
      t(n, m) = v.amplitudes(m * v.dim_out + n);
    }
  }
  return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::dimension_mismatch, "max_abs_diff");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale_of(m);
}

HermitianEig hermitian_eig(const ComplexMatrix& m, double tol) {
  require_square(m, "hermitian_eig");
  if (!is_hermitian(m, tol)) {
    throw Error(Errc::not_hermitian, "hermitian_eig: input not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const Eigen::Index n = m.rows();
  HermitianEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

ComplexMatrix pseudoinverse(const ComplexMatrix& m, double rank_tol,
                            double tol) {
  const HermitianEig eig = hermitian_eig(m, tol);
  const Eigen::Index n = m.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  if (n == 0) return out;
  const double lambda_max = eig.values(0);
  if (eig.values(n - 1) < -tol * std::max(1.0, std::abs(lambda_max))) {
    throw Error(Errc::negative_eigenvalue,
                "pseudoinverse: eigenvalue " + std::to_string(eig.values(n - 1)));
  }
  if (lambda_max <= 0.0) return out;
  const double cutoff = rank_tol * lambda_max;
  for (Eigen::Index k = 0; k < n && eig.values(k) > cutoff; ++k) {
    out += eig.vectors.col(k) * eig.vectors.col(k).adjoint() / eig.values(k);
  }
  return out;
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

double spectral_norm(const ComplexMatrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s.maxCoeff();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

bool is_isometry(const ComplexMatrix& u, double tol) {
  if (u.rows() < u.cols()) return false;
  return approx_equal(u.adjoint() * u, identity(static_cast<int>(u.cols())), tol);
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() && is_isometry(u, tol);
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  const HermitianEig eig = hermitian_eig(hermitian);
  return eig.values.size() == 0 ? 0.0 : eig.values(eig.values.size() - 1);
}

void require_density_matrix(const ComplexMatrix& rho, double tol) {
  require_square(rho, "density matrix");
  if (rho.rows() == 0) {
    throw Error(Errc::invalid_density_matrix, "empty matrix");
  }
  if (!is_hermitian(rho, tol)) {
    throw Error(Errc::invalid_density_matrix, "not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(Errc::invalid_density_matrix,
                "trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lo = min_eigenvalue(rho);
  if (lo < -tol) {
    throw Error(Errc::invalid_density_matrix,
                "min eigenvalue " + std::to_string(lo) + " < 0");
  }
}

bool is_density_matrix(const ComplexMatrix& rho, double tol) {
  try {
    require_density_matrix(rho, tol);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace cohctl
