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

#include "cohctl/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cohctl {

namespace {

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::out_of_range,
                std::string(who) + ": parameter " + std::to_string(p) +
                    " outside [0, 1]");
  }
}

void require_dim(int d, const char* who) {
  if (d < 2) {
    throw Error(Errc::out_of_range, std::string(who) + ": d must be >= 2");
  }
}

}  // namespace

Channel validate_channel(std::vector<ComplexMatrix> kraus, double tol) {
  if (kraus.empty()) {
    throw Error(Errc::length_mismatch, "channel needs at least one Kraus operator");
  }
  const auto d = kraus.front().rows();
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    if (kraus[i].rows() != kraus[i].cols()) {
      throw Error(Errc::not_square, "Kraus operator " + std::to_string(i) +
                                        " is " + std::to_string(kraus[i].rows()) +
                                        "x" + std::to_string(kraus[i].cols()));
    }
    if (kraus[i].rows() != d) {
      throw Error(Errc::dimension_mismatch,
                  "Kraus operator " + std::to_string(i) + " has dimension " +
                      std::to_string(kraus[i].rows()) + ", expected " +
                      std::to_string(d));
    }
  }
  if (d == 0) throw Error(Errc::dimension_mismatch, "zero-dimensional Kraus operators");
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double residual = max_abs_diff(sum, identity(static_cast<int>(d)));
  if (residual > tol) {
    throw Error(Errc::trace_preservation,
                "max |sum K^dagger K - 1| = " + std::to_string(residual));
  }
  return Channel(static_cast<int>(d), std::move(kraus));
}

ComplexMatrix apply_linear(const Channel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
    throw Error(Errc::dimension_mismatch,
                "channel of dimension " + std::to_string(ch.dim()) +
                    " applied to " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + " operator");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (const auto& k : ch.kraus()) out += k * x * k.adjoint();
  return out;
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho, double tol) {
  if (rho.rows() != ch.dim() || rho.cols() != ch.dim()) {
    return apply_linear(ch, rho);  // throws dimension_mismatch
  }
  require_density_matrix(rho, tol);
  return apply_linear(ch, rho);
}

ChoiMatrix choi_of(const Channel& ch) {
  const int d = ch.dim();
  ChoiMatrix c{d, d, ComplexMatrix::Zero(d * d, d * d)};
  for (const auto& k : ch.kraus()) {
    const ComplexVector v = choi_vec(k).amplitudes;
    c.matrix += v * v.adjoint();
  }
  return c;
}

void validate_choi(const ChoiMatrix& c, double tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(c.dim_in) * c.dim_out;
  if (c.dim_in <= 0 || c.dim_out <= 0 || c.matrix.rows() != n ||
      c.matrix.cols() != n) {
    throw Error(Errc::invalid_choi, "shape does not match dim_in*dim_out");
  }
  if (!is_hermitian(c.matrix, tol)) {
    throw Error(Errc::invalid_choi, "not Hermitian");
  }
  const double lo = min_eigenvalue(c.matrix);
  if (lo < -tol) {
    throw Error(Errc::invalid_choi, "not PSD, min eigenvalue " + std::to_string(lo));
  }
  const ComplexMatrix marginal =
      partial_trace(c.matrix, c.dim_in, c.dim_out, Keep::first);
  if (!approx_equal(marginal, identity(c.dim_in), tol)) {
    throw Error(Errc::invalid_choi, "Tr_out C != 1_in");
  }
}

ComplexMatrix apply_via_choi(const ChoiMatrix& c, const ComplexMatrix& rho) {
  if (rho.rows() != c.dim_in || rho.cols() != c.dim_in) {
    throw Error(Errc::dimension_mismatch, "apply_via_choi: input dimension");
  }
  const ComplexMatrix lifted =
      c.matrix * tensor(rho.transpose(), identity(c.dim_out));
  return partial_trace(lifted, c.dim_in, c.dim_out, Keep::second);
}

CanonicalDecomposition canonical_decomposition(const ChoiMatrix& c,
                                               double rank_tol) {
  validate_choi(c);
  const HermitianEig eig = hermitian_eig(c.matrix);
  const double cutoff = rank_tol * eig.values(0);
  Eigen::Index rank = 0;
  while (rank < eig.values.size() && eig.values(rank) > cutoff) ++rank;

  CanonicalDecomposition out;
  out.values = eig.values.head(rank);
  out.vectors = eig.vectors.leftCols(rank);
  out.kraus.reserve(static_cast<std::size_t>(rank));
  for (Eigen::Index k = 0; k < rank; ++k) {
    ChoiVector v{c.dim_in, c.dim_out,
                 std::sqrt(eig.values(k)) * eig.vectors.col(k)};
    out.kraus.push_back(unvec(v));
  }
  return out;
}

Channel canonical_kraus(const ChoiMatrix& c, double rank_tol) {
  if (c.dim_in != c.dim_out) {
    throw Error(Errc::invalid_choi, "canonical_kraus: only square channels");
  }
  return validate_channel(canonical_decomposition(c, rank_tol).kraus);
}

Channel remix(const Channel& ch, const ComplexMatrix& u, double tol) {
  const auto n_in = static_cast<Eigen::Index>(ch.kraus_count());
  if (u.cols() < n_in) {
    throw Error(Errc::dimension_mismatch,
                "remix: u has " + std::to_string(u.cols()) + " columns for " +
                    std::to_string(n_in) + " Kraus operators");
  }
  if (!is_isometry(u, tol)) {
    throw Error(Errc::not_unitary, "remix: u^dagger u != 1");
  }
  std::vector<ComplexMatrix> out(static_cast<std::size_t>(u.rows()),
                                 ComplexMatrix::Zero(ch.dim(), ch.dim()));
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index r = 0; r < n_in; ++r) {
      out[static_cast<std::size_t>(i)] +=
          u(i, r) * ch.kraus()[static_cast<std::size_t>(r)];
    }
  }
  return validate_channel(std::move(out));
}

std::vector<ComplexMatrix> weyl_basis(int d) {
  require_dim(d, "weyl_basis");
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  ComplexMatrix xa = identity(d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix u = xa;
    for (int b = 0; b < d; ++b) {
      basis.push_back(u);
      u = u * z;
    }
    xa = x * xa;
  }
  return basis;
}

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::identity: return "identity";
    case ChannelKind::unitary: return "unitary";
    case ChannelKind::depolarising: return "depolarising";
    case ChannelKind::partial_depolarising: return "partial-depolarising";
    case ChannelKind::phase_flip: return "phase-flip";
    case ChannelKind::bit_flip: return "bit-flip";
    case ChannelKind::constant: return "constant";
  }
  return "?";
}

ChannelKind channel_kind_from_string(std::string_view name) {
  for (auto kind : {ChannelKind::identity, ChannelKind::unitary,
                    ChannelKind::depolarising, ChannelKind::partial_depolarising,
                    ChannelKind::phase_flip, ChannelKind::bit_flip,
                    ChannelKind::constant}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(Errc::out_of_range, "unknown channel kind '" + std::string(name) + "'");
}

Channel identity_channel(int d) {
  require_dim(d, "identity_channel");
  return validate_channel({identity(d)});
}

Channel unitary_channel(const ComplexMatrix& u) {
  if (!is_unitary(u)) throw Error(Errc::not_unitary, "unitary_channel");
  require_dim(static_cast<int>(u.rows()), "unitary_channel");
  return validate_channel({u});
}

Channel depolarising_channel(int d) {
  require_dim(d, "depolarising_channel");
  std::vector<ComplexMatrix> kraus = weyl_basis(d);
  for (auto& k : kraus) k /= static_cast<double>(d);
  return validate_channel(std::move(kraus));
}

Channel partial_depolarising_channel(int d, double q) {
  require_dim(d, "partial_depolarising_channel");
  require_probability(q, "partial_depolarising_channel");
  std::vector<ComplexMatrix> kraus = weyl_basis(d);
  const double dd = d;
  kraus[0] *= std::sqrt(dd * dd * q + 1.0 - q) / dd;
  for (std::size_t i = 1; i < kraus.size(); ++i) kraus[i] *= std::sqrt(1.0 - q) / dd;
  return validate_channel(std::move(kraus));
}

Channel phase_flip_channel(double p) {
  require_probability(p, "phase_flip_channel");
  return validate_channel(
      {std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli_z()});
}

Channel bit_flip_channel(double p) {
  require_probability(p, "bit_flip_channel");
  return validate_channel(
      {std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli_x()});
}

Channel constant_channel(const ComplexMatrix& sigma) {
  if (!is_density_matrix(sigma)) {
    throw Error(Errc::out_of_range, "constant_channel: target is not a density matrix");
  }
  const int d = static_cast<int>(sigma.rows());
  require_dim(d, "constant_channel");
  const HermitianEig eig = hermitian_eig(sigma);
  std::vector<ComplexMatrix> kraus;
  for (int j = 0; j < d; ++j) {
    const double lambda = eig.values(j);
    if (lambda <= kDefaultRankTol) continue;
    for (int m = 0; m < d; ++m) {
      kraus.push_back(std::sqrt(lambda) * eig.vectors.col(j) * ket(d, m).adjoint());
    }
  }
  return validate_channel(std::move(kraus));
}

Channel standard_channel(ChannelKind kind, const ChannelParams& params) {
  switch (kind) {
    case ChannelKind::identity: return identity_channel(params.d);
    case ChannelKind::unitary: return unitary_channel(params.matrix);
    case ChannelKind::depolarising: return depolarising_channel(params.d);
    case ChannelKind::partial_depolarising:
      return partial_depolarising_channel(params.d, params.p);
    case ChannelKind::phase_flip:
      if (params.d != 2) throw Error(Errc::out_of_range, "phase-flip is a qubit channel");
      return phase_flip_channel(params.p);
    case ChannelKind::bit_flip:
      if (params.d != 2) throw Error(Errc::out_of_range, "bit-flip is a qubit channel");
      return bit_flip_channel(params.p);
    case ChannelKind::constant: return constant_channel(params.matrix);
  }
  throw Error(Errc::out_of_range, "unknown channel kind");
}

}  // namespace cohctl
