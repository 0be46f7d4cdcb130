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

#include "cohctl/implementation.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace cohctl {

ChannelImplementation::ChannelImplementation(Channel channel, ComplexVector env,
                                             double tol)
    : channel_(std::move(channel)), env_(std::move(env)) {
  if (env_.size() != static_cast<Eigen::Index>(channel_.kraus_count())) {
    throw Error(Errc::length_mismatch,
                "env has " + std::to_string(env_.size()) + " amplitudes for " +
                    std::to_string(channel_.kraus_count()) + " Kraus operators");
  }
  if (env_.squaredNorm() > 1.0 + tol) {
    throw Error(Errc::env_not_normalizable,
                "<env|env> = " + std::to_string(env_.squaredNorm()) + " > 1");
  }
}

TransformationMatrix transformation_matrix(const ChannelImplementation& impl) {
  const int d = impl.dim();
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  const auto& kraus = impl.channel().kraus();
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    t += std::conj(impl.env()(static_cast<Eigen::Index>(i))) * kraus[i];
  }
  return {t};
}

Admissibility admissible(const Channel& ch, const TransformationMatrix& t,
                         double tol) {
  if (t.matrix.rows() != ch.dim() || t.matrix.cols() != ch.dim()) {
    throw Error(Errc::dimension_mismatch, "T does not match channel dimension");
  }
  const ComplexMatrix c = choi_of(ch).matrix;
  const ComplexMatrix c_plus = pseudoinverse(c);
  const ComplexVector tv = choi_vec(t.matrix).amplitudes;

  Admissibility out;
  const double norm = tv.norm();
  if (norm > 0.0) {
    const ComplexVector outside = tv - c * (c_plus * tv);
    out.range_residual = outside.norm() / norm;
  }
  out.quadratic_form = tv.dot(c_plus * tv).real();
  out.admissible = out.range_residual <= tol && out.quadratic_form <= 1.0 + tol;
  return out;
}

ChannelImplementation realize(const Channel& ch, const TransformationMatrix& t,
                              double tol) {
  const Admissibility check = admissible(ch, t, tol);
  if (!check.admissible) {
    std::ostringstream msg;
    msg << "range residual " << check.range_residual << ", <<T|C+|T>> "
        << check.quadratic_form;
    throw Error(Errc::inadmissible, msg.str());
  }
  const CanonicalDecomposition canon = canonical_decomposition(choi_of(ch));
  const ComplexVector tv = choi_vec(t.matrix).amplitudes;
  // eps_k = <<C_k|T>> / <<C_k|C_k>> with |C_k>> = sqrt(lambda_k) v_k.
  ComplexVector env(canon.values.size());
  for (Eigen::Index k = 0; k < canon.values.size(); ++k) {
    const Complex eps = canon.vectors.col(k).dot(tv) / std::sqrt(canon.values(k));
    env(k) = std::conj(eps);
  }
  // Quadratic-form slack may leave <env|env> a hair above one.
  const double n2 = env.squaredNorm();
  if (n2 > 1.0) env /= std::sqrt(n2);
  return ChannelImplementation(validate_channel(canon.kraus), std::move(env));
}

namespace {

ComplexVector env_from_overlaps(const ComplexVector& overlaps) {
  return overlaps.conjugate();
}

void require_unit_disc(double weight, const char* who) {
  if (weight > 1.0 + kDefaultTol) {
    throw Error(Errc::out_of_range,
                std::string(who) + ": environment weight " +
                    std::to_string(weight) + " exceeds 1");
  }
}

}  // namespace

ChannelImplementation identity_implementation(int d, Complex alpha) {
  require_unit_disc(std::norm(alpha), "identity_implementation");
  ComplexVector overlaps(1);
  overlaps << alpha;
  return ChannelImplementation(identity_channel(d), env_from_overlaps(overlaps));
}

ChannelImplementation unitary_implementation(const ComplexMatrix& u,
                                             Complex alpha) {
  require_unit_disc(std::norm(alpha), "unitary_implementation");
  ComplexVector overlaps(1);
  overlaps << alpha;
  return ChannelImplementation(unitary_channel(u), env_from_overlaps(overlaps));
}

ChannelImplementation depolarising_implementation(int d,
                                                  const ComplexMatrix& t) {
  if (t.rows() != d || t.cols() != d) {
    throw Error(Errc::dimension_mismatch, "depolarising_implementation: T shape");
  }
  const double weight = (t.adjoint() * t).trace().real();
  if (weight > 1.0 / d + kDefaultTol) {
    throw Error(Errc::out_of_range,
                "depolarising_implementation: Tr[T^dagger T] = " +
                    std::to_string(weight) + " > 1/d");
  }
  const std::vector<ComplexMatrix> basis = weyl_basis(d);
  ComplexVector overlaps(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    overlaps(static_cast<Eigen::Index>(i)) = (basis[i].adjoint() * t).trace();
  }
  return ChannelImplementation(depolarising_channel(d),
                               env_from_overlaps(overlaps));
}

ChannelImplementation partial_depolarising_implementation(
    int d, double q, const ComplexMatrix& t) {
  Channel ch = partial_depolarising_channel(d, q);
  if (t.rows() != d || t.cols() != d) {
    throw Error(Errc::dimension_mismatch,
                "partial_depolarising_implementation: T shape");
  }
  const double dd = d;
  const double head = dd * dd * q + 1.0 - q;
  const Complex tr = t.trace();
  const double lhs = (t.adjoint() * t).trace().real() - dd * q / head * std::norm(tr);
  if (lhs > (1.0 - q) / dd + kDefaultTol) {
    throw Error(Errc::out_of_range,
                "partial_depolarising_implementation: constraint violated by " +
                    std::to_string(lhs - (1.0 - q) / dd));
  }
  const std::vector<ComplexMatrix> basis = weyl_basis(d);
  ComplexVector overlaps(static_cast<Eigen::Index>(basis.size()));
  overlaps(0) = tr / std::sqrt(head);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    // At q = 1 the constraint forces Tr[U_i^dagger T] = 0 for i >= 1.
    overlaps(static_cast<Eigen::Index>(i)) =
        q < 1.0 ? (basis[i].adjoint() * t).trace() / std::sqrt(1.0 - q)
                : Complex(0.0);
  }
  return ChannelImplementation(std::move(ch), env_from_overlaps(overlaps));
}

ChannelImplementation phase_flip_implementation(double p, Complex alpha,
                                                Complex beta) {
  require_unit_disc(std::norm(alpha) + std::norm(beta), "phase_flip_implementation");
  ComplexVector overlaps(2);
  overlaps << alpha, beta;
  return ChannelImplementation(phase_flip_channel(p), env_from_overlaps(overlaps));
}

ChannelImplementation bit_flip_implementation(double p, Complex alpha,
                                              Complex beta) {
  require_unit_disc(std::norm(alpha) + std::norm(beta), "bit_flip_implementation");
  ComplexVector overlaps(2);
  overlaps << alpha, beta;
  return ChannelImplementation(bit_flip_channel(p), env_from_overlaps(overlaps));
}

std::string_view to_string(ImplementationKind kind) noexcept {
  switch (kind) {
    case ImplementationKind::identity: return "identity";
    case ImplementationKind::unitary: return "unitary";
    case ImplementationKind::depolarising: return "depolarising";
    case ImplementationKind::partial_depolarising: return "partial-depolarising";
    case ImplementationKind::phase_flip: return "phase-flip";
    case ImplementationKind::bit_flip: return "bit-flip";
  }
  return "?";
}

ImplementationKind implementation_kind_from_string(std::string_view name) {
  for (auto kind : {ImplementationKind::identity, ImplementationKind::unitary,
                    ImplementationKind::depolarising,
                    ImplementationKind::partial_depolarising,
                    ImplementationKind::phase_flip, ImplementationKind::bit_flip}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(Errc::out_of_range,
              "unknown implementation kind '" + std::string(name) + "'");
}

ChannelImplementation standard_implementation(ImplementationKind kind,
                                              const ImplementationParams& params) {
  switch (kind) {
    case ImplementationKind::identity:
      return identity_implementation(params.d, params.alpha);
    case ImplementationKind::unitary:
      return unitary_implementation(params.matrix, params.alpha);
    case ImplementationKind::depolarising:
      return depolarising_implementation(params.d, params.matrix);
    case ImplementationKind::partial_depolarising:
      return partial_depolarising_implementation(params.d, params.p, params.matrix);
    case ImplementationKind::phase_flip:
      return phase_flip_implementation(params.p, params.alpha, params.beta);
    case ImplementationKind::bit_flip:
      return bit_flip_implementation(params.p, params.alpha, params.beta);
  }
  throw Error(Errc::out_of_range, "unknown implementation kind");
}

}  // namespace cohctl
