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

#include "support.hpp"

#include "cohctl/channel.hpp"

namespace cohctl {
namespace {

using test::seeded;

// Reference Choi matrix: (1 (x) C)(|1>><<1|) assembled from |m><n| blocks.
ComplexMatrix choi_reference(const Channel& ch) {
  const int d = ch.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      out += tensor(ket_bra(d, m, n), apply_linear(ch, ket_bra(d, m, n)));
    }
  }
  return out;
}

bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) < tol) return a.norm() < tol && b.norm() < tol;
  return max_abs_diff(a, (overlap / std::abs(overlap)) * b) <= tol;
}

TEST_CASE("validate_channel", "[channel]") {
  REQUIRE(validate_channel({identity(2)}).kraus_count() == 1);
  REQUIRE(validate_channel({pauli_x() / std::sqrt(2.0), pauli_z() / std::sqrt(2.0)}).dim() == 2);
  REQUIRE(validate_channel({pauli_x()}).kraus_count() == 1);
  COHCTL_REQUIRE_ERRC(validate_channel({pauli_x() / 2.0}), Errc::trace_preservation);
  COHCTL_REQUIRE_ERRC(validate_channel({ComplexMatrix::Identity(2, 3)}), Errc::not_square);
  COHCTL_REQUIRE_ERRC(validate_channel({identity(2), identity(3)}), Errc::dimension_mismatch);
  COHCTL_REQUIRE_ERRC(validate_channel({}), Errc::length_mismatch);
}

TEST_CASE("apply", "[channel]") {
  Rng rng = seeded(10);
  const ComplexMatrix rho = random_density(rng, 3);
  COHCTL_REQUIRE_CLOSE(cohctl::apply(identity_channel(3), rho), rho, 1e-14);
  COHCTL_REQUIRE_CLOSE(cohctl::apply(depolarising_channel(2), ket_bra(2, 0, 0)), identity(2) / 2.0, 1e-14);
  COHCTL_REQUIRE_CLOSE(cohctl::apply(phase_flip_channel(0.5), pure_density(test::plus_state())),
                       identity(2) / 2.0, 1e-14);
  COHCTL_REQUIRE_ERRC(cohctl::apply(identity_channel(2), rho), Errc::dimension_mismatch);
  COHCTL_REQUIRE_ERRC(cohctl::apply(identity_channel(2), 2.0 * identity(2)), Errc::invalid_density_matrix);
}

TEST_CASE("choi_of on named channels", "[channel]") {
  for (int d = 2; d <= 4; ++d) {
    const ComplexVector one = choi_vec(identity(d)).amplitudes;
    COHCTL_REQUIRE_CLOSE(choi_of(identity_channel(d)).matrix, one * one.adjoint(), 1e-14);
    COHCTL_REQUIRE_CLOSE(choi_of(depolarising_channel(d)).matrix, identity(d * d) / d, 1e-14);
  }
  const double p = 0.3;
  const ComplexVector one = choi_vec(identity(2)).amplitudes;
  const ComplexVector z = choi_vec(pauli_z()).amplitudes;
  COHCTL_REQUIRE_CLOSE(choi_of(phase_flip_channel(p)).matrix,
                       (1 - p) * one * one.adjoint() + p * z * z.adjoint(), 1e-14);

  Rng rng = seeded(11);
  for (int n = 0; n < 10; ++n) {
    const Channel ch = random_channel(rng, 2 + n % 2, 1 + n % 4);
    COHCTL_REQUIRE_CLOSE(choi_of(ch).matrix, choi_reference(ch), 1e-13);
    validate_choi(choi_of(ch));
  }
}

TEST_CASE("validate_choi rejects non-channels", "[channel]") {
  COHCTL_REQUIRE_ERRC(validate_choi({2, 2, identity(4)}), Errc::invalid_choi);
  COHCTL_REQUIRE_ERRC(validate_choi({2, 2, -identity(4) / 2.0}), Errc::invalid_choi);
}

TEST_CASE("canonical Kraus operators", "[channel]") {
  const Channel from_mixed = canonical_kraus({2, 2, identity(4) / 2.0});
  REQUIRE(from_mixed.kraus_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE((from_mixed.kraus()[i].adjoint() * from_mixed.kraus()[i]).trace().real() ==
            Catch::Approx(0.5));
    for (std::size_t j = 0; j < i; ++j) {
      REQUIRE(std::abs((from_mixed.kraus()[j].adjoint() * from_mixed.kraus()[i]).trace()) < 1e-12);
    }
  }

  const Channel from_identity = canonical_kraus(choi_of(identity_channel(3)));
  REQUIRE(from_identity.kraus_count() == 1);
  REQUIRE(equal_up_to_phase(from_identity.kraus()[0], identity(3), 1e-12));

  Rng rng = seeded(12);
  for (int n = 0; n < 20; ++n) {
    const Channel ch = random_channel(rng, 2 + n % 3, 1 + n % 3);
    const ChoiMatrix c = choi_of(ch);
    COHCTL_REQUIRE_CLOSE(choi_of(canonical_kraus(c)).matrix, c.matrix, 1e-12);
  }
}

TEST_CASE("remix keeps the channel", "[channel]") {
  const Channel flip = phase_flip_channel(0.2);
  const Channel same = remix(flip, identity(2));
  for (std::size_t i = 0; i < 2; ++i) COHCTL_REQUIRE_CLOSE(same.kraus()[i], flip.kraus()[i], 0.0);

  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Channel mixed = remix(flip, h);
  REQUIRE(max_abs_diff(mixed.kraus()[0], flip.kraus()[0]) > 0.1);
  COHCTL_REQUIRE_CLOSE(choi_of(mixed).matrix, choi_of(flip).matrix, 1e-12);

  const Channel phased = remix(flip, std::polar(1.0, 0.7) * identity(2));
  REQUIRE(max_abs_diff(phased.kraus()[0], flip.kraus()[0]) > 0.1);
  COHCTL_REQUIRE_CLOSE(choi_of(phased).matrix, choi_of(flip).matrix, 1e-12);

  Rng rng = seeded(13);
  for (int n = 0; n < 30; ++n) {
    const int k = 1 + n % 4;
    const Channel ch = random_channel(rng, 2 + n % 2, k);
    const Channel r = remix(ch, random_isometry(rng, k + n % 3, k));
    REQUIRE(r.kraus_count() == static_cast<std::size_t>(k + n % 3));
    COHCTL_REQUIRE_CLOSE(choi_of(r).matrix, choi_of(ch).matrix, 1e-10);
  }

  COHCTL_REQUIRE_ERRC(remix(flip, 2.0 * identity(2)), Errc::not_unitary);
  COHCTL_REQUIRE_ERRC(remix(flip, ComplexMatrix::Ones(3, 1) / std::sqrt(3.0)),
                      Errc::dimension_mismatch);
}

TEST_CASE("weyl basis", "[channel]") {
  const auto w2 = weyl_basis(2);
  REQUIRE(w2.size() == 4);
  COHCTL_REQUIRE_CLOSE(w2[0], identity(2), 0.0);
  COHCTL_REQUIRE_CLOSE(w2[1], pauli_z(), 1e-15);
  COHCTL_REQUIRE_CLOSE(w2[2], pauli_x(), 1e-15);
  COHCTL_REQUIRE_CLOSE(w2[3], pauli_x() * pauli_z(), 1e-15);

  const auto w3 = weyl_basis(3);
  for (std::size_t i = 0; i < w3.size(); ++i) {
    REQUIRE(is_unitary(w3[i]));
    for (std::size_t j = 0; j < w3.size(); ++j) {
      const Complex ip = (w3[i].adjoint() * w3[j]).trace();
      REQUIRE(std::abs(ip - (i == j ? 3.0 : 0.0)) < 1e-12);
    }
  }

  Rng rng = seeded(14);
  for (int d = 2; d <= 3; ++d) {
    const ComplexMatrix rho = random_density(rng, d);
    ComplexMatrix twirl = ComplexMatrix::Zero(d, d);
    for (const auto& u : weyl_basis(d)) twirl += u * rho * u.adjoint();
    COHCTL_REQUIRE_CLOSE(twirl / (d * d), identity(d) / d, 1e-13);
  }
}

TEST_CASE("standard channels", "[channel]") {
  const Channel dep = depolarising_channel(2);
  REQUIRE(dep.kraus_count() == 4);
  for (const ComplexMatrix& target : {identity(2), pauli_x(), pauli_y(), pauli_z()}) {
    bool found = false;
    for (const auto& k : dep.kraus()) found = found || equal_up_to_phase(k, target / 2.0, 1e-14);
    REQUIRE(found);
  }

  ChannelParams params;
  params.d = 3;
  params.p = 1.0;
  COHCTL_REQUIRE_CLOSE(choi_of(standard_channel(ChannelKind::partial_depolarising, params)).matrix,
                       choi_of(identity_channel(3)).matrix, 1e-13);
  params.p = 0.0;
  COHCTL_REQUIRE_CLOSE(choi_of(standard_channel(ChannelKind::partial_depolarising, params)).matrix,
                       choi_of(depolarising_channel(3)).matrix, 1e-13);
  params.d = 2;
  COHCTL_REQUIRE_CLOSE(choi_of(standard_channel(ChannelKind::phase_flip, params)).matrix,
                       choi_of(identity_channel(2)).matrix, 1e-14);

  params.p = 1.5;
  COHCTL_REQUIRE_ERRC(standard_channel(ChannelKind::phase_flip, params), Errc::out_of_range);
  params.p = 0.1;
  params.d = 3;
  COHCTL_REQUIRE_ERRC(standard_channel(ChannelKind::bit_flip, params), Errc::out_of_range);

  Rng rng = seeded(15);
  const ComplexMatrix sigma = random_density(rng, 3);
  const Channel constant = constant_channel(sigma);
  COHCTL_REQUIRE_CLOSE(cohctl::apply(constant, random_density(rng, 3)), sigma, 1e-12);

  for (auto kind : {ChannelKind::identity, ChannelKind::unitary, ChannelKind::depolarising,
                    ChannelKind::partial_depolarising, ChannelKind::phase_flip,
                    ChannelKind::bit_flip, ChannelKind::constant}) {
    REQUIRE(channel_kind_from_string(to_string(kind)) == kind);
  }
  COHCTL_REQUIRE_ERRC(channel_kind_from_string("amplitude-damping"), Errc::out_of_range);
}

TEST_CASE("channel properties on random instances", "[channel][property]") {
  Rng rng = seeded(16);
  for (int n = 0; n < 40; ++n) {
    const int d = 2 + n % 3;
    const Channel ch = random_channel(rng, d, 1 + n % 5);
    const ComplexMatrix rho = random_density(rng, d);
    const ComplexMatrix out = cohctl::apply(ch, rho);

    COHCTL_REQUIRE_CLOSE(apply_via_choi(choi_of(ch), rho), out, 1e-10);
    REQUIRE(std::abs(out.trace() - 1.0) < 1e-10);
    REQUIRE(min_eigenvalue(out) >= -1e-10);

    const ComplexMatrix c = choi_of(ch).matrix;
    const ComplexMatrix range = c * pseudoinverse(c);
    for (const auto& k : ch.kraus()) {
      const ComplexVector v = choi_vec(k).amplitudes;
      COHCTL_REQUIRE_CLOSE(range * v, v, 1e-9);
    }
  }
  for (double p : {0.0, 0.3, 1.0}) {
    for (const Channel& ch : {phase_flip_channel(p), bit_flip_channel(p),
                              partial_depolarising_channel(3, p)}) {
      const ComplexMatrix out = cohctl::apply(ch, random_density(rng, ch.dim()));
      REQUIRE(std::abs(out.trace() - 1.0) < 1e-10);
      REQUIRE(min_eigenvalue(out) >= -1e-10);
    }
  }
}

}  // namespace
}  // namespace cohctl
