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

#include "cohctl/control.hpp"
#include "cohctl/discrimination.hpp"

namespace cohctl {
namespace {

using test::seeded;

ControlState random_control(Rng& rng) {
  const ComplexVector v = random_pure_state(rng, 2);
  return ControlState(v(0), v(1));
}

ChannelImplementation random_implementation(Rng& rng, int d, int k) {
  return ChannelImplementation(random_channel(rng, d, k), random_subnormalized(rng, k));
}

// Reference switch: Kraus operators W_ij = |0><0| (x) L_j K_i + |1><1| (x) K_i L_j
// acting on |c><c| (x) rho.
ComplexMatrix switch_reference(const Channel& ch0, const Channel& ch1, const ControlState& c,
                               const ComplexMatrix& rho) {
  ComplexVector cv(2);
  cv << c.a(), c.b();
  const ComplexMatrix in = tensor(cv * cv.adjoint(), rho);
  ComplexMatrix out = ComplexMatrix::Zero(in.rows(), in.cols());
  for (const auto& k : ch0.kraus()) {
    for (const auto& l : ch1.kraus()) {
      const ComplexMatrix w = tensor(ket_bra(2, 0, 0), l * k) + tensor(ket_bra(2, 1, 1), k * l);
      out += w * in * w.adjoint();
    }
  }
  return out;
}

TEST_CASE("control state", "[control]") {
  REQUIRE(std::abs(ControlState::plus().a() - 1.0 / std::sqrt(2.0)) < 1e-15);
  COHCTL_REQUIRE_ERRC(ControlState(1.0, 1.0), Errc::out_of_range);
  COHCTL_REQUIRE_ERRC(ControlledOutput(ComplexMatrix::Identity(3, 3)), Errc::dimension_mismatch);
}

TEST_CASE("controlled_output examples", "[control]") {
  Rng rng = seeded(30);
  SECTION("transparent arms") {
    const ChannelImplementation id = identity_implementation(2, 1.0);
    const ComplexMatrix rho = pure_density(random_pure_state(rng, 2));
    const ControlledOutput out = controlled_output(id, id, ControlState::plus(), rho);
    COHCTL_REQUIRE_CLOSE(out.matrix(), tensor(pure_density(test::plus_state()), rho), 1e-14);
  }
  SECTION("depolarising pair with a shared T") {
    for (int d = 2; d <= 3; ++d) {
      ComplexMatrix t = random_gaussian(rng, d, d);
      t *= 0.9 / (std::sqrt(static_cast<double>(d)) * t.norm());
      const ChannelImplementation impl = depolarising_implementation(d, t);
      const ComplexMatrix rho = random_density(rng, d);
      const ControlledOutput out = controlled_output(impl, impl, ControlState::plus(), rho);
      const ComplexMatrix expected = tensor(identity(2) / 2.0, identity(d) / d) +
                                     0.5 * tensor(pauli_x(), t * rho * t.adjoint());
      COHCTL_REQUIRE_CLOSE(out.matrix(), expected, 1e-13);

      // Control marginal (1/2)(1 + Tr[T rho T^dagger] sigma_x).
      const Complex weight = (t * rho * t.adjoint()).trace();
      COHCTL_REQUIRE_CLOSE(out.control_marginal(), 0.5 * (identity(2) + weight * pauli_x()), 1e-10);
    }
  }
  SECTION("control |0> has no coherence") {
    const ChannelImplementation i0 = random_implementation(rng, 2, 3);
    const ChannelImplementation i1 = random_implementation(rng, 2, 2);
    const ComplexMatrix rho = random_density(rng, 2);
    const ControlledOutput out = controlled_output(i0, i1, ControlState::zero(), rho);
    COHCTL_REQUIRE_CLOSE(out.matrix(), tensor(ket_bra(2, 0, 0), cohctl::apply(i0.channel(), rho)), 1e-14);
  }
  SECTION("errors") {
    COHCTL_REQUIRE_ERRC(controlled_output(identity_implementation(2, 1.0),
                                          identity_implementation(3, 1.0),
                                          ControlState::plus(), identity(2) / 2.0),
                        Errc::dimension_mismatch);
    COHCTL_REQUIRE_ERRC(controlled_output(identity_implementation(2, 1.0),
                                          identity_implementation(2, 1.0),
                                          ControlState::plus(), identity(3) / 3.0),
                        Errc::dimension_mismatch);
  }
}

TEST_CASE("closed form agrees with the Stinespring simulation", "[control][property]") {
  Rng rng = seeded(31);
  const auto run = [&](int d, int trials, int max_kraus, bool pure) {
    double worst = 0.0;
    for (int n = 0; n < trials; ++n) {
      const ChannelImplementation i0 = random_implementation(rng, d, 1 + n % max_kraus);
      const ChannelImplementation i1 = random_implementation(rng, d, 1 + (n + 1) % max_kraus);
      const ControlState c = n % 3 == 0 ? ControlState::plus() : random_control(rng);
      const ComplexMatrix rho =
          pure ? pure_density(random_pure_state(rng, d)) : random_density(rng, d);
      worst = std::max(worst, max_abs_diff(controlled_output(i0, i1, c, rho).matrix(),
                                           stinespring_oracle(i0, i1, c, rho).matrix()));
    }
    return worst;
  };
  REQUIRE(run(2, 100, 4, true) <= 1e-10);
  REQUIRE(run(3, 50, 3, true) <= 1e-10);
  REQUIRE(run(2, 50, 4, false) <= 1e-10);
  REQUIRE(run(3, 50, 4, false) <= 1e-10);

  // Control |0>: target marginal is the first channel's output.
  const ChannelImplementation i0 = random_implementation(rng, 3, 2);
  const ChannelImplementation i1 = random_implementation(rng, 3, 3);
  const ComplexMatrix rho = random_density(rng, 3);
  COHCTL_REQUIRE_CLOSE(stinespring_oracle(i0, i1, ControlState::zero(), rho).target_marginal(),
                       cohctl::apply(i0.channel(), rho), 1e-12);
}

TEST_CASE("controlled outputs are valid states", "[control][property]") {
  Rng rng = seeded(32);
  for (int n = 0; n < 60; ++n) {
    const int d = 2 + n % 3;
    const ChannelImplementation i0 = random_implementation(rng, d, 1 + n % 4);
    const ChannelImplementation i1 = random_implementation(rng, d, 1 + (n + 2) % 4);
    const ControlState c = random_control(rng);
    const ComplexMatrix rho = random_density(rng, d);
    for (const ControlledOutput& out :
         {controlled_output(i0, i1, c, rho), switch_output(i0.channel(), i1.channel(), c, rho),
          classical_control(i0, i1, {std::norm(c.a()), std::norm(c.b())}, rho)}) {
      REQUIRE(out.is_valid());
      REQUIRE(min_eigenvalue(out.matrix()) >= -1e-10);
      REQUIRE(std::abs(out.matrix().trace() - 1.0) < 1e-10);
      COHCTL_REQUIRE_CLOSE(out.offdiag10(), out.offdiag01().adjoint(), 1e-12);
    }
  }
}

TEST_CASE("classical control", "[control]") {
  Rng rng = seeded(33);
  const ChannelImplementation dep0 = depolarising_implementation(2, ket_bra(2, 0, 0) / std::sqrt(2.0));
  const ChannelImplementation dep1 = depolarising_implementation(2, -ket_bra(2, 1, 1) / std::sqrt(2.0));
  const std::array<double, 2> w{0.3, 0.7};
  ComplexMatrix weights = ComplexMatrix::Zero(2, 2);
  weights(0, 0) = 0.3;
  weights(1, 1) = 0.7;
  for (int n = 0; n < 50; ++n) {
    const ComplexMatrix rho = random_density(rng, 2);
    COHCTL_REQUIRE_CLOSE(classical_control(dep0, dep1, w, rho).matrix(),
                         tensor(weights, identity(2) / 2.0), 1e-12);
  }

  const ChannelImplementation i0 = random_implementation(rng, 3, 2);
  const ChannelImplementation i1 = random_implementation(rng, 3, 3);
  const ComplexMatrix rho = random_density(rng, 3);
  COHCTL_REQUIRE_CLOSE(classical_control(i0, i1, {1.0, 0.0}, rho).matrix(),
                       tensor(ket_bra(2, 0, 0), cohctl::apply(i0.channel(), rho)), 1e-14);

  for (int n = 0; n < 20; ++n) {
    const ControlState c = random_control(rng);
    const ComplexMatrix in = random_density(rng, 3);
    ComplexMatrix decohered = controlled_output(i0, i1, c, in).matrix();
    decohered.block(0, 3, 3, 3).setZero();
    decohered.block(3, 0, 3, 3).setZero();
    COHCTL_REQUIRE_CLOSE(classical_control(i0, i1, {std::norm(c.a()), std::norm(c.b())}, in).matrix(),
                         decohered, 1e-13);
  }
  COHCTL_REQUIRE_ERRC(classical_control(i0, i1, {0.6, 0.6}, rho), Errc::out_of_range);
  COHCTL_REQUIRE_ERRC(classical_control(i0, i1, {-0.1, 1.1}, rho), Errc::out_of_range);
}

TEST_CASE("switch_output", "[control]") {
  Rng rng = seeded(34);
  SECTION("depolarising pair") {
    for (int d = 2; d <= 3; ++d) {
      const ComplexMatrix rho = random_density(rng, d);
      const Channel dep = depolarising_channel(d);
      const ComplexMatrix expected = tensor(identity(2) / 2.0, identity(d) / d) +
                                     0.5 * tensor(pauli_x(), rho / static_cast<double>(d * d));
      COHCTL_REQUIRE_CLOSE(switch_output(dep, dep, ControlState::plus(), rho).matrix(), expected, 1e-13);
    }
  }
  SECTION("identity channels") {
    const ComplexMatrix rho = random_density(rng, 2);
    const Channel id = identity_channel(2);
    COHCTL_REQUIRE_CLOSE(switch_output(id, id, ControlState::plus(), rho).matrix(),
                         tensor(pure_density(test::plus_state()), rho), 1e-14);
  }
  SECTION("against the switch Kraus construction") {
    for (int n = 0; n < 40; ++n) {
      const int d = 2 + n % 2;
      const Channel ch0 = random_channel(rng, d, 1 + n % 3);
      const Channel ch1 = random_channel(rng, d, 1 + (n + 1) % 4);
      const ControlState c = random_control(rng);
      const ComplexMatrix rho = random_density(rng, d);
      COHCTL_REQUIRE_CLOSE(switch_output(ch0, ch1, c, rho).matrix(),
                           switch_reference(ch0, ch1, c, rho), 1e-12);
    }
  }
  SECTION("Kraus remixes leave the output unchanged") {
    for (int n = 0; n < 50; ++n) {
      const int d = 2 + n % 2;
      const int k0 = 1 + n % 4;
      const int k1 = 1 + (n + 1) % 4;
      const Channel ch0 = random_channel(rng, d, k0);
      const Channel ch1 = random_channel(rng, d, k1);
      const Channel m0 = remix(ch0, random_isometry(rng, k0 + n % 3, k0));
      const Channel m1 = remix(ch1, random_isometry(rng, k1, k1));
      const ControlState c = random_control(rng);
      const ComplexMatrix rho = random_density(rng, d);
      COHCTL_REQUIRE_CLOSE(switch_output(ch0, ch1, c, rho).matrix(),
                           switch_output(m0, m1, c, rho).matrix(), 1e-10);
    }
  }
  COHCTL_REQUIRE_ERRC(switch_output(identity_channel(2), identity_channel(3),
                                    ControlState::plus(), identity(2) / 2.0),
                      Errc::dimension_mismatch);
}

TEST_CASE("coherent control depends on the implementation, the switch does not",
          "[control][property]") {
  const ChannelImplementation weyl =
      depolarising_implementation(2, 0.5 * (ket_bra(2, 0, 0) + ket_bra(2, 1, 0)));
  const ChannelImplementation canonical =
      realize(depolarising_channel(2), TransformationMatrix{0.5 * identity(2)});
  COHCTL_REQUIRE_CLOSE(weyl.env(), ComplexVector::Constant(4, 0.5), 1e-15);
  COHCTL_REQUIRE_CLOSE(choi_of(weyl.channel()).matrix, choi_of(canonical.channel()).matrix, 1e-12);

  const ComplexMatrix rho = ket_bra(2, 0, 0);
  const ControlState c = ControlState::plus();
  const double distance = trace_distance(controlled_output(weyl, weyl, c, rho).matrix(),
                                         controlled_output(canonical, canonical, c, rho).matrix());
  REQUIRE(distance == Catch::Approx(std::sqrt(5.0) / 8.0).margin(1e-12));
  REQUIRE(distance >= 0.1);
  COHCTL_REQUIRE_CLOSE(switch_output(weyl.channel(), weyl.channel(), c, rho).matrix(),
                       switch_output(canonical.channel(), canonical.channel(), c, rho).matrix(), 1e-10);
}

TEST_CASE("linear maps match the state-level functions", "[control]") {
  Rng rng = seeded(35);
  const ChannelImplementation i0 = random_implementation(rng, 2, 2);
  const ChannelImplementation i1 = random_implementation(rng, 2, 3);
  const ControlState c = random_control(rng);
  const ComplexMatrix rho = random_density(rng, 2);
  COHCTL_REQUIRE_CLOSE(controlled_map(i0, i1, c)(rho), controlled_output(i0, i1, c, rho).matrix(), 0.0);
  COHCTL_REQUIRE_CLOSE(switch_map(i0.channel(), i1.channel(), c)(rho),
                       switch_output(i0.channel(), i1.channel(), c, rho).matrix(), 0.0);
  COHCTL_REQUIRE_CLOSE(channel_map(i0.channel())(rho), cohctl::apply(i0.channel(), rho), 0.0);
}

}  // namespace
}  // namespace cohctl
