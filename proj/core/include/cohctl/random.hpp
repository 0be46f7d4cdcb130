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

// Seeded random instances for property checks and the reproduction cases.

#pragma once

#include <cstdint>
#include <random>

#include "cohctl/channel.hpp"

namespace cohctl {

using Rng = std::mt19937_64;

/// Entries i.i.d. standard complex Gaussian.
ComplexMatrix random_gaussian(Rng& rng, int rows, int cols);
/// Haar-random isometry (rows >= cols) from QR of a Gaussian matrix with the
/// R-diagonal phases divided out.
ComplexMatrix random_isometry(Rng& rng, int rows, int cols);
ComplexMatrix random_unitary(Rng& rng, int n);
ComplexMatrix random_hermitian(Rng& rng, int n);
/// Random PSD matrix of the given rank (G G^dagger with G n x rank).
ComplexMatrix random_psd(Rng& rng, int n, int rank);
/// Full-rank density matrix from the Hilbert-Schmidt ensemble.
ComplexMatrix random_density(Rng& rng, int d);
ComplexVector random_pure_state(Rng& rng, int d);
/// Haar isometry d -> d*k sliced into k Kraus operators.
Channel random_channel(Rng& rng, int d, int kraus_count);
/// Random vector with norm drawn uniformly from [0, max_norm].
ComplexVector random_subnormalized(Rng& rng, int n, double max_norm = 1.0);

}  // namespace cohctl
