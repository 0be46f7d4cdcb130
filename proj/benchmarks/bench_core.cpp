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

#include <benchmark/benchmark.h>

#include <numbers>

#include "cohctl/info.hpp"
#include "cohctl/random.hpp"

namespace {

using namespace cohctl;

ChannelImplementation random_implementation(Rng& rng, int d, int k) {
  return ChannelImplementation(random_channel(rng, d, k), random_subnormalized(rng, k));
}

void BM_ControlledOutput(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto i0 = random_implementation(rng, d, 4);
  const auto i1 = random_implementation(rng, d, 4);
  const ComplexMatrix rho = random_density(rng, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(controlled_output(i0, i1, ControlState::plus(), rho));
  }
}
BENCHMARK(BM_ControlledOutput)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

void BM_StinespringOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto i0 = random_implementation(rng, d, 4);
  const auto i1 = random_implementation(rng, d, 4);
  const ComplexMatrix rho = random_density(rng, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stinespring_oracle(i0, i1, ControlState::plus(), rho));
  }
}
BENCHMARK(BM_StinespringOracle)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

void BM_SwitchOutput(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Channel dep = depolarising_channel(d);
  Rng rng(2);
  const ComplexMatrix rho = random_density(rng, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(switch_output(dep, dep, ControlState::plus(), rho));
  }
}
BENCHMARK(BM_SwitchOutput)->Arg(2)->Arg(3)->Arg(4);

void BM_Pseudoinverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const ComplexMatrix c = random_psd(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(pseudoinverse(c));
}
BENCHMARK(BM_Pseudoinverse)->Arg(4)->Arg(9)->Arg(16)->Arg(64);

void BM_Admissible(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(4);
  const auto impl = random_implementation(rng, d, d);
  const TransformationMatrix t = transformation_matrix(impl);
  for (auto _ : state) benchmark::DoNotOptimize(admissible(impl.channel(), t));
}
BENCHMARK(BM_Admissible)->Arg(2)->Arg(4)->Arg(8);

void BM_SwitchHolevoGridSearch(benchmark::State& state) {
  const Channel dep = depolarising_channel(2);
  const LinearMap map = switch_map(dep, dep, ControlState::plus());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qubit_holevo_grid_search(map, std::numbers::pi / 60.0, 0.05));
  }
}
BENCHMARK(BM_SwitchHolevoGridSearch)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
