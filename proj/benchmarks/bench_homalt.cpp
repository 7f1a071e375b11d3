/*
 * Copyright 2026 The homalt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <homalt/algebra_file.hpp>
#include <homalt/catalog.hpp>
#include <homalt/proof_replay.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace homalt;
using catalog::FamilyParams;

namespace {

std::vector<std::size_t> all(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

const HomAlgebra& family() {
    static const HomAlgebra A = catalog::mikheev_family(FamilyParams::symbolic());
    return A;
}

void BM_GenericProduct(benchmark::State& state) {
    const HomAlgebra A = catalog::mikheev_algebra();
    const Element a = generic_element_on(13, "a", all(13)), b = generic_element_on(13, "b", all(13));
    for (auto _ : state) benchmark::DoNotOptimize(mul(A, a, b));
}
BENCHMARK(BM_GenericProduct);

void BM_GenericFourthPower(benchmark::State& state) {
    const HomAlgebra A = catalog::mikheev_algebra();
    const Element a = generic_element_on(13, "a", all(13)), b = generic_element_on(13, "b", all(13));
    const Element p = hom_associator(A, a, a, b);
    for (auto _ : state) benchmark::DoNotOptimize(hom_power(A, p, 4));
}
BENCHMARK(BM_GenericFourthPower);

void BM_TheoremGeneric(benchmark::State& state) {
    const HomAlgebra A = catalog::mikheev_algebra();
    for (auto _ : state) benchmark::DoNotOptimize(verify(A, IdentityId::theorem, Strategy::generic()));
}
BENCHMARK(BM_TheoremGeneric)->Unit(benchmark::kMillisecond);

void BM_TheoremSweep(benchmark::State& state) {
    const auto s = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify(family(), IdentityId::theorem, Strategy::sweep(s)));
}
BENCHMARK(BM_TheoremSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RegistryRandom(benchmark::State& state) {
    const HomAlgebra A = catalog::mikheev_family(FamilyParams::rational(2, 3));
    const auto points = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(A, Strategy::random(points, 1)));
}
BENCHMARK(BM_RegistryRandom)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RightAlternativeSymbolic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(is_right_hom_alternative(family()));
}
BENCHMARK(BM_RightAlternativeSymbolic)->Unit(benchmark::kMillisecond);

void BM_SerializeRoundTrip(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_algebra(serialize_algebra(family())));
}
BENCHMARK(BM_SerializeRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
