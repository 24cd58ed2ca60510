#include <benchmark/benchmark.h>

#include "hcob/abelian_group.hpp"
#include "hcob/falg.hpp"
#include "hcob/group_ring.hpp"
#include "hcob/int_matrix.hpp"
#include "hcob/lens_space.hpp"
#include "hcob/simplicial_complex.hpp"

using namespace hcob;

namespace {

void BM_GroupRingMultiply(benchmark::State& state)
{
    const auto u = theorem_a_unit().pow(state.range(0));
    const auto v = theorem_a_unit_inverse().pow(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_GroupRingMultiply)->Arg(1)->Arg(8)->Arg(32);

void BM_InvertUnit(benchmark::State& state)
{
    const auto u = theorem_a_unit().pow(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(invert_unit(u));
}
BENCHMARK(BM_InvertUnit)->Arg(1)->Arg(8);

void BM_SmithNormalForm(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.at(r, c) = static_cast<long long>((r * 7 + c * 13 + r * c) % 23) - 11;
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_HomologyC2(benchmark::State& state)
{
    const auto a = InvolutiveAbelianGroup::sum_of_cyclic({4, 6, 0}, -1);
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_c2(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HomologyC2)->Arg(0)->Arg(3);

void BM_EnumerateContractible(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_contractible_subcomplexes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateContractible)->Arg(2)->Arg(3);

void BM_MooreHomotopy(benchmark::State& state)
{
    const FAlgModel model(InvolutiveAbelianGroup::sum_of_cyclic({2, 2}, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(model.moore_homotopy(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MooreHomotopy)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TheoremReport(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem_a_report(state.range(0)));
}
BENCHMARK(BM_TheoremReport)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
