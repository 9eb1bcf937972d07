#include <benchmark/benchmark.h>

#include "catalan/beta_ref.hpp"
#include "catalan/contfrac.hpp"
#include "catalan/cvector.hpp"
#include "catalan/forms.hpp"
#include "catalan/group.hpp"
#include "catalan/hyper.hpp"
#include "catalan/recurrence.hpp"
#include "catalan/series.hpp"

using namespace catalan;

static void BM_LinearFormConstruction(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linear_form_original(n));
    }
}
BENCHMARK(BM_LinearFormConstruction)->Arg(5)->Arg(20)->Arg(50);

static void BM_TildeSequence(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tilde_sequence(n));
    }
}
BENCHMARK(BM_TildeSequence)->Arg(50)->Arg(150)->Arg(300);

static void BM_Certificates(benchmark::State& state) {
    const long n = state.range(0);
    std::vector<LinearFormQG> seq = tilde_sequence(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_certificates(seq, 8));
        benchmark::DoNotOptimize(v_certificates(seq, 8));
    }
}
BENCHMARK(BM_Certificates)->Arg(50)->Arg(150);

static void BM_GroupClosure(benchmark::State& state) {
    for (auto _ : state) {
        // generate_group() memoizes; rebuild from the generators each time.
        GroupClosure gc;
        std::vector<Permutation10> frontier{Permutation10::identity()};
        std::vector<Permutation10> seen = frontier;
        while (!frontier.empty()) {
            std::vector<Permutation10> next;
            for (const Permutation10& p : frontier) {
                for (const NamedPermutation& g : group_generators()) {
                    Permutation10 q = g.perm * p;
                    bool known = false;
                    for (const Permutation10& r : seen) {
                        if (r == q) { known = true; break; }
                    }
                    if (!known) {
                        seen.push_back(q);
                        next.push_back(q);
                    }
                }
            }
            frontier = std::move(next);
        }
        benchmark::DoNotOptimize(seen.size());
    }
}
BENCHMARK(BM_GroupClosure);

static void BM_ReferenceCatalan(benchmark::State& state) {
    const long bits = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference_catalan(bits));
    }
}
BENCHMARK(BM_ReferenceCatalan)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_Convergent(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergent(n));
    }
}
BENCHMARK(BM_Convergent)->Arg(10)->Arg(30)->Arg(50);

static void BM_WellpoisedAlternatingSum(benchmark::State& state) {
    const long bits = state.range(0);
    std::vector<std::pair<BigRat, BigRat>> pairs{
        {BigRat(1, 2), BigRat(3, 2)},
        {BigRat(1, 2), BigRat(3, 2)},
        {BigRat(1, 2), BigRat(3, 2)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wellpoised_alternating_sum(1, pairs, bits));
    }
}
BENCHMARK(BM_WellpoisedAlternatingSum)->Arg(128)->Arg(256);

static void BM_HBetaSeries(benchmark::State& state) {
    const long bits = state.range(0);
    CVector c = euler_cvector(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_beta_series(c, bits));
    }
}
BENCHMARK(BM_HBetaSeries)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
