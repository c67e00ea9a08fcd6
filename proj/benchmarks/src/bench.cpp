#include <benchmark/benchmark.h>

#include "qpmut/explore.hpp"
#include "qpmut/grassmannian.hpp"
#include "qpmut/verify.hpp"

namespace {

qpmut::LaurentPoly dense_poly(int nvars, int degree) {
    qpmut::LaurentPoly p(nvars);
    std::vector<int> e(nvars, 0);
    long c = 1;
    while (true) {
        p.add_term(e, qpmut::Rational(c++ % 7 + 1));
        int k = 0;
        for (; k < nvars; ++k) {
            if (e[k] < degree) {
                ++e[k];
                break;
            }
            e[k] = 0;
        }
        if (k == nvars) break;
    }
    return p;
}

void bm_laurent_mul(benchmark::State& state) {
    qpmut::LaurentPoly a = dense_poly(3, static_cast<int>(state.range(0)));
    qpmut::LaurentPoly b = dense_poly(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_laurent_mul)->Arg(3)->Arg(5);

void bm_explore_a3(benchmark::State& state) {
    qpmut::IceQuiver q = qpmut::principal_extension(
        qpmut::IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}}));
    qpmut::Seed s = qpmut::Seed::initial(q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpmut::explore(s, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(bm_explore_a3)->Arg(6)->Arg(10);

void bm_rep_mutation_chain(benchmark::State& state) {
    qpmut::Scenario sc = qpmut::scenario_triangle();
    std::vector<int> seq{1, 2, 3, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpmut::reachable_rep(sc.qp, seq, 1));
    }
}
BENCHMARK(bm_rep_mutation_chain);

void bm_point_count(benchmark::State& state) {
    // One vertex, no arrows: Gr(2, 4) over growing primes.
    qpmut::QP qp = qpmut::QP::make(qpmut::IceQuiver(1, 1, {}), 12);
    qpmut::DecoratedRep m;
    m.qp = qp;
    m.dims = {4};
    m.vdims = {0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qpmut::count_subreps_mod_p(m, {2}, static_cast<long>(state.range(0))));
    }
}
BENCHMARK(bm_point_count)->Arg(5)->Arg(23);

}  // namespace

BENCHMARK_MAIN();
