#include "qcadp/adp/fitter.hpp"
#include "qcadp/conic/builder.hpp"
#include "qcadp/conic/problem.hpp"
#include "qcadp/poly/gaussian.hpp"

#include <benchmark/benchmark.h>

using namespace qcadp;

static void BM_SocpSmall(benchmark::State& state) {
    // min ||x - c|| over a box, the shape of one policy subproblem
    conic::ProblemBuilder bld;
    const int x = bld.add_vars(4);
    const int t = bld.add_vars(1);
    bld.add_objective(t, 1.0);
    std::vector<conic::LinExpr> soc{conic::LinExpr::var(t)};
    for (int i = 0; i < 4; ++i) {
        soc.push_back(conic::LinExpr::var(x + i) += conic::LinExpr(-0.3 * (i + 1)));
        bld.add_nonneg(conic::LinExpr::var(x + i) += conic::LinExpr(1.0));
        bld.add_nonneg(conic::LinExpr::var(x + i, -1.0) += conic::LinExpr(1.0));
    }
    bld.add_soc(soc);
    auto p = bld.build();
    for (auto _ : state) {
        benchmark::DoNotOptimize(conic::solve(p));
    }
}
BENCHMARK(BM_SocpSmall)->Unit(benchmark::kMicrosecond);

static void BM_BellmanSdpPlanar(benchmark::State& state) {
    model::QuadcopterParams params;
    adp::FitOptions opt;
    adp::BellmanFitter fitter(adp::make_planar_fitting_model(params, adp::StageCost::defaults_planar()),
                              opt);
    poly::GaussianMeasure c({0.05, 0.05, 0.5, 0.5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fitter.fit_initial(c));
    }
}
BENCHMARK(BM_BellmanSdpPlanar)->Unit(benchmark::kMillisecond);

static void BM_BellmanSdpFull(benchmark::State& state) {
    model::QuadcopterParams params;
    adp::FitOptions opt;
    adp::BellmanFitter fitter(adp::make_full_fitting_model(params, adp::StageCost::defaults_full()),
                              opt);
    poly::GaussianMeasure c({0.05, 0.05, 0.05, 0.5, 0.5, 0.5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fitter.fit_initial(c));
    }
}
BENCHMARK(BM_BellmanSdpFull)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
