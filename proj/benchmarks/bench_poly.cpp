#include "qcadp/adp/fitter.hpp"
#include "qcadp/model/reduced_dynamics.hpp"
#include "qcadp/poly/monomial_basis.hpp"
#include "qcadp/poly/polynomial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qcadp;

namespace {

poly::Polynomial random_poly(std::size_t arity, int degree, int terms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-1, 1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(arity) - 1);
    poly::Polynomial p(arity);
    for (int t = 0; t < terms; ++t) {
        poly::Exponent e(arity);
        for (int d = 0; d < degree; ++d) e[pick(rng)] += 1;
        p.add_term(e, coeff(rng));
    }
    return p;
}

} // namespace

static void BM_Multiply(benchmark::State& state) {
    auto p = random_poly(10, 3, 20, 1);
    auto q = random_poly(10, 3, 20, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_Multiply);

static void BM_ComposeValueWithDynamics(benchmark::State& state) {
    model::QuadcopterParams params;
    auto dyn = model::discretize_euler(model::taylor_dynamics(params), 0.02);
    auto quad = random_poly(6, 2, 15, 3);
    std::vector<poly::Polynomial> subs = dyn;
    for (int i = 0; i < 4; ++i) {
        subs.push_back(poly::Polynomial::variable(10, 6 + i));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(quad.compose(std::vector<poly::Polynomial>(subs.begin(), subs.begin() + 6)));
    }
}
BENCHMARK(BM_ComposeValueWithDynamics);

static void BM_PrunedGramBasis(benchmark::State& state) {
    model::QuadcopterParams params;
    adp::FitOptions opt;
    auto m = adp::make_full_fitting_model(params, adp::StageCost::defaults_full());
    for (auto _ : state) {
        // half-degree basis over the Bellman support with Newton-polytope pruning
        std::vector<poly::Exponent> support;
        for (const auto& f : m.dynamics) {
            auto sq = f * f;
            for (const auto& [e, c] : sq.terms()) support.push_back(e);
        }
        benchmark::DoNotOptimize(poly::basis_up_to_degree_support(10, 3, support));
    }
}
BENCHMARK(BM_PrunedGramBasis)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
