#include "qcadp/control/policies.hpp"
#include "qcadp/model/reduced_dynamics.hpp"

#include <benchmark/benchmark.h>

using namespace qcadp;

namespace {

adp::ValueFunctionFamily riccati_family(const model::QuadcopterParams& p) {
    auto cost = adp::StageCost::defaults_full();
    auto dyn = model::discretize_euler(model::taylor_dynamics(p), 0.02);
    Eigen::VectorXd hover = Eigen::VectorXd::Zero(4);
    hover[3] = p.hover_thrust();
    auto lin = model::linearize(dyn, Eigen::VectorXd::Zero(6), hover);
    auto ric = control::dare_solve(lin.A, lin.B, Eigen::MatrixXd(cost.q_diag.asDiagonal()),
                                   Eigen::MatrixXd(cost.r_diag.asDiagonal()));
    adp::ValueFunctionFamily fam;
    fam.n_states = 6;
    fam.n_inputs = 4;
    fam.dt = 0.02;
    fam.discount = cost.discount;
    fam.hover_input = hover;
    fam.input_scale = Eigen::VectorXd::Ones(4);
    fam.input_scale[3] = p.hover_thrust();
    for (int i = 0; i < 9; ++i) {
        adp::FamilyMember m;
        m.value = adp::QuadraticValue{(0.7 + 0.05 * i) * ric.P, Eigen::VectorXd::Zero(6),
                                      -0.1 * i};
        fam.members.push_back(m);
    }
    return fam;
}

void run_policy_step(benchmark::State& state, control::PolicyKind kind) {
    model::QuadcopterParams p;
    auto fam = riccati_family(p);
    control::PolicyConfig cfg;
    cfg.kind = kind;
    cfg.horizon = static_cast<int>(state.range(0));
    auto policy = control::make_policy(
        p, cfg,
        (kind == control::PolicyKind::LtvMpcAdp || kind == control::PolicyKind::NlGpAdp)
            ? std::optional<adp::ValueFunctionFamily>(fam)
            : std::nullopt);
    Eigen::Matrix<double, 6, 1> x;
    x << 2, 0, 0, 0, 0, 0;
    control::SolveStats stats;
    for (auto _ : state) {
        policy->reset();
        benchmark::DoNotOptimize(policy->step(x, stats));
    }
}

} // namespace

static void BM_LtvMpcLqrStep(benchmark::State& state) {
    run_policy_step(state, control::PolicyKind::LtvMpcLqr);
}
BENCHMARK(BM_LtvMpcLqrStep)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LtvMpcAdpStep(benchmark::State& state) {
    run_policy_step(state, control::PolicyKind::LtvMpcAdp);
}
BENCHMARK(BM_LtvMpcAdpStep)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GreedyStep(benchmark::State& state) {
    run_policy_step(state, control::PolicyKind::NlGpAdp);
}
BENCHMARK(BM_GreedyStep)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
