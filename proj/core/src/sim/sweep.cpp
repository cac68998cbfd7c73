#include "qcadp/sim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qcadp::sim {

namespace {

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double pos = q * (static_cast<double>(v.size()) - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double f = pos - static_cast<double>(lo);
    return v[lo] * (1 - f) + v[hi] * f;
}

} // namespace

std::vector<SweepCell> sweep_horizons(const SweepRequest& req,
                                      const model::QuadcopterParams& params,
                                      const std::optional<adp::ValueFunctionFamily>& family) {
    std::vector<SweepCell> cells;
    for (auto kind : req.kinds) {
        for (int N : req.horizons) {
            SweepCell c;
            c.kind = kind;
            c.horizon = N;
            cells.push_back(c);
            if (kind == control::PolicyKind::NlGpAdp) break; // greedy ignores N
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            SweepCell& c = cells[i];
            try {
                control::PolicyConfig cfg = req.base;
                cfg.kind = c.kind;
                cfg.horizon = c.horizon;
                cfg.cost = req.cost;
                auto policy = control::make_policy(params, cfg, family);
                SimTrace trace = run_closed_loop(req.sim, *policy, params);
                c.metrics = accumulate_cost(trace, req.cost, params, req.sim.setpoint);
                c.solve_ms_min = quantile(trace.solve_ms, 0.0);
                c.solve_ms_q1 = quantile(trace.solve_ms, 0.25);
                c.solve_ms_median = quantile(trace.solve_ms, 0.5);
                c.solve_ms_q3 = quantile(trace.solve_ms, 0.75);
                c.solve_ms_max = quantile(trace.solve_ms, 1.0);
                c.ok = !trace.aborted;
                if (trace.aborted) c.error = trace.abort_reason;
            } catch (const std::exception& e) {
                c.ok = false;
                c.error = e.what();
            }
        }
    };
    const int jobs = std::max(1, req.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return cells;
}

} // namespace qcadp::sim
