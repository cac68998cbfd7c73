#include "qcadp/cli/commands.hpp"

#include "qcadp/adp/family_io.hpp"
#include "qcadp/common/csv.hpp"
#include "qcadp/sim/trace_io.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>

namespace qcadp::cli {

namespace {

namespace fs = std::filesystem;

bool refuse_overwrite(const fs::path& p, bool force) {
    if (fs::exists(p) && !force) {
        std::cerr << "refusing to overwrite " << p.string() << " (use --force)\n";
        return true;
    }
    return false;
}

adp::FittingModel fitting_model_for(const ExperimentConfig& cfg) {
    auto m = cfg.model == "planar" ? adp::make_planar_fitting_model(cfg.params, cfg.cost)
                                   : adp::make_full_fitting_model(cfg.params, cfg.cost);
    m.state_ball_radius = cfg.state_ball_radius;
    return m;
}

std::optional<adp::ValueFunctionFamily> load_family_if_needed(const ExperimentConfig& cfg,
                                                              bool required) {
    const bool any_adp =
        std::any_of(cfg.policies.begin(), cfg.policies.end(), [](const auto& p) {
            return p.kind == control::PolicyKind::NlGpAdp ||
                   p.kind == control::PolicyKind::LtvMpcAdp;
        });
    if (!any_adp && !required) return std::nullopt;
    if (cfg.family_file.empty()) {
        throw std::runtime_error("an ADP policy is configured but no family_file is set");
    }
    return adp::load_family(cfg.family_file);
}

void write_cuts_csv(const fs::path& path, const adp::ValueFunctionFamily& fam,
                    std::uint64_t hash, int axis) {
    std::vector<std::string> cols{"x"};
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        cols.push_back("member_" + std::to_string(i));
    }
    cols.push_back("pwm");
    cols.push_back("argmax");
    CsvWriter csv(path, hash, cols);
    const auto values = fam.values();
    for (int k = 0; k <= 240; ++k) {
        const double v = -3.0 + 6.0 * k / 240.0;
        Eigen::VectorXd x = Eigen::VectorXd::Zero(fam.n_states);
        x[axis] = v;
        std::vector<double> row{v};
        for (const auto& m : values) row.push_back(m.eval(x));
        const auto pwm = adp::pwm_value(values, x);
        row.push_back(pwm.value);
        row.push_back(static_cast<double>(pwm.argmax));
        csv.row(row);
    }
}

} // namespace

int cmd_fit(const ExperimentConfig& cfg, const CliOptions& opt) {
    fs::create_directories(opt.out_dir);
    const fs::path fam_path =
        cfg.family_file.empty() ? opt.out_dir / "family.txt" : cfg.family_file;
    const fs::path trace_path = opt.out_dir / "fit_trace.csv";
    if (refuse_overwrite(fam_path, opt.force) || refuse_overwrite(trace_path, opt.force)) {
        return kExitUsage;
    }

    adp::FitOptions fit = cfg.fit;
    if (opt.jobs > 1) fit.jobs = opt.jobs;
    adp::BellmanFitter fitter(fitting_model_for(cfg), fit);
    auto fam = fitter.fit_family(cfg.weights);

    int failures = 0;
    CsvWriter csv(trace_path, cfg.hash,
                  {"weight_index", "scale", "iteration", "objective", "solve_ms"});
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        if (!m.report.ok) {
            ++failures;
            std::cerr << "weight " << i << " (scale " << m.weight_scale
                      << ") failed: " << m.report.message << "\n";
            continue;
        }
        for (std::size_t it = 0; it < m.report.objective_trace.size(); ++it) {
            csv.row({static_cast<double>(i), m.weight_scale, static_cast<double>(it + 1),
                     m.report.objective_trace[it], m.report.solve_times_ms[it]});
        }
        std::cout << "weight " << i << " scale " << m.weight_scale << ": "
                  << m.report.objective_trace.size() << " iterations, objective "
                  << m.objective << " (" << m.report.termination << ")\n";
    }
    adp::save_family(fam_path, fam);
    std::cout << "family with " << fam.members.size() - failures << "/" << fam.members.size()
              << " members written to " << fam_path.string() << "\n";
    return failures == 0 ? kExitOk : kExitSolver;
}

int cmd_simulate(const ExperimentConfig& cfg, const CliOptions& opt) {
    if (cfg.policies.empty()) {
        std::cerr << "no policies configured; nothing to simulate\n";
        return kExitUsage;
    }
    fs::create_directories(opt.out_dir);
    auto family = load_family_if_needed(cfg, false);
    const auto& pc = cfg.policies.front();
    const fs::path trace_path =
        opt.out_dir / ("trace_" + control::to_string(pc.kind) + "_N" +
                       std::to_string(pc.horizon) + ".csv");
    if (refuse_overwrite(trace_path, opt.force)) return kExitUsage;

    auto policy = control::make_policy(cfg.params, pc, family);
    auto trace = sim::run_closed_loop(cfg.sim, *policy, cfg.params);
    sim::write_trace_csv(trace_path, trace, cfg.hash);
    auto metrics = sim::accumulate_cost(trace, cfg.cost, cfg.params, cfg.sim.setpoint);
    std::cout << "trace written to " << trace_path.string() << "; cost " << metrics.cost
              << (metrics.converged ? "" : " (not converged)") << "\n";
    if (trace.aborted) {
        std::cerr << "simulation aborted: " << trace.abort_reason << "\n";
        return kExitSolver;
    }
    return kExitOk;
}

int cmd_compare(const ExperimentConfig& cfg, const CliOptions& opt) {
    if (cfg.policies.empty()) {
        std::cerr << "no policies configured; nothing to compare\n";
        return kExitUsage;
    }
    fs::create_directories(opt.out_dir);
    const fs::path metrics_path = opt.out_dir / "metrics.csv";
    if (refuse_overwrite(metrics_path, opt.force)) return kExitUsage;

    auto family = load_family_if_needed(cfg, false);

    sim::SweepRequest req;
    req.sim = cfg.sim;
    req.cost = cfg.cost;
    req.horizons = cfg.horizons;
    req.jobs = std::max(1, opt.jobs);
    for (const auto& p : cfg.policies) req.kinds.push_back(p.kind);

    auto cells = sim::sweep_horizons(req, cfg.params, family);
    sim::write_metrics_csv(metrics_path, cells, cfg.hash);

    // per-cell traces for the step-response figures
    for (const auto& c : cells) {
        if (!c.ok) continue;
        control::PolicyConfig pc;
        pc.kind = c.kind;
        pc.horizon = c.horizon;
        pc.cost = cfg.cost;
        auto policy = control::make_policy(cfg.params, pc, family);
        auto trace = sim::run_closed_loop(cfg.sim, *policy, cfg.params);
        const fs::path tp = opt.out_dir / ("trace_" + control::to_string(c.kind) + "_N" +
                                           std::to_string(c.horizon) + ".csv");
        if (!fs::exists(tp) || opt.force) sim::write_trace_csv(tp, trace, cfg.hash);
    }

    if (family) {
        const int axis = cfg.model == "planar" ? 3 : 5; // vertical-velocity state
        write_cuts_csv(opt.out_dir / "cuts.csv", *family, cfg.hash, axis);
    }

    for (const auto& c : cells) {
        std::printf("%-12s N=%-3d cost %.4f %s\n", control::to_string(c.kind).c_str(), c.horizon,
                    c.metrics.cost,
                    c.ok ? (c.metrics.converged ? "" : "(not converged)") : c.error.c_str());
    }
    std::cout << "metrics written to " << metrics_path.string() << "\n";

    bool any_fail = std::any_of(cells.begin(), cells.end(), [](const auto& c) { return !c.ok; });
    if (opt.assert_ordering) {
        double adp_cost = -1, lqr_cost = -1;
        for (const auto& c : cells) {
            if (c.horizon != 1 || !c.ok) continue;
            if (c.kind == control::PolicyKind::LtvMpcAdp) adp_cost = c.metrics.cost;
            if (c.kind == control::PolicyKind::LtvMpcLqr) lqr_cost = c.metrics.cost;
        }
        if (adp_cost > 0 && lqr_cost > 0 && adp_cost > lqr_cost * 1.005) {
            std::cerr << "ordering violation: ADP-terminal cost " << adp_cost
                      << " exceeds LQR-terminal cost " << lqr_cost << " by more than 0.5%\n";
            return kExitOrdering;
        }
    }
    return any_fail ? kExitSolver : kExitOk;
}

int cmd_bench(const ExperimentConfig& cfg, const CliOptions& opt) {
    if (cfg.policies.empty()) {
        std::cout << "no policies configured; nothing to benchmark\n";
        return kExitOk;
    }
    fs::create_directories(opt.out_dir);
    const fs::path bench_path = opt.out_dir / "bench.csv";
    if (refuse_overwrite(bench_path, opt.force)) return kExitUsage;

    auto family = load_family_if_needed(cfg, false);

    CsvWriter csv(bench_path, cfg.hash,
                  {"policy", "horizon", "solve_ms_min", "solve_ms_q1", "solve_ms_median",
                   "solve_ms_q3", "solve_ms_max", "budget_ms", "within_budget"});
    sim::SimConfig bench_sim = cfg.sim;
    bench_sim.duration = cfg.bench_duration;

    for (const auto& p : cfg.policies) {
        // grow the horizon until the worst solve exceeds the real-time budget
        for (int N = 1; N <= cfg.bench_max_horizon; ++N) {
            sim::SweepRequest req;
            req.sim = bench_sim;
            req.cost = cfg.cost;
            req.kinds = {p.kind};
            req.horizons = {N};
            auto cells = sim::sweep_horizons(req, cfg.params, family);
            const auto& c = cells.front();
            const bool within = c.solve_ms_max <= cfg.bench_budget_ms;
            csv.row_mixed({control::to_string(p.kind), std::to_string(N),
                           CsvWriter::num(c.solve_ms_min), CsvWriter::num(c.solve_ms_q1),
                           CsvWriter::num(c.solve_ms_median), CsvWriter::num(c.solve_ms_q3),
                           CsvWriter::num(c.solve_ms_max), CsvWriter::num(cfg.bench_budget_ms),
                           std::to_string(within ? 1 : 0)});
            std::printf("%-12s N=%-3d median %.3f ms max %.3f ms %s\n",
                        control::to_string(p.kind).c_str(), N, c.solve_ms_median, c.solve_ms_max,
                        within ? "" : "(over budget)");
            if (!within || p.kind == control::PolicyKind::NlGpAdp) break;
        }
    }
    std::cout << "benchmark written to " << bench_path.string() << "\n";
    return kExitOk;
}

int cmd_cut(const ExperimentConfig& cfg, const CliOptions& opt) {
    auto family = load_family_if_needed(cfg, true);
    fs::create_directories(opt.out_dir);
    const fs::path cut_path = opt.out_dir / "cuts.csv";
    if (refuse_overwrite(cut_path, opt.force)) return kExitUsage;
    const int axis = cfg.model == "planar" ? 3 : 5;
    write_cuts_csv(cut_path, *family, cfg.hash, axis);
    std::cout << "value-function cuts written to " << cut_path.string() << "\n";
    return kExitOk;
}

} // namespace qcadp::cli
