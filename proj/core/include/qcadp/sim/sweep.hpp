#pragma once

#include "qcadp/sim/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcadp::sim {

struct SweepCell {
    control::PolicyKind kind;
    int horizon = 1;
    Metrics metrics;
    double solve_ms_min = 0.0;
    double solve_ms_q1 = 0.0;
    double solve_ms_median = 0.0;
    double solve_ms_q3 = 0.0;
    double solve_ms_max = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepRequest {
    SimConfig sim;
    adp::StageCost cost = adp::StageCost::defaults_full();
    std::vector<control::PolicyKind> kinds;
    std::vector<int> horizons;
    int jobs = 1;
    control::PolicyConfig base; ///< solver/greedy options shared by all cells
};

/// One closed-loop run per (kind, horizon) pair. Cells are independent; a
/// failing cell is isolated and reported through its `error` field.
std::vector<SweepCell> sweep_horizons(const SweepRequest& req,
                                      const model::QuadcopterParams& params,
                                      const std::optional<adp::ValueFunctionFamily>& family);

} // namespace qcadp::sim
