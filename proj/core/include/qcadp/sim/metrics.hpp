#pragma once

#include "qcadp/adp/types.hpp"
#include "qcadp/sim/closed_loop.hpp"

namespace qcadp::sim {

struct Metrics {
    double cost = 0.0; ///< accumulated stage cost up to the convergence tick
    bool converged = false;
    int convergence_tick = -1;
    double solve_ms_max = 0.0;
    double solve_ms_mean = 0.0;
    int constraint_violations = 0; ///< outer ticks with g margins below -1e-6
    bool aborted = false;
};

/// Sums l(x_k, u_k) over outer ticks until the first tick of a window where
/// both the reduced state (relative to the setpoint) and the input (relative
/// to hover) stay within 1e-3 in max-norm for 25 consecutive ticks. The
/// R term measures inputs as deviations from hover. Accumulates the full
/// trace with converged = false when no such window exists.
Metrics accumulate_cost(const SimTrace& trace, const adp::StageCost& cost,
                        const model::QuadcopterParams& params, const Eigen::Vector3d& setpoint,
                        double state_tol = 1e-3, double input_tol = 1e-3, int dwell_ticks = 25);

} // namespace qcadp::sim
