#include "qcadp/sim/metrics.hpp"

#include <cmath>

namespace qcadp::sim {

Metrics accumulate_cost(const SimTrace& trace, const adp::StageCost& cost,
                        const model::QuadcopterParams& params, const Eigen::Vector3d& setpoint,
                        double state_tol, double input_tol, int dwell_ticks) {
    Metrics m;
    m.aborted = trace.aborted;
    const std::size_t n = trace.ticks();
    if (n == 0) return m;

    const Eigen::Vector4d hover = model::InputRef::hover(params).vec();

    // Find the first tick opening a dwell window where state and input stay
    // within tolerance.
    std::vector<bool> quiet(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::Matrix<double, 6, 1> x = model::reduce(trace.state[k]).vec();
        x.head<3>() -= setpoint;
        const Eigen::Vector4d du = trace.input[k].vec() - hover;
        quiet[k] = x.cwiseAbs().maxCoeff() < state_tol && du.cwiseAbs().maxCoeff() < input_tol;
    }
    int run = 0;
    for (std::size_t k = 0; k < n; ++k) {
        run = quiet[k] ? run + 1 : 0;
        if (run >= dwell_ticks) {
            m.converged = true;
            m.convergence_tick = static_cast<int>(k) - dwell_ticks + 1;
            break;
        }
    }

    const std::size_t stop = m.converged ? static_cast<std::size_t>(m.convergence_tick) : n;
    double solve_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        solve_sum += trace.solve_ms[k];
        m.solve_ms_max = std::max(m.solve_ms_max, trace.solve_ms[k]);
        if (trace.g_theta[k] < -1e-6 || trace.g_f[k] < -1e-6) ++m.constraint_violations;
    }
    m.solve_ms_mean = solve_sum / static_cast<double>(n);

    for (std::size_t k = 0; k < stop; ++k) {
        Eigen::Matrix<double, 6, 1> x = model::reduce(trace.state[k]).vec();
        x.head<3>() -= setpoint;
        const Eigen::Vector4d du = trace.input[k].vec() - hover;
        double l = 0.0;
        for (int i = 0; i < 6; ++i) l += cost.q_diag[i] * x[i] * x[i];
        for (int j = 0; j < 4; ++j) l += cost.r_diag[j] * du[j] * du[j];
        m.cost += l;
    }
    return m;
}

} // namespace qcadp::sim
