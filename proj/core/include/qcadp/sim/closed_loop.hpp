#pragma once

#include "qcadp/control/mixer.hpp"
#include "qcadp/control/pid.hpp"
#include "qcadp/control/policies.hpp"
#include "qcadp/model/full_dynamics.hpp"

#include <vector>

namespace qcadp::sim {

struct SimConfig {
    double duration = 8.0;        // s
    double inner_rate = 500.0;    // Hz
    double outer_rate = 50.0;     // Hz
    double integrator_step = 1e-3; // s
    model::FullState initial;     // default: 2 m offset in p_x
    Eigen::Vector3d setpoint = Eigen::Vector3d::Zero();
    unsigned seed = 0; ///< reserved for stochastic extensions; runs are noise-free

    SimConfig() { initial.p = Eigen::Vector3d(2.0, 0.0, 0.0); }
    void validate() const;
};

/// Uniformly indexed closed-loop record at the outer-loop rate.
struct SimTrace {
    double outer_dt = 0.02;
    std::vector<double> t;
    std::vector<model::FullState> state;
    std::vector<model::InputRef> input;
    std::vector<Eigen::Vector4d> motors;
    std::vector<double> solve_ms;
    std::vector<double> g_theta;
    std::vector<double> g_f;
    std::vector<int> policy_ok;
    bool aborted = false;       ///< gimbal guard tripped; trace holds data so far
    std::string abort_reason;

    std::size_t ticks() const { return t.size(); }
};

/// Integrates the 12-state plant with classical fixed-step 4th-order steps,
/// updates the attitude PID at the inner rate and the outer policy at the
/// outer rate, and records one row per outer tick. Deterministic.
SimTrace run_closed_loop(const SimConfig& cfg, control::OuterPolicy& policy,
                         const model::QuadcopterParams& params,
                         const control::PidGains& gains = {});

} // namespace qcadp::sim
