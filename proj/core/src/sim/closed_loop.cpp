#include "qcadp/sim/closed_loop.hpp"

#include <cmath>
#include <stdexcept>

namespace qcadp::sim {

void SimConfig::validate() const {
    if (!(duration > 0)) throw std::invalid_argument("sim: duration must be positive");
    const double ratio = inner_rate / outer_rate;
    if (std::abs(ratio - std::round(ratio)) > 1e-9) {
        throw std::invalid_argument("sim: inner rate must be an integer multiple of outer rate");
    }
    const double steps_per_inner = 1.0 / (inner_rate * integrator_step);
    if (std::abs(steps_per_inner - std::round(steps_per_inner)) > 1e-9 || steps_per_inner < 1) {
        throw std::invalid_argument("sim: integrator step must divide the inner period");
    }
}

namespace {

model::FullState rk4_step(const model::FullState& s, const Eigen::Vector4d& thrusts,
                          const model::QuadcopterParams& p, double h) {
    auto add = [](const model::FullState& a, const model::FullState& b, double f) {
        model::FullState r;
        r.p = a.p + f * b.p;
        r.v = a.v + f * b.v;
        r.psi = a.psi + f * b.psi;
        r.omega = a.omega + f * b.omega;
        return r;
    };
    const auto k1 = model::full_derivative(s, thrusts, p);
    const auto k2 = model::full_derivative(add(s, k1, h / 2), thrusts, p);
    const auto k3 = model::full_derivative(add(s, k2, h / 2), thrusts, p);
    const auto k4 = model::full_derivative(add(s, k3, h), thrusts, p);
    model::FullState sum = k1;
    sum.p += 2 * k2.p + 2 * k3.p + k4.p;
    sum.v += 2 * k2.v + 2 * k3.v + k4.v;
    sum.psi += 2 * k2.psi + 2 * k3.psi + k4.psi;
    sum.omega += 2 * k2.omega + 2 * k3.omega + k4.omega;
    return add(s, sum, h / 6);
}

} // namespace

SimTrace run_closed_loop(const SimConfig& cfg, control::OuterPolicy& policy,
                         const model::QuadcopterParams& params, const control::PidGains& gains) {
    cfg.validate();
    SimTrace trace;
    trace.outer_dt = 1.0 / cfg.outer_rate;

    control::PidAttitude pid(gains);
    control::MixerMap mixer(params);
    auto constraints = model::constraint_polys(params, model::full_layout());
    policy.reset();

    model::FullState s = cfg.initial;
    const int plant_per_inner =
        static_cast<int>(std::round(1.0 / (cfg.inner_rate * cfg.integrator_step)));
    const int inner_per_outer = static_cast<int>(std::round(cfg.inner_rate / cfg.outer_rate));
    const int n_outer = static_cast<int>(std::round(cfg.duration * cfg.outer_rate));

    model::InputRef u_ref = model::InputRef::hover(params);
    Eigen::Vector4d thrusts = Eigen::Vector4d::Constant(params.hover_thrust() / 4);

    try {
        for (int tick = 0; tick < n_outer; ++tick) {
            const double t_now = tick * trace.outer_dt;

            // Row holds the measured state and the command computed from it.
            const model::FullState measured = s;
            Eigen::Matrix<double, 6, 1> x_err = model::reduce(measured).vec();
            x_err.head<3>() -= cfg.setpoint;
            control::SolveStats stats;
            u_ref = policy.step(x_err, stats);

            bool first_inner = true;
            Eigen::Vector4d motors_at_tick = thrusts;
            for (int i = 0; i < inner_per_outer; ++i) {
                const auto torque = pid.step(s, u_ref, 1.0 / cfg.inner_rate);
                thrusts = mixer.allocate(u_ref.thrust, torque).thrusts;
                if (first_inner) {
                    motors_at_tick = thrusts;
                    first_inner = false;
                }
                for (int k = 0; k < plant_per_inner; ++k) {
                    s = rk4_step(s, thrusts, params, cfg.integrator_step);
                }
            }

            trace.t.push_back(t_now);
            trace.state.push_back(measured);
            trace.input.push_back(u_ref);
            trace.motors.push_back(motors_at_tick);
            trace.solve_ms.push_back(stats.solve_ms);
            trace.g_theta.push_back(model::eval_g_theta(constraints, u_ref.roll, u_ref.pitch));
            trace.g_f.push_back(model::eval_g_f(params, u_ref.thrust));
            trace.policy_ok.push_back(stats.ok ? 1 : 0);
        }
    } catch (const model::GimbalLockError& e) {
        trace.aborted = true;
        trace.abort_reason = e.what();
    }
    return trace;
}

} // namespace qcadp::sim
