#pragma once

#include "qcadp/model/full_dynamics.hpp"

#include <Eigen/Core>

namespace qcadp::control {

/// Per-axis attitude PID with rate feedback on the body rates and an
/// anti-windup clamp on the integrators. Gains are in torque units (N m per
/// rad, N m per rad s, N m per rad/s).
struct PidGains {
    Eigen::Vector3d kp{0.040, 0.040, 0.030};
    Eigen::Vector3d ki{0.050, 0.050, 0.100};
    Eigen::Vector3d kd{1.5e-3, 1.5e-3, 1.6e-3};
    Eigen::Vector3d integrator_limit{0.002, 0.002, 0.003}; ///< |ki * integral| clamp (N m)
};

class PidAttitude {
public:
    explicit PidAttitude(PidGains gains = {}) : gains_(gains) {}

    /// One inner-loop update at period dt: torque from the Euler-angle error
    /// with body-rate damping.
    Eigen::Vector3d step(const model::FullState& s, const model::InputRef& ref, double dt);

    void reset();

private:
    PidGains gains_;
    Eigen::Vector3d integral_ = Eigen::Vector3d::Zero();
};

} // namespace qcadp::control
