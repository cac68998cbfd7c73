#pragma once

#include "qcadp/model/params.hpp"

#include <Eigen/Core>

namespace qcadp::control {

/// Inverse of the linear map (f1..f4) -> (total thrust, roll, pitch, yaw
/// torque) defined by the rotor geometry.
class MixerMap {
public:
    explicit MixerMap(const model::QuadcopterParams& params);

    struct Allocation {
        Eigen::Vector4d thrusts;
        bool saturated = false;
    };
    /// Solves the map exactly, then clips each motor to [0, motor_max].
    Allocation allocate(double total_thrust, const Eigen::Vector3d& torque) const;

    /// Forward map, for round-trip checks.
    Eigen::Vector4d wrench(const Eigen::Vector4d& thrusts) const;

private:
    Eigen::Matrix4d map_;     // rows: total, tau_x, tau_y, tau_z
    Eigen::Matrix4d inverse_;
    double motor_max_;
};

} // namespace qcadp::control
