#pragma once

#include "qcadp/model/params.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace qcadp::model {

/// 12-state plant state: position, velocity, ZYX Euler angles
/// (roll gamma, pitch beta, yaw alpha), body rates.
struct FullState {
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    Eigen::Vector3d psi = Eigen::Vector3d::Zero();   // (roll, pitch, yaw)
    Eigen::Vector3d omega = Eigen::Vector3d::Zero(); // body rates
};

/// Outer-loop state (position and velocity).
struct ReducedState {
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    Eigen::Vector3d v = Eigen::Vector3d::Zero();

    Eigen::Matrix<double, 6, 1> vec() const {
        Eigen::Matrix<double, 6, 1> x;
        x << p, v;
        return x;
    }
};

inline ReducedState reduce(const FullState& s) { return ReducedState{s.p, s.v}; }

/// Outer-loop command: attitude reference plus total thrust.
struct InputRef {
    double roll = 0.0;   // rad
    double pitch = 0.0;  // rad
    double yaw = 0.0;    // rad
    double thrust = 0.0; // N, total

    Eigen::Vector4d vec() const { return {roll, pitch, yaw, thrust}; }
    static InputRef hover(const QuadcopterParams& p) { return {0, 0, 0, p.hover_thrust()}; }
};

/// Raised when the pitch angle reaches the ZYX kinematic singularity.
struct GimbalLockError : std::runtime_error {
    explicit GimbalLockError(double pitch_value)
        : std::runtime_error("pitch reached the ZYX gimbal guard"), pitch(pitch_value) {}
    double pitch;
};

/// Third column of the ZYX rotation matrix (the body z-axis in the inertial
/// frame); unit norm at every attitude.
Eigen::Vector3d body_z_column(const Eigen::Vector3d& psi);

/// Rigid-body derivative: translational acceleration from the thrust sum along
/// the body z-axis minus gravity, angular acceleration from rotor torques and
/// the gyroscopic term, Euler-angle rates through the ZYX kinematic map.
/// Throws GimbalLockError if |pitch| >= pi/2 - 1e-3.
FullState full_derivative(const FullState& s, const Eigen::Vector4d& thrusts,
                          const QuadcopterParams& params);

} // namespace qcadp::model
