#pragma once

#include <Eigen/Core>

#include <array>
#include <filesystem>

namespace qcadp::model {

/// Physical constants of the vehicle. The shipped defaults describe a 27 g
/// nano-quadcopter; inertia, arm geometry and torque coefficients are nominal
/// values chosen for a symmetric X configuration (see the parameter file for
/// units and provenance notes).
struct QuadcopterParams {
    double mass = 0.027;     // kg
    double gravity = 9.81;   // m/s^2
    Eigen::Vector3d inertia_diag{1.66e-5, 1.66e-5, 2.93e-5}; // kg m^2

    // Rotor i sits at (rotor_x[i], rotor_y[i]) in the body frame; rotor_tau
    // converts its thrust into yaw torque (sign = spin direction).
    std::array<double, 4> rotor_x{0.0325, -0.0325, -0.0325, 0.0325};
    std::array<double, 4> rotor_y{0.0325, 0.0325, -0.0325, -0.0325};
    std::array<double, 4> rotor_tau{-0.006, 0.006, -0.006, 0.006};

    double thrust_min = 0.0;  // N, total
    double thrust_max = 0.56; // N, total
    double max_tilt = 0.7853981633974483; // rad (45 deg)
    double motor_margin = 1.2; // per-motor clip = thrust_max/4 * margin

    double hover_thrust() const { return mass * gravity; }
    double motor_max() const { return thrust_max / 4.0 * motor_margin; }

    void validate() const;
};

QuadcopterParams load_params(const std::filesystem::path& file);
void save_params(const std::filesystem::path& file, const QuadcopterParams& p);

} // namespace qcadp::model
