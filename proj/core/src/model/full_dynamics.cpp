#include "qcadp/model/full_dynamics.hpp"

#include <Eigen/Geometry>

#include <cmath>

namespace qcadp::model {

Eigen::Vector3d body_z_column(const Eigen::Vector3d& psi) {
    const double cg = std::cos(psi[0]), sg = std::sin(psi[0]); // roll
    const double cb = std::cos(psi[1]), sb = std::sin(psi[1]); // pitch
    const double ca = std::cos(psi[2]), sa = std::sin(psi[2]); // yaw
    return {ca * sb * cg + sa * sg, sa * sb * cg - ca * sg, cb * cg};
}

FullState full_derivative(const FullState& s, const Eigen::Vector4d& thrusts,
                          const QuadcopterParams& params) {
    constexpr double kGuard = 1.5707963267948966 - 1e-3;
    if (std::abs(s.psi[1]) >= kGuard) throw GimbalLockError(s.psi[1]);

    FullState d;
    d.p = s.v;

    const double f_total = thrusts.sum();
    d.v = body_z_column(s.psi) * (f_total / params.mass);
    d.v[2] -= params.gravity;

    Eigen::Vector3d torque = Eigen::Vector3d::Zero();
    for (int i = 0; i < 4; ++i) {
        torque[0] += thrusts[i] * params.rotor_y[i];
        torque[1] -= thrusts[i] * params.rotor_x[i];
        torque[2] += thrusts[i] * params.rotor_tau[i];
    }
    const Eigen::Vector3d J = params.inertia_diag;
    const Eigen::Vector3d Jw(J[0] * s.omega[0], J[1] * s.omega[1], J[2] * s.omega[2]);
    const Eigen::Vector3d gyro = s.omega.cross(Jw);
    d.omega = (torque - gyro).cwiseQuotient(J);

    // ZYX Euler-angle kinematics.
    const double cg = std::cos(s.psi[0]), sg = std::sin(s.psi[0]);
    const double cb = std::cos(s.psi[1]), tb = std::tan(s.psi[1]);
    d.psi[0] = s.omega[0] + sg * tb * s.omega[1] + cg * tb * s.omega[2];
    d.psi[1] = cg * s.omega[1] - sg * s.omega[2];
    d.psi[2] = (sg * s.omega[1] + cg * s.omega[2]) / cb;
    return d;
}

} // namespace qcadp::model
