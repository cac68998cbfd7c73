#include "qcadp/control/pid.hpp"

#include <algorithm>

namespace qcadp::control {

Eigen::Vector3d PidAttitude::step(const model::FullState& s, const model::InputRef& ref,
                                  double dt) {
    const Eigen::Vector3d error(ref.roll - s.psi[0], ref.pitch - s.psi[1], ref.yaw - s.psi[2]);
    Eigen::Vector3d torque;
    for (int i = 0; i < 3; ++i) {
        integral_[i] += error[i] * dt;
        double i_term = gains_.ki[i] * integral_[i];
        const double lim = gains_.integrator_limit[i];
        if (i_term > lim) {
            i_term = lim;
            integral_[i] = lim / gains_.ki[i];
        } else if (i_term < -lim) {
            i_term = -lim;
            integral_[i] = -lim / gains_.ki[i];
        }
        torque[i] = gains_.kp[i] * error[i] + i_term - gains_.kd[i] * s.omega[i];
    }
    return torque;
}

void PidAttitude::reset() { integral_.setZero(); }

} // namespace qcadp::control
