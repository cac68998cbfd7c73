#include "qcadp/control/mixer.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace qcadp::control {

MixerMap::MixerMap(const model::QuadcopterParams& params) : motor_max_(params.motor_max()) {
    for (int i = 0; i < 4; ++i) {
        map_(0, i) = 1.0;
        map_(1, i) = params.rotor_y[i];
        map_(2, i) = -params.rotor_x[i];
        map_(3, i) = params.rotor_tau[i];
    }
    Eigen::FullPivLU<Eigen::Matrix4d> lu(map_);
    if (!lu.isInvertible()) throw std::invalid_argument("mixer: rotor geometry not invertible");
    inverse_ = lu.inverse();
}

MixerMap::Allocation MixerMap::allocate(double total_thrust, const Eigen::Vector3d& torque) const {
    Eigen::Vector4d w(total_thrust, torque[0], torque[1], torque[2]);
    Allocation out;
    out.thrusts = inverse_ * w;
    for (int i = 0; i < 4; ++i) {
        if (out.thrusts[i] < 0.0) {
            out.thrusts[i] = 0.0;
            out.saturated = true;
        } else if (out.thrusts[i] > motor_max_) {
            out.thrusts[i] = motor_max_;
            out.saturated = true;
        }
    }
    return out;
}

Eigen::Vector4d MixerMap::wrench(const Eigen::Vector4d& thrusts) const {
    return map_ * thrusts;
}

} // namespace qcadp::control
