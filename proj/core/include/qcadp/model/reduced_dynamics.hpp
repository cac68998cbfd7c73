#pragma once

#include "qcadp/model/params.hpp"
#include "qcadp/poly/polynomial.hpp"

#include <vector>

namespace qcadp::model {

/// Variable layout of a polynomial reduced model: states first, then inputs.
/// Input indices are absolute positions in the (x, u) variable vector; -1
/// marks an input absent from the model.
struct ReducedLayout {
    int n_states = 0;
    int n_inputs = 0;
    int idx_roll = -1;
    int idx_pitch = -1;
    int idx_yaw = -1;
    int idx_thrust = -1;

    int arity() const { return n_states + n_inputs; }
};

inline ReducedLayout full_layout() { return {6, 4, 6, 7, 8, 9}; }
/// Planar model: states (p_x, p_z, v_x, v_z), inputs (pitch, thrust).
inline ReducedLayout planar_layout() { return {4, 2, -1, 4, -1, 5}; }

/// Continuous-time third-order polynomial translational dynamics in the
/// outer-loop variables x = (p, v), u = (roll, pitch, yaw, thrust): the joint
/// Taylor expansion of the rigid-body acceleration around hover. Returns one
/// polynomial per state derivative.
std::vector<poly::Polynomial> taylor_dynamics(const QuadcopterParams& params);

/// Planar restriction (x-z plane, roll = yaw = 0).
std::vector<poly::Polynomial> planar_taylor_dynamics(const QuadcopterParams& params);

/// Forward Euler: x+ = x + dt * f_c(x, u); degree-preserving.
std::vector<poly::Polynomial> discretize_euler(const std::vector<poly::Polynomial>& cont,
                                               double dt);

} // namespace qcadp::model
