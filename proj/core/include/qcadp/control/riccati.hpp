#pragma once

#include <Eigen/Core>

namespace qcadp::control {

struct RiccatiSolution {
    Eigen::MatrixXd P;    ///< symmetric PSD cost-to-go matrix
    Eigen::MatrixXd K;    ///< feedback gain, u = -K x
    double residual = 0;  ///< fixed-point residual at termination
    int iterations = 0;
    bool converged = false;
};

/// Discrete algebraic Riccati equation by fixed-point iteration from P = Q,
/// run until the residual drops below 1e-10 (capped at 1e4 iterations).
/// `discount` scales the one-step propagation (1.0 recovers the standard DARE).
RiccatiSolution dare_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                           double discount = 1.0);

} // namespace qcadp::control
