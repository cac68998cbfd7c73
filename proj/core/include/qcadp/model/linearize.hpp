#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <Eigen/Core>

#include <vector>

namespace qcadp::model {

/// Exact affine model x+ = A x + B u + g of a polynomial map at an expansion
/// point, from symbolic Jacobians; reproduces the map at (xbar, ubar) exactly.
struct AffineDynamics {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::VectorXd g;
};

AffineDynamics linearize(const std::vector<poly::Polynomial>& dyn,
                         const Eigen::VectorXd& xbar, const Eigen::VectorXd& ubar);

/// Evaluates the polynomial map at a stacked (x, u) point.
Eigen::VectorXd eval_dynamics(const std::vector<poly::Polynomial>& dyn,
                              const Eigen::VectorXd& xbar, const Eigen::VectorXd& ubar);

} // namespace qcadp::model
