#pragma once

#include "qcadp/conic/builder.hpp"

#include <Eigen/Dense>

namespace qcadp::conic {

/// Lowers the convex quadratic constraint
///   x' P x + q' x + r <= rhs(x)
/// into one second-order cone block, where the quadratic acts on the builder
/// variables listed in `vars` and rhs is affine. Negative eigenvalues of P
/// below -clip_tol are clipped to zero; the most negative value encountered
/// is returned so callers can surface non-convex inputs.
double add_quad_le(ProblemBuilder& builder, const Eigen::MatrixXd& P, const Eigen::VectorXd& q,
                   double r, const std::vector<int>& vars, const LinExpr& rhs,
                   double clip_tol = 1e-9);

} // namespace qcadp::conic
