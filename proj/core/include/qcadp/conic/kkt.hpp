#pragma once

#include "qcadp/conic/scaling.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qcadp::conic::detail {

/// Factorization of the scaled KKT system
///   [ 0    Aeq'  G'   ] [dx]   [bx]
///   [ Aeq  0     0    ] [dy] = [by]
///   [ G    0    -W'W  ] [dz]   [bz]
/// solved by eliminating dz, Cholesky on H = G'(W'W)^{-1}G, and a Schur
/// complement on the equality block.
class KktSolver {
public:
    KktSolver(const Eigen::SparseMatrix<double>& G, const Eigen::SparseMatrix<double>& Aeq);

    /// Refactor for a new scaling. Returns false if the system is too
    /// ill-conditioned to factor even with regularization.
    bool factor(const NTScaling& W);

    struct Sol {
        Eigen::VectorXd x, y, z;
    };
    /// Solves the 3x3 system above, with iterative refinement.
    Sol solve(const Eigen::VectorXd& bx, const Eigen::VectorXd& by, const Eigen::VectorXd& bz,
              int refine_steps) const;

private:
    const Eigen::SparseMatrix<double>& G_;   // cone rows x n
    const Eigen::SparseMatrix<double>& Aeq_; // meq rows x n
    const NTScaling* W_ = nullptr;
    Eigen::MatrixXd scaledG_; // (W'W)^{-1} G, dense
    Eigen::LLT<Eigen::MatrixXd> lltH_;
    Eigen::MatrixXd HinvAt_;
    Eigen::LLT<Eigen::MatrixXd> lltS_;
    double reg_ = 0.0;

    Sol solve_once(const Eigen::VectorXd& bx, const Eigen::VectorXd& by,
                   const Eigen::VectorXd& bz) const;
};

} // namespace qcadp::conic::detail
