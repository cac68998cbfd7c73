#include "qcadp/control/riccati.hpp"

#include <Eigen/Dense>

namespace qcadp::control {

RiccatiSolution dare_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                           double discount) {
    RiccatiSolution sol;
    const double g = discount;
    Eigen::MatrixXd P = Q;
    const int cap = 10000;
    for (int it = 0; it < cap; ++it) {
        // P+ = Q + g A'PA - g^2 A'PB (R + g B'PB)^{-1} B'PA
        Eigen::MatrixXd BtP = B.transpose() * P;
        Eigen::MatrixXd S = R + g * BtP * B;
        Eigen::MatrixXd K = S.ldlt().solve(g * BtP * A);
        Eigen::MatrixXd next = Q + g * A.transpose() * P * A - A.transpose() * BtP.transpose() * K;
        next = 0.5 * (next + next.transpose()).eval();
        const double res = (next - P).cwiseAbs().maxCoeff();
        P = next;
        sol.iterations = it + 1;
        if (res < 1e-10) {
            sol.converged = true;
            sol.residual = res;
            break;
        }
        sol.residual = res;
    }
    sol.P = P;
    Eigen::MatrixXd BtP = B.transpose() * P;
    sol.K = (R + g * BtP * B).ldlt().solve(g * BtP * A);
    return sol;
}

} // namespace qcadp::control
