#include "qcadp/conic/kkt.hpp"

namespace qcadp::conic::detail {

using Eigen::MatrixXd;
using Eigen::VectorXd;

KktSolver::KktSolver(const Eigen::SparseMatrix<double>& G, const Eigen::SparseMatrix<double>& Aeq)
    : G_(G), Aeq_(Aeq) {}

bool KktSolver::factor(const NTScaling& W) {
    W_ = &W;
    const int n = static_cast<int>(G_.cols());
    const int p = static_cast<int>(G_.rows());
    const int meq = static_cast<int>(Aeq_.rows());

    scaledG_.setZero(p, n);
    std::vector<std::pair<int, double>> col_entries;
    for (int j = 0; j < n; ++j) {
        col_entries.clear();
        for (Eigen::SparseMatrix<double>::InnerIterator it(G_, j); it; ++it) {
            col_entries.emplace_back(static_cast<int>(it.row()), it.value());
        }
        if (!col_entries.empty()) {
            W.apply_WtW_inv_sparse(col_entries, scaledG_.col(j).data());
        }
    }

    MatrixXd H = MatrixXd::Zero(n, n);
    if (p > 0) H = G_.transpose() * scaledG_;
    H = 0.5 * (H + H.transpose()).eval();

    const double base = H.diagonal().cwiseAbs().maxCoeff() + 1.0;
    reg_ = 0.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        MatrixXd Hreg = H;
        if (reg_ > 0) Hreg.diagonal().array() += reg_;
        lltH_.compute(Hreg);
        if (lltH_.info() == Eigen::Success) {
            if (meq == 0) return true;
            MatrixXd At = MatrixXd(Aeq_.transpose());
            HinvAt_ = lltH_.solve(At);
            MatrixXd S = Aeq_ * HinvAt_;
            S = 0.5 * (S + S.transpose()).eval();
            if (reg_ > 0) S.diagonal().array() += reg_;
            lltS_.compute(S);
            if (lltS_.info() == Eigen::Success) return true;
        }
        reg_ = (reg_ == 0.0) ? 1e-12 * base : reg_ * 100.0;
    }
    return false;
}

KktSolver::Sol KktSolver::solve_once(const VectorXd& bx, const VectorXd& by,
                                     const VectorXd& bz) const {
    Sol sol;
    // b~x = bx + G'(W'W)^{-1} bz
    VectorXd btx = bx;
    if (G_.rows() > 0) btx += G_.transpose() * W_->apply_WtW_inv(bz);
    const int meq = static_cast<int>(Aeq_.rows());
    if (meq > 0) {
        VectorXd rhs = Aeq_ * lltH_.solve(btx) - by;
        sol.y = lltS_.solve(rhs);
        sol.x = lltH_.solve(btx - Aeq_.transpose() * sol.y);
    } else {
        sol.y.resize(0);
        sol.x = lltH_.solve(btx);
    }
    if (G_.rows() > 0) {
        sol.z = W_->apply_WtW_inv(VectorXd(G_ * sol.x) - bz);
    } else {
        sol.z.resize(0);
    }
    return sol;
}

KktSolver::Sol KktSolver::solve(const VectorXd& bx, const VectorXd& by, const VectorXd& bz,
                                int refine_steps) const {
    Sol sol = solve_once(bx, by, bz);
    const double rhs_scale = std::max({bx.size() ? bx.lpNorm<Eigen::Infinity>() : 0.0,
                                       by.size() ? by.lpNorm<Eigen::Infinity>() : 0.0,
                                       bz.size() ? bz.lpNorm<Eigen::Infinity>() : 0.0, 1.0});
    double prev_rn = std::numeric_limits<double>::infinity();
    for (int r = 0; r < refine_steps; ++r) {
        // Residuals of the full 3x3 system.
        VectorXd r1 = bx;
        if (Aeq_.rows() > 0) r1 -= Aeq_.transpose() * sol.y;
        if (G_.rows() > 0) r1 -= G_.transpose() * sol.z;
        VectorXd r2 = by;
        if (Aeq_.rows() > 0) r2 -= Aeq_ * sol.x;
        VectorXd r3 = bz;
        if (G_.rows() > 0) r3 -= VectorXd(G_ * sol.x) - W_->apply_WtW(sol.z);
        const double rn = std::max({r1.size() ? r1.lpNorm<Eigen::Infinity>() : 0.0,
                                    r2.size() ? r2.lpNorm<Eigen::Infinity>() : 0.0,
                                    r3.size() ? r3.lpNorm<Eigen::Infinity>() : 0.0});
        if (rn < 1e-13 * rhs_scale || rn > 0.5 * prev_rn) break;
        prev_rn = rn;
        Sol corr = solve_once(r1, r2, r3);
        sol.x += corr.x;
        if (sol.y.size()) sol.y += corr.y;
        if (sol.z.size()) sol.z += corr.z;
    }
    return sol;
}

} // namespace qcadp::conic::detail
