#include "qcadp/conic/lowering.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace qcadp::conic {

// x'Px + q'x + r <= v  with  v = rhs - q'x - r  becomes
//   || (1 - v; 2 L' x) ||_2 <= 1 + v,   P = L L'.
double add_quad_le(ProblemBuilder& builder, const Eigen::MatrixXd& P, const Eigen::VectorXd& q,
                   double r, const std::vector<int>& vars, const LinExpr& rhs, double clip_tol) {
    const int k = static_cast<int>(P.rows());
    if (P.cols() != k || q.size() != k || static_cast<int>(vars.size()) != k) {
        throw std::invalid_argument("add_quad_le: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (P + P.transpose()));
    const Eigen::VectorXd& ev = es.eigenvalues();
    double worst = ev.size() ? ev.minCoeff() : 0.0;

    LinExpr v = rhs;
    v.constant -= r;
    for (int i = 0; i < k; ++i) v.add(vars[i], -q[i]);

    std::vector<LinExpr> rows;
    LinExpr top = v;
    top.constant += 1.0; // 1 + v
    rows.push_back(top);
    LinExpr bottom = v * -1.0;
    bottom.constant += 1.0; // 1 - v
    rows.push_back(bottom);
    for (int j = 0; j < k; ++j) {
        if (ev[j] <= clip_tol) continue; // clip tiny/negative curvature
        const double s = 2.0 * std::sqrt(ev[j]);
        LinExpr row;
        for (int i = 0; i < k; ++i) {
            const double coeff = s * es.eigenvectors()(i, j);
            if (coeff != 0.0) row.add(vars[i], coeff);
        }
        rows.push_back(row);
    }
    builder.add_soc(rows);
    return worst;
}

} // namespace qcadp::conic
