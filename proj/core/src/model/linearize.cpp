#include "qcadp/model/linearize.hpp"

#include <stdexcept>

namespace qcadp::model {

Eigen::VectorXd eval_dynamics(const std::vector<poly::Polynomial>& dyn,
                              const Eigen::VectorXd& xbar, const Eigen::VectorXd& ubar) {
    std::vector<double> pt(xbar.size() + ubar.size());
    for (int i = 0; i < xbar.size(); ++i) pt[i] = xbar[i];
    for (int i = 0; i < ubar.size(); ++i) pt[xbar.size() + i] = ubar[i];
    Eigen::VectorXd out(dyn.size());
    for (std::size_t r = 0; r < dyn.size(); ++r) out[r] = dyn[r].evaluate(pt);
    return out;
}

AffineDynamics linearize(const std::vector<poly::Polynomial>& dyn, const Eigen::VectorXd& xbar,
                         const Eigen::VectorXd& ubar) {
    const int nx = static_cast<int>(xbar.size());
    const int nu = static_cast<int>(ubar.size());
    if (dyn.empty() || dyn[0].arity() != static_cast<std::size_t>(nx + nu)) {
        throw std::invalid_argument("linearize: dimension mismatch");
    }
    std::vector<double> pt(nx + nu);
    for (int i = 0; i < nx; ++i) pt[i] = xbar[i];
    for (int i = 0; i < nu; ++i) pt[nx + i] = ubar[i];

    AffineDynamics out;
    out.A.resize(dyn.size(), nx);
    out.B.resize(dyn.size(), nu);
    for (std::size_t r = 0; r < dyn.size(); ++r) {
        for (int j = 0; j < nx; ++j) out.A(r, j) = dyn[r].derivative(j).evaluate(pt);
        for (int j = 0; j < nu; ++j) out.B(r, j) = dyn[r].derivative(nx + j).evaluate(pt);
    }
    out.g = eval_dynamics(dyn, xbar, ubar) - out.A * xbar - out.B * ubar;
    return out;
}

} // namespace qcadp::model
