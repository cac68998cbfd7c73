#include "qcadp/adp/types.hpp"

#include <stdexcept>

namespace qcadp::adp {

StageCost StageCost::defaults_full() {
    StageCost c;
    c.q_diag = Eigen::VectorXd(6);
    c.q_diag << 50, 50, 50, 5, 5, 5;
    c.r_diag = Eigen::VectorXd(4);
    c.r_diag << 20, 20, 100, 1500;
    c.discount = 0.98;
    return c;
}

StageCost StageCost::defaults_planar() {
    StageCost c;
    c.q_diag = Eigen::VectorXd(4);
    c.q_diag << 50, 50, 5, 5;
    c.r_diag = Eigen::VectorXd(2);
    c.r_diag << 20, 1500;
    c.discount = 0.98;
    return c;
}

WeightFamily WeightFamily::defaults_full() {
    WeightFamily w;
    w.sigma0 = Eigen::VectorXd(6);
    w.sigma0 << 0.1, 0.1, 0.1, 1, 1, 1;
    w.scales = {0.01, 0.1, 0.3, 0.5, 0.7, 1, 1.3, 1.5, 2};
    return w;
}

WeightFamily WeightFamily::defaults_planar() {
    WeightFamily w;
    w.sigma0 = Eigen::VectorXd(4);
    w.sigma0 << 0.1, 0.1, 1, 1;
    w.scales = {0.01, 0.1, 0.3, 0.5, 0.7, 1, 1.3, 1.5, 2};
    return w;
}

double QuadraticValue::eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return x.dot(P * x) + q.dot(x) + r;
}

Eigen::VectorXd QuadraticValue::gradient(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return (P + P.transpose()) * x + q;
}

PwmEval pwm_value(const std::vector<QuadraticValue>& members,
                  const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (members.empty()) throw std::invalid_argument("pwm_value: empty family");
    PwmEval best;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const double v = members[i].eval(x);
        if (best.argmax < 0 || v > best.value) {
            best.value = v;
            best.argmax = static_cast<int>(i);
        }
    }
    return best;
}

} // namespace qcadp::adp
