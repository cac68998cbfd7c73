#pragma once

#include <Eigen/Core>

#include <vector>

namespace qcadp::adp {

/// Quadratic stage cost l(x, u) = x'Qx + u'Ru with diagonal weights; inputs
/// are measured as deviations from hover.
struct StageCost {
    Eigen::VectorXd q_diag;
    Eigen::VectorXd r_diag;
    double discount = 0.98;

    static StageCost defaults_full();
    static StageCost defaults_planar();
};

/// Family of zero-mean Gaussian state-relevance weightings: covariance
/// Sigma_i = scales[i] * diag(sigma0).
struct WeightFamily {
    Eigen::VectorXd sigma0;
    std::vector<double> scales;

    static WeightFamily defaults_full();
    static WeightFamily defaults_planar();
    Eigen::VectorXd covariance(std::size_t i) const { return sigma0 * scales.at(i); }
};

/// Fitted quadratic value function x'Px + q'x + r.
struct QuadraticValue {
    Eigen::MatrixXd P;
    Eigen::VectorXd q;
    double r = 0.0;

    int dim() const { return static_cast<int>(q.size()); }
    double eval(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    Eigen::VectorXd gradient(const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

struct PwmEval {
    double value = 0.0;
    int argmax = -1; ///< lowest index on ties
};

/// Point-wise maximum over the family members at x.
PwmEval pwm_value(const std::vector<QuadraticValue>& members,
                  const Eigen::Ref<const Eigen::VectorXd>& x);

} // namespace qcadp::adp
