#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <vector>

namespace qcadp::poly {

/// Zero-mean Gaussian measure with diagonal covariance; variances are per
/// state variable, in squared state units.
struct GaussianMeasure {
    std::vector<double> variances;

    explicit GaussianMeasure(std::vector<double> v);
    std::size_t arity() const { return variances.size(); }
};

/// Exact expectation of p under the measure, via the zero-mean diagonal
/// moments E[x_i^k] = sigma_i^k (k-1)!! for even k and 0 for odd k.
double gaussian_expectation(const Polynomial& p, const GaussianMeasure& mu);

/// Expectation of a single monomial; exposed for building objectives that are
/// linear in unknown coefficients.
double gaussian_moment(const Exponent& e, const GaussianMeasure& mu);

} // namespace qcadp::poly
