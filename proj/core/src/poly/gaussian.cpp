#include "qcadp/poly/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace qcadp::poly {

GaussianMeasure::GaussianMeasure(std::vector<double> v) : variances(std::move(v)) {
    for (double s2 : variances) {
        if (!(s2 > 0.0)) throw std::invalid_argument("gaussian variances must be positive");
    }
}

double gaussian_moment(const Exponent& e, const GaussianMeasure& mu) {
    if (e.arity() != mu.arity()) throw std::invalid_argument("measure arity mismatch");
    double m = 1.0;
    for (std::size_t i = 0; i < e.arity(); ++i) {
        const int k = e[i];
        if (k == 0) continue;
        if (k % 2 == 1) return 0.0;
        // sigma^k (k-1)!!, with sigma^k = var^(k/2) for even k
        double dfact = 1.0;
        for (int j = k - 1; j >= 1; j -= 2) dfact *= j;
        m *= std::pow(mu.variances[i], k / 2) * dfact;
    }
    return m;
}

double gaussian_expectation(const Polynomial& p, const GaussianMeasure& mu) {
    if (p.arity() != mu.arity()) throw std::invalid_argument("measure arity mismatch");
    double total = 0.0;
    for (const auto& [e, c] : p.terms()) total += c * gaussian_moment(e, mu);
    return total;
}

} // namespace qcadp::poly
