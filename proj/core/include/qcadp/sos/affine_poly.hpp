#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <Eigen/Core>

#include <map>
#include <vector>

namespace qcadp::sos {

/// Affine function of the program's scalar decision variables.
struct LinearCoeff {
    double constant = 0.0;
    std::vector<std::pair<int, double>> terms;

    LinearCoeff() = default;
    LinearCoeff(double c) : constant(c) {} // NOLINT(google-explicit-constructor)

    LinearCoeff& add(int var, double coeff) {
        if (coeff != 0.0) terms.emplace_back(var, coeff);
        return *this;
    }
    LinearCoeff& operator+=(const LinearCoeff& o) {
        constant += o.constant;
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    LinearCoeff scaled(double s) const {
        LinearCoeff r;
        r.constant = constant * s;
        r.terms.reserve(terms.size());
        for (const auto& [v, c] : terms) r.terms.emplace_back(v, c * s);
        return r;
    }
};

/// Polynomial whose coefficients are affine in decision variables: the form
/// every sum-of-squares assertion target takes (unknown value-function
/// coefficients and multiplier Gram entries enter linearly).
class AffinePoly {
public:
    AffinePoly() : arity_(0) {}
    explicit AffinePoly(std::size_t arity) : arity_(arity) {}

    std::size_t arity() const { return arity_; }
    const std::map<poly::Exponent, LinearCoeff>& terms() const { return terms_; }

    void add_term(const poly::Exponent& e, const LinearCoeff& c);
    /// target += scale * p (fixed polynomial).
    void add_poly(const poly::Polynomial& p, double scale = 1.0);
    /// target += var * scale * p.
    void add_poly_times_var(const poly::Polynomial& p, int var, double scale = 1.0);
    void add_scaled(const AffinePoly& other, double scale);

    std::vector<poly::Exponent> support() const;

    /// Substitutes decision-variable values, yielding a fixed polynomial.
    poly::Polynomial instantiate(const Eigen::Ref<const Eigen::VectorXd>& values) const;

private:
    std::size_t arity_;
    std::map<poly::Exponent, LinearCoeff> terms_;
};

/// a * g for a fixed polynomial g.
AffinePoly multiply_affine(const AffinePoly& a, const poly::Polynomial& g);

} // namespace qcadp::sos
