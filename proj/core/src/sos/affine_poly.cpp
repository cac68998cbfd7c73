#include "qcadp/sos/affine_poly.hpp"

#include <stdexcept>

namespace qcadp::sos {

void AffinePoly::add_term(const poly::Exponent& e, const LinearCoeff& c) {
    if (e.arity() != arity_) throw std::invalid_argument("affine poly: arity mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
}

void AffinePoly::add_poly(const poly::Polynomial& p, double scale) {
    if (p.arity() != arity_) throw std::invalid_argument("affine poly: arity mismatch");
    for (const auto& [e, c] : p.terms()) {
        add_term(e, LinearCoeff(c * scale));
    }
}

void AffinePoly::add_poly_times_var(const poly::Polynomial& p, int var, double scale) {
    if (p.arity() != arity_) throw std::invalid_argument("affine poly: arity mismatch");
    for (const auto& [e, c] : p.terms()) {
        LinearCoeff lc;
        lc.add(var, c * scale);
        add_term(e, lc);
    }
}

void AffinePoly::add_scaled(const AffinePoly& other, double scale) {
    if (other.arity_ != arity_) throw std::invalid_argument("affine poly: arity mismatch");
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c.scaled(scale));
    }
}

std::vector<poly::Exponent> AffinePoly::support() const {
    std::vector<poly::Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

poly::Polynomial AffinePoly::instantiate(const Eigen::Ref<const Eigen::VectorXd>& values) const {
    poly::Polynomial p(arity_);
    for (const auto& [e, lc] : terms_) {
        double v = lc.constant;
        for (const auto& [var, coeff] : lc.terms) {
            if (var >= values.size()) throw std::out_of_range("affine poly: variable out of range");
            v += coeff * values[var];
        }
        p.add_term(e, v);
    }
    return p;
}

AffinePoly multiply_affine(const AffinePoly& a, const poly::Polynomial& g) {
    AffinePoly out(a.arity());
    for (const auto& [e_a, lc] : a.terms()) {
        for (const auto& [e_g, c_g] : g.terms()) {
            out.add_term(e_a + e_g, lc.scaled(c_g));
        }
    }
    return out;
}

} // namespace qcadp::sos

