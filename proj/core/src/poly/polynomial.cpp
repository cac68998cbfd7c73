#include "qcadp/poly/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcadp::poly {

int Exponent::degree() const {
    int d = 0;
    for (auto p : powers_) d += p;
    return d;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (arity() != o.arity()) throw std::invalid_argument("exponent arity mismatch");
    Exponent r(*this);
    for (std::size_t i = 0; i < powers_.size(); ++i) r.powers_[i] += o.powers_[i];
    return r;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Polynomial Polynomial::constant(std::size_t arity, double value) {
    Polynomial p(arity);
    p.add_term(Exponent(arity), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw std::invalid_argument("variable index out of range");
    Polynomial p(arity);
    Exponent e(arity);
    e[index] = 1;
    p.add_term(e, 1.0);
    return p;
}

Polynomial Polynomial::monomial(const Exponent& e, double coeff) {
    Polynomial p(e.arity());
    p.add_term(e, coeff);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

double Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Exponent& e, double c) {
    if (e.arity() != arity_) throw std::invalid_argument("term arity mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kCoeffTol) terms_.erase(it);
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kCoeffTol) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    r.prune();
    return r;
}

Polynomial Polynomial::operator*(double s) const {
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const {
    if (subs.size() != arity_) throw std::invalid_argument("compose: wrong number of substitutions");
    const std::size_t out_arity = subs.empty() ? 0 : subs[0].arity();
    for (const auto& s : subs) {
        if (s.arity() != out_arity) throw std::invalid_argument("compose: substitution arity mismatch");
    }
    Polynomial result(out_arity);
    // Cache powers of each substituted polynomial as they are needed.
    std::vector<std::vector<Polynomial>> powers(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        powers[i].push_back(Polynomial::constant(out_arity, 1.0));
    }
    auto power_of = [&](std::size_t var, int k) -> const Polynomial& {
        auto& cache = powers[var];
        while (static_cast<int>(cache.size()) <= k) {
            cache.push_back(cache.back() * subs[var]);
        }
        return cache[k];
    };
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(out_arity, c);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] > 0) term = term * power_of(i, e[i]);
        }
        result += term;
    }
    result.prune();
    return result;
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluate: point length mismatch");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        }
        total += m;
    }
    return total;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    if (index >= arity_) throw std::invalid_argument("derivative: variable out of range");
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponent d = e;
        d[index] -= 1;
        r.add_term(d, c * e[index]);
    }
    return r;
}

bool Polynomial::same_terms(const Polynomial& o, double tol) const {
    if (arity_ != o.arity_) return false;
    for (const auto& [e, c] : terms_) {
        if (std::abs(c - o.coeff(e)) > tol) return false;
    }
    for (const auto& [e, c] : o.terms_) {
        if (std::abs(c - coeff(e)) > tol) return false;
    }
    return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%g", c);
        if (!out.empty()) out += " + ";
        out += buf;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            out += "*";
            if (i < names.size()) {
                out += names[i];
            } else {
                out += "x" + std::to_string(i);
            }
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

} // namespace qcadp::poly
