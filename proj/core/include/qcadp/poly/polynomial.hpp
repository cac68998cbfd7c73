#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qcadp::poly {

/// Per-variable integer powers of one monomial. Arity is fixed by the
/// surrounding polynomial context.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t arity) : powers_(arity, 0) {}
    explicit Exponent(std::vector<std::uint8_t> powers) : powers_(std::move(powers)) {}

    std::size_t arity() const { return powers_.size(); }
    int degree() const;
    std::uint8_t operator[](std::size_t i) const { return powers_[i]; }
    std::uint8_t& operator[](std::size_t i) { return powers_[i]; }

    Exponent operator+(const Exponent& o) const;
    bool operator==(const Exponent& o) const { return powers_ == o.powers_; }
    bool operator<(const Exponent& o) const { return powers_ < o.powers_; }

    const std::vector<std::uint8_t>& powers() const { return powers_; }

private:
    std::vector<std::uint8_t> powers_;
};

/// Graded-lexicographic order: lower total degree first; within a degree class
/// the monomial with the higher power on the earliest differing variable comes
/// first (so for two variables: 1, x, y, x^2, xy, y^2).
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with real coefficients over a fixed number
/// of variables. Coefficients with magnitude below kCoeffTol are dropped on
/// construction and after every operation, so stored terms are always nonzero.
class Polynomial {
public:
    static constexpr double kCoeffTol = 1e-14;

    Polynomial() : arity_(0) {}
    explicit Polynomial(std::size_t arity) : arity_(arity) {}

    static Polynomial constant(std::size_t arity, double value);
    static Polynomial variable(std::size_t arity, std::size_t index);
    static Polynomial monomial(const Exponent& e, double coeff);

    std::size_t arity() const { return arity_; }
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, double>& terms() const { return terms_; }

    double coeff(const Exponent& e) const;
    void add_term(const Exponent& e, double c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(double s) const;
    Polynomial& operator+=(const Polynomial& o);

    /// Exact composition: substitutes subs[i] for variable i. All substituted
    /// polynomials must share one arity, which becomes the result's arity.
    Polynomial compose(std::span<const Polynomial> subs) const;

    double evaluate(std::span<const double> point) const;

    /// Partial derivative with respect to variable `index`.
    Polynomial derivative(std::size_t index) const;

    bool same_terms(const Polynomial& o, double tol = 0.0) const;

    std::string to_string(std::span<const std::string> names = {}) const;

private:
    std::size_t arity_;
    std::map<Exponent, double> terms_;

    void prune();
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

} // namespace qcadp::poly
