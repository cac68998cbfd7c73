#pragma once

#include "qcadp/conic/problem.hpp"

#include <vector>

namespace qcadp::conic {

/// Affine expression over problem variables: sum of coeff*var plus a constant.
struct LinExpr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    LinExpr() = default;
    LinExpr(double c) : constant(c) {} // NOLINT(google-explicit-constructor)
    static LinExpr var(int index, double coeff = 1.0) {
        LinExpr e;
        e.terms.emplace_back(index, coeff);
        return e;
    }
    LinExpr& add(int index, double coeff) {
        if (coeff != 0.0) terms.emplace_back(index, coeff);
        return *this;
    }
    LinExpr& operator+=(const LinExpr& o);
    LinExpr operator*(double s) const;
};

/// Incremental construction of a ConicProblem: variables, objective terms,
/// and rows in call order.
class ProblemBuilder {
public:
    int add_vars(int count);
    int n_vars() const { return n_vars_; }

    void add_objective(int var, double coeff);
    void add_objective(const LinExpr& e); // constant part tracked separately

    void add_eq(const LinExpr& e);          // e == 0
    void add_nonneg(const LinExpr& e);      // e >= 0
    void add_soc(const std::vector<LinExpr>& exprs); // (e0; e1..) in SOC
    /// Adds side*(side+1)/2 fresh variables holding svec(M) plus the PSD rows
    /// pinning the slack to them; returns the index of the first svec variable.
    int add_psd_slack(int side);

    double objective_offset() const { return obj_offset_; }
    ConicProblem build() const;

private:
    int n_vars_ = 0;
    int n_rows_ = 0;
    std::vector<std::pair<int, double>> obj_;
    double obj_offset_ = 0.0;
    std::vector<Eigen::Triplet<double>> A_;
    std::vector<double> b_;
    std::vector<ConeBlock> cones_;

    void push_row(const LinExpr& e); // emits s-row:  -terms + s = constant
};

} // namespace qcadp::conic
