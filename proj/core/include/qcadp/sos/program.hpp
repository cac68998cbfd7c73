#pragma once

#include "qcadp/conic/builder.hpp"
#include "qcadp/conic/problem.hpp"
#include "qcadp/poly/monomial_basis.hpp"
#include "qcadp/sos/affine_poly.hpp"

#include <string>
#include <vector>

namespace qcadp::sos {

struct GramHandle {
    int index = -1;
};

/// Accumulates scalar decision variables, Gram-matrix blocks, and
/// coefficient-matching rows, then lowers everything to one ConicProblem.
class SosProgram {
public:
    explicit SosProgram(std::size_t poly_arity) : arity_(poly_arity) {}

    std::size_t poly_arity() const { return arity_; }

    int add_coeff_vars(int count);
    int n_coeff_vars() const { return n_coeff_vars_; }

    /// Objective: maximize the affine expression (solver minimizes -obj).
    void set_maximize(const LinearCoeff& obj);

    /// A PSD-constrained Gram matrix over the given monomial basis. No rows
    /// are emitted; combine with gram_poly / match.
    GramHandle add_gram(const poly::MonomialBasis& basis);

    /// z' M z as a polynomial with coefficients affine in the Gram entries.
    AffinePoly gram_poly(GramHandle h) const;

    /// Emits one equality row per monomial of `residual`, pinning it to zero.
    void match_zero(const AffinePoly& residual);

    /// Asserts `target` is a sum of squares over `basis`: adds a Gram and
    /// matches z'Mz - target to zero. Throws std::runtime_error naming the
    /// uncovered monomials if the basis cannot represent the target.
    GramHandle compile_sos(const AffinePoly& target, const poly::MonomialBasis& basis);

    void add_linear_eq(const LinearCoeff& expr); // expr == 0

    struct Result {
        conic::SolveStatus status = conic::SolveStatus::NumericalLimit;
        double objective = 0.0; ///< value of the maximized expression
        Eigen::VectorXd coeffs; ///< decision-variable values
        std::vector<Eigen::MatrixXd> grams;
        conic::ConicSolution raw;
    };
    Result solve(const conic::SolverSettings& settings = {}) const;

    const poly::MonomialBasis& basis_of(GramHandle h) const { return grams_[h.index].basis; }

private:
    struct GramInfo {
        poly::MonomialBasis basis;
        int first_var; // first svec variable in the conic builder
    };

    std::size_t arity_;
    int n_coeff_vars_ = 0;
    conic::ProblemBuilder builder_;
    std::vector<GramInfo> grams_;
    LinearCoeff objective_;
    bool has_objective_ = false;

    conic::LinExpr to_linexpr(const LinearCoeff& c) const;
};

/// Reconstructed certificate for one compiled SOS assertion.
struct Certificate {
    Eigen::MatrixXd gram;
    double min_eigenvalue = 0.0;
    double reconstruction_residual = 0.0; ///< max abs coefficient deviation
};

/// Rebuilds z'Mz from the solved Gram and compares it with the instantiated
/// target. Only meaningful for optimal results.
Certificate extract_certificate(const SosProgram& prog, const SosProgram::Result& result,
                                GramHandle h, const AffinePoly& target);

} // namespace qcadp::sos
