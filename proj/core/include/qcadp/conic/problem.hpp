#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace qcadp::conic {

/// One cone block in row order. Psd blocks are parameterized by the matrix
/// side; they occupy side*(side+1)/2 rows in scaled-triangular (svec) layout
/// with off-diagonal entries multiplied by sqrt(2).
struct ConeBlock {
    enum class Kind { Zero, NonNeg, Soc, Psd };
    Kind kind;
    int dim; // Zero/NonNeg/Soc: row count; Psd: matrix side

    int rows() const { return kind == Kind::Psd ? dim * (dim + 1) / 2 : dim; }
};

/// Standard-form cone program
///   minimize    c'x
///   subject to  A x + s = b,   s in K,
/// where K is the ordered product of the cone blocks (Zero blocks pin s = 0,
/// i.e. equality rows).
struct ConicProblem {
    int n_vars = 0;
    Eigen::VectorXd c;
    std::vector<Eigen::Triplet<double>> A;
    Eigen::VectorXd b;
    std::vector<ConeBlock> cones;

    int total_rows() const;
    /// Throws std::invalid_argument on inconsistent dimensions or non-finite data.
    void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NumericalLimit };

std::string to_string(SolveStatus s);

struct ConicSolution {
    SolveStatus status = SolveStatus::NumericalLimit;
    Eigen::VectorXd x;     ///< primal variables
    Eigen::VectorXd y;     ///< dual multipliers, one per row (full row order)
    Eigen::VectorXd s;     ///< slacks, one per row (zero on equality rows)
    double obj_primal = 0.0;
    double obj_dual = 0.0;
    double res_primal = 0.0;
    double res_dual = 0.0;
    double gap_rel = 0.0;
    double gap_abs = 0.0;
    int iterations = 0;
    double wall_ms = 0.0;
    std::string message;
};

struct SolverSettings {
    double feastol = 1e-7;
    double reltol = 1e-7;
    double abstol = 1e-10;
    int max_iters = 200;
    double step_frac = 0.99;
    int refine_steps = 2;
    /// Solve through the mechanically built dual when every cone row is a
    /// plain slack of a dedicated variable (the layout compile_sos emits);
    /// the returned solution always refers to the original problem.
    bool allow_dualize = true;
    /// Prints per-iteration progress to stderr.
    bool verbose = false;
};

/// Independently recomputed residuals and cone-membership margins for a
/// reported solution; carries no cone claims unless the status is optimal.
struct ResidualReport {
    double primal_inf = 0.0;      ///< max-norm of Ax + s - b
    double dual_inf = 0.0;        ///< max-norm of A'y + c
    double comp_gap = 0.0;        ///< |c'x + b'y|
    std::vector<double> cone_margins; ///< per non-zero block: min eigenvalue of s
    std::vector<double> dual_cone_margins; ///< per non-zero block: min eigenvalue of y
    bool has_cone_claims = false;
};

ConicSolution solve(const ConicProblem& p, const SolverSettings& settings = {});
ResidualReport verify(const ConicProblem& p, const ConicSolution& sol);

} // namespace qcadp::conic
