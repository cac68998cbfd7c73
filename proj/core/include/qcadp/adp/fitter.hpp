#pragma once

#include "qcadp/adp/types.hpp"
#include "qcadp/conic/problem.hpp"
#include "qcadp/model/constraints.hpp"
#include "qcadp/model/params.hpp"
#include "qcadp/model/reduced_dynamics.hpp"
#include "qcadp/poly/gaussian.hpp"
#include "qcadp/sos/sprocedure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcadp::adp {

/// Everything value-function synthesis needs about one reduced model, in SI
/// units: discrete-time polynomial dynamics over (x, u), input constraints,
/// stage cost, and the hover input.
struct FittingModel {
    model::ReducedLayout layout;
    std::vector<poly::Polynomial> dynamics; ///< discretized, arity n_x + n_u
    std::vector<poly::Polynomial> constraints;
    StageCost cost;
    Eigen::VectorXd hover_input;
    Eigen::VectorXd input_scale; ///< characteristic scale per input
    double dt = 0.02;
    /// Radius of the state region the Bellman certificate covers (adds
    /// g_x = 1 - |x|^2/r^2 to the S-procedure). Over the whole state space a
    /// quadratic cannot satisfy the inequality with near-optimal curvature:
    /// the cubic input terms beat the linearized plant somewhere along every
    /// unbounded direction, which flattens the fit and de-tunes the greedy
    /// policies. Zero or infinity disables the bound.
    double state_ball_radius = 3.0;
};

FittingModel make_full_fitting_model(const model::QuadcopterParams& params,
                                     const StageCost& cost, double dt = 0.02);
FittingModel make_planar_fitting_model(const model::QuadcopterParams& params,
                                       const StageCost& cost, double dt = 0.02);

struct FitOptions {
    double improvement_threshold = 1e-5; ///< relative objective improvement
    int max_iterations = 15;
    int lambda_degree = 2;
    int theta_degree = 2; ///< degree of the convex-combination multipliers
    sos::MultiplierMode multiplier_mode = sos::MultiplierMode::PerConstraint;
    bool prune_basis = true;
    int jobs = 1;
    conic::SolverSettings solver = fit_solver_settings();
    /// A numerical-limit solve is still accepted when its verified residuals
    /// meet these bounds; the relaxation is recorded in the report.
    double accept_feas = 1e-5;
    double accept_relgap = 1e-7;

    static conic::SolverSettings fit_solver_settings();
};

struct FitReport {
    std::vector<double> objective_trace; ///< weighted integral per iteration
    std::vector<double> solve_times_ms;
    std::vector<double> cert_recon_residuals;
    std::string termination; ///< threshold | max-iterations | infeasible-step | error
    std::string message;
    bool ok = false;
    /// Final iterate's certified Bellman polynomial over (x, scaled u):
    /// -V(x) + l(x,u) + gamma * sum_k theta_k V_k(f(x,u)); nonnegative on the
    /// input-constraint set up to solver tolerance.
    poly::Polynomial bellman_certificate;
};

struct FamilyMember {
    QuadraticValue value;
    double weight_scale = 1.0;
    Eigen::VectorXd sigma_diag;
    double objective = 0.0;
    FitReport report;
};

struct ValueFunctionFamily {
    int n_states = 0;
    int n_inputs = 0;
    double dt = 0.02;
    double discount = 0.98;
    Eigen::VectorXd hover_input;
    Eigen::VectorXd input_scale;
    std::vector<FamilyMember> members;

    std::vector<QuadraticValue> values() const;
};

/// Value-function synthesis on one model: the initial Bellman-inequality fit
/// and the iterated point-wise-maximum tightening, both compiled through the
/// S-procedure into one cone program per step.
class BellmanFitter {
public:
    BellmanFitter(FittingModel model, FitOptions options);

    const FittingModel& fitting_model() const { return model_; }
    const FitOptions& options() const { return options_; }

    struct StepResult {
        bool ok = false;
        QuadraticValue value;
        double objective = 0.0;
        double cert_recon_residual = 0.0;
        double solve_ms = 0.0;
        poly::Polynomial certificate; ///< instantiated certified polynomial
        std::string message;
    };

    /// Initial fit: maximize the weighted integral of V subject to
    /// V <= T V through the S-procedure over the input constraints.
    StepResult fit_initial(const poly::GaussianMeasure& weight) const;

    /// One tightening step against the point-wise max of the previous
    /// iterates, with convex-combination multipliers theta_k (SOS, summing to
    /// one identically).
    StepResult pwm_iterate(const std::vector<QuadraticValue>& prev,
                           const poly::GaussianMeasure& weight) const;

    /// Runs fit_initial then pwm_iterate until the relative objective
    /// improvement drops below the threshold or the iteration cap is hit.
    std::pair<QuadraticValue, FitReport> fit_for_weight(const poly::GaussianMeasure& weight) const;

    /// One fit per family weighting; entries are independent and run on up to
    /// options.jobs threads. Failed entries carry ok = false in their report.
    ValueFunctionFamily fit_family(const WeightFamily& weights) const;

private:
    FittingModel model_;
    FitOptions options_;

    // model transformed to hover-centered, scale-normalized inputs
    std::vector<poly::Polynomial> dyn_scaled_;
    std::vector<poly::Polynomial> constraints_scaled_;
    poly::Polynomial stage_cost_scaled_;
    std::vector<poly::Polynomial> value_basis_of_f_; // m(f(x,u)) per V-basis monomial
    std::vector<poly::Exponent> value_basis_;        // x-monomials up to degree 2

    StepResult run_step(const std::vector<QuadraticValue>& prev,
                        const poly::GaussianMeasure& weight) const;
    QuadraticValue coeffs_to_value(const Eigen::VectorXd& coeffs, int first_var) const;
    poly::Polynomial compose_value_with_dynamics(const QuadraticValue& v) const;
};

} // namespace qcadp::adp
