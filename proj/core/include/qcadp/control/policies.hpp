#pragma once

#include "qcadp/adp/fitter.hpp"
#include "qcadp/adp/types.hpp"
#include "qcadp/control/riccati.hpp"
#include "qcadp/model/constraints.hpp"
#include "qcadp/model/full_dynamics.hpp"
#include "qcadp/model/linearize.hpp"

#include <memory>
#include <optional>
#include <string>

namespace qcadp::control {

struct SolveStats {
    double solve_ms = 0.0;
    int iterations = 0;
    bool ok = true;
};

/// Outer-loop policy: maps the reduced state (relative to the setpoint) to an
/// attitude/thrust command at 50 Hz. Implementations may keep per-step state
/// (trajectory guess, integrators); one instance drives one loop.
class OuterPolicy {
public:
    virtual ~OuterPolicy() = default;
    virtual model::InputRef step(const Eigen::Matrix<double, 6, 1>& x_err, SolveStats& stats) = 0;
    virtual void reset() {}
    virtual std::string name() const = 0;
};

enum class PolicyKind { NlGpAdp, LtiMpcLqr, LtvMpcLqr, LtvMpcAdp };

std::string to_string(PolicyKind k);
PolicyKind policy_kind_from(const std::string& name);

/// True for optimal solves and for numerical-limit solves whose independently
/// recomputed residuals are within tight bounds.
bool solution_usable(const conic::ConicSolution& sol);

struct GreedyOptions {
    int max_scp_iters = 30;
    double step_tol = 1e-6;     ///< stop when the input step norm falls below
    double trust_radius = 0.2;  ///< in scaled input units; infinity disables
    bool multistart = true;     ///< hover seed plus four fixed perturbations
};

struct PolicyConfig {
    PolicyKind kind = PolicyKind::LtiMpcLqr;
    int horizon = 1; ///< ignored by the pure greedy policy
    adp::StageCost cost = adp::StageCost::defaults_full();
    double dt = 0.02;
    GreedyOptions greedy;
    bool discounted_riccati = false; ///< discounted DARE variant for the terminal P
    conic::SolverSettings solver = policy_solver_settings();

    static conic::SolverSettings policy_solver_settings();
};

/// Greedy minimization of l(x,u) + gamma * max_i V_i(f(x,u)) over the input
/// constraint set, by successive convexification with a trust region and
/// deterministic multi-start.
class GreedyPolicy : public OuterPolicy {
public:
    GreedyPolicy(const model::QuadcopterParams& params, adp::ValueFunctionFamily family,
                 const PolicyConfig& cfg);

    model::InputRef step(const Eigen::Matrix<double, 6, 1>& x_err, SolveStats& stats) override;
    std::string name() const override { return "NL-GP-ADP"; }

    struct Detail {
        Eigen::VectorXd u_scaled; ///< hover-centered, scale-normalized input
        double objective = 0.0;   ///< l + gamma * pwm at the nonlinear prediction
        int scp_iters = 0;
        bool converged = false;
        bool flagged = false; ///< no start produced a solution; hover returned
    };
    Detail solve_detail(const Eigen::Matrix<double, 6, 1>& x) const;

    /// Exact objective of a candidate scaled input (nonlinear prediction).
    double objective_of(const Eigen::Matrix<double, 6, 1>& x,
                        const Eigen::VectorXd& u_scaled) const;

    model::InputRef to_input(const Eigen::VectorXd& u_scaled) const;

private:
    model::QuadcopterParams params_;
    adp::ValueFunctionFamily family_;
    std::vector<adp::QuadraticValue> values_;
    PolicyConfig cfg_;
    std::vector<poly::Polynomial> dyn_; // discretized, SI
    model::InputConstraintSet constraints_;

    Eigen::VectorXd scp_from(const Eigen::Matrix<double, 6, 1>& x, Eigen::VectorXd u0,
                             int max_iters, int& iters, bool& ok) const;
};

/// Receding-horizon policy of Eq-18/19 form: dynamics linearized at hover
/// (LTI) or along the predicted trajectory (LTV), discounted stage costs, and
/// either a Riccati terminal weight or the PWM family through one epigraph
/// variable. The trajectory guess is re-rolled from each measured state with
/// the shifted previous solution.
class MpcPolicy : public OuterPolicy {
public:
    MpcPolicy(const model::QuadcopterParams& params, const PolicyConfig& cfg,
              std::optional<adp::ValueFunctionFamily> family);

    model::InputRef step(const Eigen::Matrix<double, 6, 1>& x_err, SolveStats& stats) override;
    void reset() override;
    std::string name() const override { return to_string(cfg_.kind); }

    const Eigen::MatrixXd& terminal_P() const { return riccati_.P; }

    struct StepDetail {
        Eigen::VectorXd u0_scaled;
        double objective = 0.0;
        double terminal_epigraph = 0.0; ///< solved epigraph value (ADP terminals)
        Eigen::Matrix<double, 6, 1> x_end;
        bool ok = false;
    };
    const StepDetail& last_detail() const { return detail_; }

private:
    model::QuadcopterParams params_;
    PolicyConfig cfg_;
    std::optional<adp::ValueFunctionFamily> family_;
    std::vector<adp::QuadraticValue> values_;
    std::vector<poly::Polynomial> dyn_;
    model::InputConstraintSet constraints_;
    model::AffineDynamics hover_lin_;
    RiccatiSolution riccati_;
    Eigen::VectorXd hover_u_;
    Eigen::VectorXd input_scale_;
    std::vector<Eigen::Vector4d> guess_inputs_; // raw SI, length horizon
    model::InputRef last_input_;
    StepDetail detail_;
};

std::unique_ptr<OuterPolicy> make_policy(const model::QuadcopterParams& params,
                                         const PolicyConfig& cfg,
                                         const std::optional<adp::ValueFunctionFamily>& family);

/// Projects an input onto the constraint set (tilt ellipse and thrust bounds);
/// used to guarantee commands respect the margins up to 1e-6.
model::InputRef clip_to_constraints(const model::InputRef& u, const model::QuadcopterParams& p,
                                    const model::InputConstraintSet& set);

} // namespace qcadp::control
