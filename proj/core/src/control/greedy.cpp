#include "qcadp/control/policies.hpp"

#include "qcadp/conic/lowering.hpp"
#include "qcadp/model/reduced_dynamics.hpp"

#include <chrono>
#include <cmath>

namespace qcadp::control {

std::string to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::NlGpAdp: return "NL-GP-ADP";
        case PolicyKind::LtiMpcLqr: return "LTI-MPC-LQR";
        case PolicyKind::LtvMpcLqr: return "LTV-MPC-LQR";
        case PolicyKind::LtvMpcAdp: return "LTV-MPC-ADP";
    }
    return "?";
}

// A numerical-limit result whose verified residuals are tight is still a
// perfectly usable control solution; only genuinely bad solves are rejected.
bool solution_usable(const conic::ConicSolution& sol) {
    if (sol.status == conic::SolveStatus::Optimal) return true;
    return sol.status == conic::SolveStatus::NumericalLimit && sol.res_primal <= 1e-6 &&
           sol.res_dual <= 1e-6 && sol.gap_rel <= 1e-6;
}

conic::SolverSettings PolicyConfig::policy_solver_settings() {
    conic::SolverSettings s;
    s.feastol = 1e-8;
    s.reltol = 1e-9;
    s.abstol = 1e-11;
    s.max_iters = 100;
    s.refine_steps = 4;
    return s;
}

PolicyKind policy_kind_from(const std::string& name) {
    if (name == "NL-GP-ADP") return PolicyKind::NlGpAdp;
    if (name == "LTI-MPC-LQR") return PolicyKind::LtiMpcLqr;
    if (name == "LTV-MPC-LQR") return PolicyKind::LtvMpcLqr;
    if (name == "LTV-MPC-ADP") return PolicyKind::LtvMpcAdp;
    throw std::invalid_argument("unknown policy kind: " + name);
}

model::InputRef clip_to_constraints(const model::InputRef& u, const model::QuadcopterParams& p,
                                    const model::InputConstraintSet& set) {
    model::InputRef out = u;
    const double a1 = set.ellipse.a1, a2 = set.ellipse.a2;
    const double radial =
        std::sqrt(u.roll * u.roll / (a1 * a1) + u.pitch * u.pitch / (a2 * a2));
    if (radial > 1.0) {
        out.roll /= radial;
        out.pitch /= radial;
    }
    out.thrust = std::min(std::max(u.thrust, p.thrust_min), p.thrust_max);
    return out;
}

GreedyPolicy::GreedyPolicy(const model::QuadcopterParams& params, adp::ValueFunctionFamily family,
                           const PolicyConfig& cfg)
    : params_(params), family_(std::move(family)), cfg_(cfg) {
    values_ = family_.values();
    dyn_ = model::discretize_euler(model::taylor_dynamics(params_), cfg_.dt);
    constraints_ = model::constraint_polys(params_, model::full_layout());
}

model::InputRef GreedyPolicy::to_input(const Eigen::VectorXd& u_scaled) const {
    model::InputRef u;
    u.roll = family_.hover_input[0] + family_.input_scale[0] * u_scaled[0];
    u.pitch = family_.hover_input[1] + family_.input_scale[1] * u_scaled[1];
    u.yaw = family_.hover_input[2] + family_.input_scale[2] * u_scaled[2];
    u.thrust = family_.hover_input[3] + family_.input_scale[3] * u_scaled[3];
    return u;
}

double GreedyPolicy::objective_of(const Eigen::Matrix<double, 6, 1>& x,
                                  const Eigen::VectorXd& u_scaled) const {
    const model::InputRef u = to_input(u_scaled);
    Eigen::VectorXd u_raw = u.vec();
    Eigen::VectorXd x_next = model::eval_dynamics(dyn_, x, u_raw);
    const auto pwm = adp::pwm_value(values_, x_next);
    double stage = 0.0;
    for (int i = 0; i < 6; ++i) stage += cfg_.cost.q_diag[i] * x[i] * x[i];
    for (int j = 0; j < 4; ++j) {
        const double du = u_raw[j] - family_.hover_input[j];
        stage += cfg_.cost.r_diag[j] * du * du;
    }
    return stage + cfg_.cost.discount * pwm.value;
}

// One pass of successive convexification from the given scaled seed.
Eigen::VectorXd GreedyPolicy::scp_from(const Eigen::Matrix<double, 6, 1>& x, Eigen::VectorXd u,
                                       int max_iters, int& iters, bool& ok) const {
    using conic::LinExpr;
    const double gamma = cfg_.cost.discount;
    ok = false;
    iters = 0;
    for (int it = 0; it < max_iters; ++it) {
        ++iters;
        const model::InputRef u_ref = to_input(u);
        Eigen::VectorXd u_raw = u_ref.vec();
        auto lin = model::linearize(dyn_, x, u_raw);
        // successor as an affine map of the scaled input step d = u~ - u
        const Eigen::VectorXd f0 = model::eval_dynamics(dyn_, x, u_raw);
        Eigen::MatrixXd Bs = lin.B * family_.input_scale.asDiagonal();

        conic::ProblemBuilder bld;
        const int du = bld.add_vars(4); // scaled input (absolute, hover-centered)
        const int t_stage = bld.add_vars(1);
        const int t_term = bld.add_vars(1);
        bld.add_objective(t_stage, 1.0);
        bld.add_objective(t_term, gamma);

        // stage input cost: sum_j r_j s_j^2 u~_j^2 <= t_stage
        Eigen::MatrixXd Rs = Eigen::MatrixXd::Zero(4, 4);
        for (int j = 0; j < 4; ++j) {
            Rs(j, j) = cfg_.cost.r_diag[j] * family_.input_scale[j] * family_.input_scale[j];
        }
        conic::add_quad_le(bld, Rs, Eigen::VectorXd::Zero(4), 0.0, {du, du + 1, du + 2, du + 3},
                           LinExpr::var(t_stage));

        // terminal epigraph over the family at the linearized successor
        for (const auto& v : values_) {
            // x_next = f0 + Bs (u~ - u)
            const Eigen::VectorXd base = f0 - Bs * u;
            Eigen::MatrixXd P = Bs.transpose() * v.P * Bs;
            Eigen::VectorXd q =
                Bs.transpose() * ((v.P + v.P.transpose()) * base + v.q);
            const double r = base.dot(v.P * base) + v.q.dot(base) + v.r;
            conic::add_quad_le(bld, P, q, r, {du, du + 1, du + 2, du + 3},
                               LinExpr::var(t_term));
        }

        // input constraints: tilt ellipse and thrust interval
        bld.add_soc({LinExpr(1.0),
                     LinExpr::var(du + 0, family_.input_scale[0] / constraints_.ellipse.a1),
                     LinExpr::var(du + 1, family_.input_scale[1] / constraints_.ellipse.a2)});
        const double s_f = family_.input_scale[3], h_f = family_.hover_input[3];
        bld.add_nonneg(LinExpr::var(du + 3, s_f) += LinExpr(h_f - params_.thrust_min));
        bld.add_nonneg(LinExpr::var(du + 3, -s_f) += LinExpr(params_.thrust_max - h_f));

        // trust region around the current iterate
        if (std::isfinite(cfg_.greedy.trust_radius)) {
            std::vector<LinExpr> ball{LinExpr(cfg_.greedy.trust_radius)};
            for (int j = 0; j < 4; ++j) ball.push_back(LinExpr::var(du + j) += LinExpr(-u[j]));
            bld.add_soc(ball);
        }

        auto sol = conic::solve(bld.build(), cfg_.solver);
        if (!solution_usable(sol)) return u;
        Eigen::VectorXd next = sol.x.segment(du, 4);
        const double step_norm = (next - u).norm();
        u = next;
        if (step_norm < cfg_.greedy.step_tol) break;
    }
    ok = true;
    return u;
}

GreedyPolicy::Detail GreedyPolicy::solve_detail(const Eigen::Matrix<double, 6, 1>& x) const {
    Detail best;
    std::vector<Eigen::VectorXd> seeds;
    seeds.push_back(Eigen::VectorXd::Zero(4));
    if (cfg_.greedy.multistart) {
        auto seed = [&](int j, double v) {
            Eigen::VectorXd s = Eigen::VectorXd::Zero(4);
            s[j] = v;
            seeds.push_back(s);
        };
        seed(1, 0.4);  // pitch forward
        seed(1, -0.4); // pitch back
        seed(0, 0.4);  // roll
        seed(3, 0.4);  // climb thrust
    }
    bool any = false;
    for (const auto& s : seeds) {
        int iters = 0;
        bool ok = false;
        Eigen::VectorXd u = scp_from(x, s, cfg_.greedy.max_scp_iters, iters, ok);
        if (!ok) continue;
        const double obj = objective_of(x, u);
        if (!any || obj < best.objective) {
            best.u_scaled = u;
            best.objective = obj;
            best.scp_iters = iters;
            best.converged = true;
            any = true;
        }
    }
    if (!any) {
        best.u_scaled = Eigen::VectorXd::Zero(4);
        best.objective = objective_of(x, best.u_scaled);
        best.flagged = true;
    }
    return best;
}

model::InputRef GreedyPolicy::step(const Eigen::Matrix<double, 6, 1>& x_err, SolveStats& stats) {
    const auto t0 = std::chrono::steady_clock::now();
    Detail d = solve_detail(x_err);
    stats.solve_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    stats.iterations = d.scp_iters;
    stats.ok = !d.flagged;
    return clip_to_constraints(to_input(d.u_scaled), params_, constraints_);
}

} // namespace qcadp::control
