#include "qcadp/control/policies.hpp"

#include "qcadp/conic/lowering.hpp"
#include "qcadp/model/reduced_dynamics.hpp"

#include <Eigen/Cholesky>

#include <chrono>
#include <cmath>

namespace qcadp::control {

MpcPolicy::MpcPolicy(const model::QuadcopterParams& params, const PolicyConfig& cfg,
                     std::optional<adp::ValueFunctionFamily> family)
    : params_(params), cfg_(cfg), family_(std::move(family)) {
    const bool adp_terminal = cfg_.kind == PolicyKind::LtvMpcAdp;
    if (adp_terminal && !family_) {
        throw std::invalid_argument("mpc: ADP terminal requires a fitted family");
    }
    dyn_ = model::discretize_euler(model::taylor_dynamics(params_), cfg_.dt);
    constraints_ = model::constraint_polys(params_, model::full_layout());

    hover_u_ = Eigen::VectorXd::Zero(4);
    hover_u_[3] = params_.hover_thrust();
    input_scale_ = Eigen::VectorXd::Ones(4);
    input_scale_[3] = params_.hover_thrust();
    if (family_) {
        hover_u_ = family_->hover_input;
        input_scale_ = family_->input_scale;
        values_ = family_->values();
    }

    hover_lin_ = model::linearize(dyn_, Eigen::VectorXd::Zero(6), hover_u_);
    Eigen::MatrixXd Q = cfg_.cost.q_diag.asDiagonal();
    Eigen::MatrixXd R = cfg_.cost.r_diag.asDiagonal();
    riccati_ = dare_solve(hover_lin_.A, hover_lin_.B, Q, R,
                          cfg_.discounted_riccati ? cfg_.cost.discount : 1.0);
    last_input_ = model::InputRef::hover(params_);
    reset();
}

void MpcPolicy::reset() {
    guess_inputs_.assign(static_cast<std::size_t>(std::max(1, cfg_.horizon)),
                         Eigen::Vector4d(hover_u_[0], hover_u_[1], hover_u_[2], hover_u_[3]));
    last_input_ = model::InputRef::hover(params_);
}

model::InputRef MpcPolicy::step(const Eigen::Matrix<double, 6, 1>& x_err, SolveStats& stats) {
    using conic::LinExpr;
    const auto t0 = std::chrono::steady_clock::now();
    const int N = std::max(1, cfg_.horizon);
    const int nu = 4;
    const double gamma = cfg_.cost.discount;
    const bool adp_terminal = cfg_.kind == PolicyKind::LtvMpcAdp;
    const bool lti = cfg_.kind == PolicyKind::LtiMpcLqr;

    // Trajectory guess: roll the polynomial model from the measured state
    // with the shifted previous inputs; linearize along it (or at hover).
    std::vector<Eigen::VectorXd> x_traj(N + 1);
    std::vector<model::AffineDynamics> lin(N);
    x_traj[0] = x_err;
    for (int k = 0; k < N; ++k) {
        const Eigen::VectorXd uk = guess_inputs_[k];
        x_traj[k + 1] = model::eval_dynamics(dyn_, x_traj[k], uk);
        lin[k] = lti ? hover_lin_ : model::linearize(dyn_, x_traj[k], uk);
    }

    // Condensed affine maps x_k = M_k u~ + m_k over the stacked scaled inputs.
    std::vector<Eigen::MatrixXd> M(N + 1);
    std::vector<Eigen::VectorXd> m(N + 1);
    M[0] = Eigen::MatrixXd::Zero(6, nu * N);
    m[0] = x_err;
    for (int k = 0; k < N; ++k) {
        const Eigen::MatrixXd Bs = lin[k].B * input_scale_.asDiagonal();
        M[k + 1] = lin[k].A * M[k];
        M[k + 1].block(0, nu * k, 6, nu) += Bs;
        m[k + 1] = lin[k].A * m[k] + lin[k].B * hover_u_ + lin[k].g;
    }

    conic::ProblemBuilder bld;
    const int u0 = bld.add_vars(nu * N);
    const int t_stage = bld.add_vars(1);
    bld.add_objective(t_stage, 1.0);
    int t_term = -1;
    if (adp_terminal) {
        t_term = bld.add_vars(1);
        bld.add_objective(t_term, 1.0);
    }

    // Discounted stage quadratic (plus the Riccati terminal when used) as one
    // second-order-cone epigraph: t_stage >= || F u~ + d ||^2.
    const int stage_rows = N * 10 + (adp_terminal ? 0 : 6);
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(stage_rows, nu * N);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(stage_rows);
    int row = 0;
    for (int k = 0; k < N; ++k) {
        const double w = std::pow(gamma, k);
        for (int i = 0; i < 6; ++i) {
            const double c = std::sqrt(w * cfg_.cost.q_diag[i]);
            F.row(row) = c * M[k].row(i);
            d[row] = c * m[k][i];
            ++row;
        }
        for (int j = 0; j < nu; ++j) {
            const double c = std::sqrt(w * cfg_.cost.r_diag[j]) * input_scale_[j];
            F(row, nu * k + j) = c;
            ++row;
        }
    }
    if (!adp_terminal) {
        const double w = std::pow(gamma, N);
        Eigen::LLT<Eigen::MatrixXd> llt(riccati_.P +
                                        1e-12 * Eigen::MatrixXd::Identity(6, 6));
        Eigen::MatrixXd L = llt.matrixU(); // P = L'L
        for (int i = 0; i < 6; ++i) {
            F.row(row) = std::sqrt(w) * L.row(i) * M[N];
            d[row] = std::sqrt(w) * L.row(i).dot(m[N]);
            ++row;
        }
    }
    {
        std::vector<LinExpr> soc;
        LinExpr top = LinExpr::var(t_stage);
        top += LinExpr(1.0);
        soc.push_back(top);
        LinExpr bottom = LinExpr::var(t_stage, -1.0);
        bottom += LinExpr(1.0);
        soc.push_back(bottom);
        for (int r = 0; r < row; ++r) {
            LinExpr e(2.0 * d[r]);
            for (int c = 0; c < nu * N; ++c) {
                if (F(r, c) != 0.0) e.add(u0 + c, 2.0 * F(r, c));
            }
            soc.push_back(e);
        }
        bld.add_soc(soc);
    }

    if (adp_terminal) {
        // t_term >= gamma^N V_i(x_N) for every family member
        const double w = std::pow(gamma, N);
        std::vector<int> vars(nu * N);
        for (int c = 0; c < nu * N; ++c) vars[c] = u0 + c;
        for (const auto& v : values_) {
            Eigen::MatrixXd P = w * M[N].transpose() * v.P * M[N];
            Eigen::VectorXd q =
                w * M[N].transpose() * ((v.P + v.P.transpose()) * m[N] + v.q);
            const double r = w * (m[N].dot(v.P * m[N]) + v.q.dot(m[N]) + v.r);
            conic::add_quad_le(bld, P, q, r, vars, LinExpr::var(t_term));
        }
    }

    // Per-step input constraints.
    for (int k = 0; k < N; ++k) {
        bld.add_soc({LinExpr(1.0),
                     LinExpr::var(u0 + nu * k + 0, input_scale_[0] / constraints_.ellipse.a1),
                     LinExpr::var(u0 + nu * k + 1, input_scale_[1] / constraints_.ellipse.a2)});
        const double s_f = input_scale_[3], h_f = hover_u_[3];
        bld.add_nonneg(LinExpr::var(u0 + nu * k + 3, s_f) += LinExpr(h_f - params_.thrust_min));
        bld.add_nonneg(LinExpr::var(u0 + nu * k + 3, -s_f) += LinExpr(params_.thrust_max - h_f));
    }

    auto sol = conic::solve(bld.build(), cfg_.solver);
    stats.iterations = sol.iterations;
    stats.ok = solution_usable(sol);

    detail_ = StepDetail{};
    model::InputRef out = last_input_;
    if (stats.ok) {
        std::vector<Eigen::Vector4d> u_raw(N);
        for (int k = 0; k < N; ++k) {
            for (int j = 0; j < nu; ++j) {
                u_raw[k][j] = hover_u_[j] + input_scale_[j] * sol.x[u0 + nu * k + j];
            }
        }
        out = model::InputRef{u_raw[0][0], u_raw[0][1], u_raw[0][2], u_raw[0][3]};
        // shifted guess, final input repeated
        for (int k = 0; k + 1 < N; ++k) guess_inputs_[k] = u_raw[k + 1];
        guess_inputs_[N - 1] = u_raw[N - 1];

        detail_.u0_scaled = sol.x.segment(u0, nu);
        detail_.objective = sol.obj_primal;
        detail_.terminal_epigraph = adp_terminal ? sol.x[t_term] : 0.0;
        detail_.x_end = M[N] * sol.x.segment(u0, nu * N) + m[N];
        detail_.ok = true;
    }
    out = clip_to_constraints(out, params_, constraints_);
    last_input_ = out;
    stats.solve_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::unique_ptr<OuterPolicy> make_policy(const model::QuadcopterParams& params,
                                         const PolicyConfig& cfg,
                                         const std::optional<adp::ValueFunctionFamily>& family) {
    if (cfg.kind == PolicyKind::NlGpAdp) {
        if (!family) throw std::invalid_argument("NL-GP-ADP requires a fitted family");
        return std::make_unique<GreedyPolicy>(params, *family, cfg);
    }
    return std::make_unique<MpcPolicy>(params, cfg, family);
}

} // namespace qcadp::control
