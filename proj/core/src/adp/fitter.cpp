#include "qcadp/adp/fitter.hpp"

#include "qcadp/poly/monomial_basis.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcadp::adp {

conic::SolverSettings FitOptions::fit_solver_settings() {
    conic::SolverSettings s;
    s.feastol = 1e-8;
    s.reltol = 1e-9;
    s.abstol = 1e-11;
    s.max_iters = 200;
    s.refine_steps = 4;
    return s;
}

FittingModel make_full_fitting_model(const model::QuadcopterParams& params,
                                     const StageCost& cost, double dt) {
    FittingModel m;
    m.layout = model::full_layout();
    m.dynamics = model::discretize_euler(model::taylor_dynamics(params), dt);
    m.constraints = model::constraint_polys(params, m.layout).all();
    m.cost = cost;
    m.hover_input = Eigen::VectorXd::Zero(4);
    m.hover_input[3] = params.hover_thrust();
    m.input_scale = Eigen::VectorXd::Ones(4);
    m.input_scale[3] = params.hover_thrust();
    m.dt = dt;
    return m;
}

FittingModel make_planar_fitting_model(const model::QuadcopterParams& params,
                                       const StageCost& cost, double dt) {
    FittingModel m;
    m.layout = model::planar_layout();
    m.dynamics = model::discretize_euler(model::planar_taylor_dynamics(params), dt);
    m.constraints = model::constraint_polys(params, m.layout).all();
    m.cost = cost;
    m.hover_input = Eigen::VectorXd::Zero(2);
    m.hover_input[1] = params.hover_thrust();
    m.input_scale = Eigen::VectorXd::Ones(2);
    m.input_scale[1] = params.hover_thrust();
    m.dt = dt;
    return m;
}

std::vector<QuadraticValue> ValueFunctionFamily::values() const {
    std::vector<QuadraticValue> v;
    v.reserve(members.size());
    for (const auto& m : members) v.push_back(m.value);
    return v;
}

BellmanFitter::BellmanFitter(FittingModel model, FitOptions options)
    : model_(std::move(model)), options_(std::move(options)) {
    const int nx = model_.layout.n_states;
    const int nu = model_.layout.n_inputs;
    const std::size_t n = static_cast<std::size_t>(nx + nu);
    if (model_.dynamics.size() != static_cast<std::size_t>(nx)) {
        throw std::invalid_argument("fitter: dynamics row count != state count");
    }

    // Hover-centered, scale-normalized inputs: u = hover + S * u~.
    std::vector<poly::Polynomial> subs;
    for (int i = 0; i < nx; ++i) subs.push_back(poly::Polynomial::variable(n, i));
    for (int j = 0; j < nu; ++j) {
        auto v = poly::Polynomial::variable(n, nx + j) * model_.input_scale[j];
        v += poly::Polynomial::constant(n, model_.hover_input[j]);
        subs.push_back(std::move(v));
    }
    for (const auto& f : model_.dynamics) dyn_scaled_.push_back(f.compose(subs));
    for (const auto& g : model_.constraints) {
        poly::Polynomial gs = g.compose(subs);
        double max_coeff = 0.0;
        for (const auto& [e, c] : gs.terms()) max_coeff = std::max(max_coeff, std::abs(c));
        if (max_coeff > 0) gs = gs * (1.0 / max_coeff);
        constraints_scaled_.push_back(std::move(gs));
    }
    if (model_.state_ball_radius > 0 && std::isfinite(model_.state_ball_radius)) {
        const double r2 = model_.state_ball_radius * model_.state_ball_radius;
        poly::Polynomial ball(n);
        ball.add_term(poly::Exponent(n), 1.0);
        for (int i = 0; i < nx; ++i) {
            poly::Exponent e(n);
            e[i] = 2;
            ball.add_term(e, -1.0 / r2);
        }
        constraints_scaled_.push_back(std::move(ball));
    }

    stage_cost_scaled_ = poly::Polynomial(n);
    for (int i = 0; i < nx; ++i) {
        poly::Exponent e(n);
        e[i] = 2;
        stage_cost_scaled_.add_term(e, model_.cost.q_diag[i]);
    }
    for (int j = 0; j < nu; ++j) {
        poly::Exponent e(n);
        e[nx + j] = 2;
        const double s = model_.input_scale[j];
        stage_cost_scaled_.add_term(e, model_.cost.r_diag[j] * s * s);
    }

    // x-monomials up to degree 2, embedded in the (x, u) arity, and their
    // compositions with the dynamics (reused by every iterate).
    const auto x_basis = poly::basis_up_to_degree(nx, 2);
    for (const auto& e : x_basis.entries()) {
        poly::Exponent emb(n);
        for (int i = 0; i < nx; ++i) emb[i] = e[i];
        value_basis_.push_back(emb);
    }
    value_basis_of_f_.reserve(value_basis_.size());
    for (const auto& m : value_basis_) {
        poly::Polynomial comp = poly::Polynomial::constant(n, 1.0);
        for (int i = 0; i < nx; ++i) {
            for (int k = 0; k < m[i]; ++k) comp = comp * dyn_scaled_[i];
        }
        value_basis_of_f_.push_back(std::move(comp));
    }
}

QuadraticValue BellmanFitter::coeffs_to_value(const Eigen::VectorXd& coeffs,
                                              int first_var) const {
    const int nx = model_.layout.n_states;
    QuadraticValue v;
    v.P = Eigen::MatrixXd::Zero(nx, nx);
    v.q = Eigen::VectorXd::Zero(nx);
    v.r = 0.0;
    for (std::size_t k = 0; k < value_basis_.size(); ++k) {
        const auto& m = value_basis_[k];
        const double c = coeffs[first_var + static_cast<int>(k)];
        if (m.degree() == 0) {
            v.r = c;
        } else if (m.degree() == 1) {
            for (int i = 0; i < nx; ++i) {
                if (m[i] == 1) v.q[i] = c;
            }
        } else {
            int i = -1, j = -1;
            for (int t = 0; t < nx; ++t) {
                if (m[t] == 2) i = j = t;
                if (m[t] == 1) (i < 0 ? i : j) = t;
            }
            if (i == j) {
                v.P(i, i) = c;
            } else {
                v.P(i, j) = c / 2.0;
                v.P(j, i) = c / 2.0;
            }
        }
    }
    return v;
}

poly::Polynomial BellmanFitter::compose_value_with_dynamics(const QuadraticValue& v) const {
    const int nx = model_.layout.n_states;
    const std::size_t n = static_cast<std::size_t>(model_.layout.arity());
    poly::Polynomial out(n);
    for (std::size_t k = 0; k < value_basis_.size(); ++k) {
        const auto& m = value_basis_[k];
        double c = 0.0;
        if (m.degree() == 0) {
            c = v.r;
        } else if (m.degree() == 1) {
            for (int i = 0; i < nx; ++i) {
                if (m[i] == 1) c = v.q[i];
            }
        } else {
            int i = -1, j = -1;
            for (int t = 0; t < nx; ++t) {
                if (m[t] == 2) i = j = t;
                if (m[t] == 1) (i < 0 ? i : j) = t;
            }
            c = (i == j) ? v.P(i, i) : 2.0 * v.P(i, j);
        }
        if (c != 0.0) out += value_basis_of_f_[k] * c;
    }
    return out;
}

BellmanFitter::StepResult BellmanFitter::run_step(const std::vector<QuadraticValue>& prev,
                                                  const poly::GaussianMeasure& weight) const {
    const int nx = model_.layout.n_states;
    const std::size_t n = static_cast<std::size_t>(model_.layout.arity());
    const double gamma = model_.cost.discount;

    sos::SosProgram prog(n);
    const int v0 = prog.add_coeff_vars(static_cast<int>(value_basis_.size()));

    sos::AffinePoly b(n);
    // -V(x)
    for (std::size_t k = 0; k < value_basis_.size(); ++k) {
        b.add_term(value_basis_[k], sos::LinearCoeff().add(v0 + static_cast<int>(k), -1.0));
    }
    // + l(x, u)
    b.add_poly(stage_cost_scaled_);

    if (prev.empty()) {
        // + gamma V(f(x, u)), V unknown
        for (std::size_t k = 0; k < value_basis_.size(); ++k) {
            b.add_poly_times_var(value_basis_of_f_[k], v0 + static_cast<int>(k), gamma);
        }
    } else {
        // + gamma sum_k theta_k(x,u) V_k(f(x,u)), theta_k SOS with sum == 1.
        // The convex combination lower-bounds the point-wise max, so the
        // certificate implies V_j <= T max_k V_k.
        const auto theta_basis = poly::basis_up_to_degree(n, options_.theta_degree / 2);
        sos::AffinePoly theta_sum(n);
        for (const auto& vk : prev) {
            auto h = prog.add_gram(theta_basis);
            sos::AffinePoly theta = prog.gram_poly(h);
            theta_sum.add_scaled(theta, 1.0);
            b.add_scaled(sos::multiply_affine(theta, compose_value_with_dynamics(vk)), gamma);
        }
        theta_sum.add_poly(poly::Polynomial::constant(n, 1.0), -1.0);
        prog.match_zero(theta_sum);
    }

    sos::SProcedureOptions sopt;
    sopt.mode = options_.multiplier_mode;
    sopt.multiplier_degree = options_.lambda_degree;
    sopt.prune_basis = options_.prune_basis;
    auto blk = sos::compile_sprocedure(prog, b, constraints_scaled_, sopt);

    sos::LinearCoeff obj;
    for (std::size_t k = 0; k < value_basis_.size(); ++k) {
        // x-part moment of the embedded monomial
        poly::Exponent ex(static_cast<std::size_t>(nx));
        for (int i = 0; i < nx; ++i) ex[i] = value_basis_[k][i];
        const double mom = poly::gaussian_moment(ex, weight);
        if (mom != 0.0) obj.add(v0 + static_cast<int>(k), mom);
    }
    prog.set_maximize(obj);

    auto res = prog.solve(options_.solver);

    StepResult out;
    out.solve_ms = res.raw.wall_ms;
    const bool accept_limit = res.status == conic::SolveStatus::NumericalLimit &&
                              res.raw.res_primal <= options_.accept_feas &&
                              res.raw.res_dual <= options_.accept_feas &&
                              res.raw.gap_rel <= options_.accept_relgap;
    if (res.status != conic::SolveStatus::Optimal && !accept_limit) {
        out.ok = false;
        out.message = "solver status " + conic::to_string(res.status) + ": " + res.raw.message;
        return out;
    }
    if (accept_limit) {
        out.message = "accepted numerical-limit solve (verified residuals within bounds)";
    }
    out.ok = true;
    out.value = coeffs_to_value(res.coeffs, v0);
    out.objective = res.objective;
    auto cert = sos::extract_certificate(prog, res, blk.main, blk.certificate_target);
    out.cert_recon_residual = cert.reconstruction_residual;
    out.certificate = b.instantiate(res.raw.x);
    return out;
}

BellmanFitter::StepResult BellmanFitter::fit_initial(const poly::GaussianMeasure& weight) const {
    return run_step({}, weight);
}

BellmanFitter::StepResult BellmanFitter::pwm_iterate(const std::vector<QuadraticValue>& prev,
                                                     const poly::GaussianMeasure& weight) const {
    if (prev.empty()) throw std::invalid_argument("pwm_iterate: needs at least one prior iterate");
    return run_step(prev, weight);
}

std::pair<QuadraticValue, FitReport> BellmanFitter::fit_for_weight(
    const poly::GaussianMeasure& weight) const {
    FitReport report;
    StepResult step = fit_initial(weight);
    if (!step.ok) {
        report.termination = "error";
        report.message = step.message;
        return {QuadraticValue{}, report};
    }
    report.objective_trace.push_back(step.objective);
    report.solve_times_ms.push_back(step.solve_ms);
    report.cert_recon_residuals.push_back(step.cert_recon_residual);
    if (!step.message.empty()) report.message = step.message;

    std::vector<QuadraticValue> iterates{step.value};
    poly::Polynomial last_cert = step.certificate;
    report.termination = "max-iterations";

    if (!std::isfinite(options_.improvement_threshold)) {
        report.termination = "threshold";
    } else {
        while (static_cast<int>(iterates.size()) < options_.max_iterations) {
            StepResult next = pwm_iterate(iterates, weight);
            report.solve_times_ms.push_back(next.solve_ms);
            if (!next.ok) {
                report.termination = "infeasible-step";
                report.message = next.message;
                break;
            }
            report.objective_trace.push_back(next.objective);
            report.cert_recon_residuals.push_back(next.cert_recon_residual);
            iterates.push_back(next.value);
            last_cert = next.certificate;
            const double prev_obj = report.objective_trace[report.objective_trace.size() - 2];
            const double improvement =
                (next.objective - prev_obj) / std::max(1.0, std::abs(prev_obj));
            if (improvement < options_.improvement_threshold) {
                report.termination = "threshold";
                break;
            }
        }
    }
    report.ok = true;
    report.bellman_certificate = last_cert;
    return {iterates.back(), report};
}

ValueFunctionFamily BellmanFitter::fit_family(const WeightFamily& weights) const {
    ValueFunctionFamily fam;
    fam.n_states = model_.layout.n_states;
    fam.n_inputs = model_.layout.n_inputs;
    fam.dt = model_.dt;
    fam.discount = model_.cost.discount;
    fam.hover_input = model_.hover_input;
    fam.input_scale = model_.input_scale;
    fam.members.resize(weights.scales.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= weights.scales.size()) return;
            FamilyMember& member = fam.members[i];
            member.weight_scale = weights.scales[i];
            member.sigma_diag = weights.covariance(i);
            std::vector<double> var(member.sigma_diag.data(),
                                    member.sigma_diag.data() + member.sigma_diag.size());
            poly::GaussianMeasure c(var);
            auto [value, report] = fit_for_weight(c);
            member.value = value;
            member.report = std::move(report);
            member.objective = member.report.objective_trace.empty()
                                   ? 0.0
                                   : member.report.objective_trace.back();
        }
    };
    const int jobs = std::max(1, options_.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return fam;
}

} // namespace qcadp::adp
