#include "qcadp/conic/problem.hpp"

#include "qcadp/conic/kkt.hpp"
#include "qcadp/conic/scaling.hpp"

#include <chrono>
#include <cstdio>
#include <cmath>
#include <optional>

namespace qcadp::conic {

namespace detail {
std::optional<ConicSolution> try_dualized_solve(const ConicProblem& p,
                                                const SolverSettings& settings);
}

namespace {

using Eigen::VectorXd;
using detail::ConeLayout;
using detail::KktSolver;
using detail::NTScaling;

/// Row split of a problem into equality rows (zero cone) and proper cone rows.
struct SplitProblem {
    int n = 0;
    VectorXd c;
    Eigen::SparseMatrix<double> Aeq, G;
    VectorXd beq, h;
    ConeLayout layout;
    std::vector<int> row_is_eq;   // original row -> 1 if equality
    std::vector<int> row_local;   // original row -> local index in its group

    static SplitProblem from(const ConicProblem& p) {
        SplitProblem sp;
        sp.n = p.n_vars;
        sp.c = p.c;
        const int m = p.total_rows();
        sp.row_is_eq.assign(m, 0);
        sp.row_local.assign(m, -1);
        int row = 0, eq = 0, cone = 0;
        std::vector<ConeBlock> cone_blocks;
        for (const auto& blk : p.cones) {
            const bool is_eq = blk.kind == ConeBlock::Kind::Zero;
            for (int r = 0; r < blk.rows(); ++r, ++row) {
                sp.row_is_eq[row] = is_eq ? 1 : 0;
                sp.row_local[row] = is_eq ? eq++ : cone++;
            }
            if (!is_eq) cone_blocks.push_back(blk);
        }
        sp.layout = ConeLayout::from_blocks(cone_blocks);
        sp.beq.resize(eq);
        sp.h.resize(cone);
        row = 0;
        for (int r = 0; r < m; ++r) {
            if (sp.row_is_eq[r]) {
                sp.beq[sp.row_local[r]] = p.b[r];
            } else {
                sp.h[sp.row_local[r]] = p.b[r];
            }
        }
        std::vector<Eigen::Triplet<double>> eq_t, cone_t;
        for (const auto& t : p.A) {
            if (sp.row_is_eq[t.row()]) {
                eq_t.emplace_back(sp.row_local[t.row()], t.col(), t.value());
            } else {
                cone_t.emplace_back(sp.row_local[t.row()], t.col(), t.value());
            }
        }
        sp.Aeq.resize(eq, sp.n);
        sp.Aeq.setFromTriplets(eq_t.begin(), eq_t.end());
        sp.G.resize(cone, sp.n);
        sp.G.setFromTriplets(cone_t.begin(), cone_t.end());
        return sp;
    }
};

/// Ruiz-style equilibration: iterative row/column rescaling toward unit
/// max-norms, with one uniform factor per SOC/PSD block so cones are
/// preserved, plus uniform cost/rhs normalization.
struct ScaleInfo {
    VectorXd col;     // d: x = d .* x_scaled / rhs_scale
    VectorXd row_eq;
    VectorXd row_cone;
    double cost_scale = 1.0; // c_scaled = cost_scale * (col .* c)
    double rhs_scale = 1.0;  // b_scaled = rhs_scale * (row .* b)
};

ScaleInfo equilibrate(SplitProblem& sp) {
    const int n = sp.n;
    const int meq = static_cast<int>(sp.Aeq.rows());
    const int pc = static_cast<int>(sp.G.rows());
    ScaleInfo sc;
    sc.col = VectorXd::Ones(n);
    sc.row_eq = VectorXd::Ones(meq);
    sc.row_cone = VectorXd::Ones(pc);

    auto update = [&](bool rows) {
        VectorXd col_max = VectorXd::Zero(n);
        VectorXd row_max_eq = VectorXd::Zero(meq);
        VectorXd row_max_cone = VectorXd::Zero(pc);
        for (int j = 0; j < n; ++j) {
            for (Eigen::SparseMatrix<double>::InnerIterator it(sp.Aeq, j); it; ++it) {
                const double a = std::abs(it.value());
                col_max[j] = std::max(col_max[j], a);
                row_max_eq[it.row()] = std::max(row_max_eq[it.row()], a);
            }
            for (Eigen::SparseMatrix<double>::InnerIterator it(sp.G, j); it; ++it) {
                const double a = std::abs(it.value());
                col_max[j] = std::max(col_max[j], a);
                row_max_cone[it.row()] = std::max(row_max_cone[it.row()], a);
            }
        }
        if (rows) {
            VectorXd e_eq(meq), e_cone(pc);
            for (int r = 0; r < meq; ++r) {
                e_eq[r] = row_max_eq[r] > 0 ? 1.0 / std::sqrt(row_max_eq[r]) : 1.0;
            }
            // one factor per cone block
            for (const auto& blk : sp.layout.blocks) {
                double blk_max = 0.0;
                for (int r = 0; r < blk.rows(); ++r) {
                    blk_max = std::max(blk_max, row_max_cone[blk.offset + r]);
                }
                const double f = blk_max > 0 ? 1.0 / std::sqrt(blk_max) : 1.0;
                for (int r = 0; r < blk.rows(); ++r) e_cone[blk.offset + r] = f;
            }
            sp.Aeq = e_eq.asDiagonal() * sp.Aeq;
            sp.G = e_cone.asDiagonal() * sp.G;
            sp.beq = sp.beq.cwiseProduct(e_eq);
            sp.h = sp.h.cwiseProduct(e_cone);
            sc.row_eq = sc.row_eq.cwiseProduct(e_eq);
            sc.row_cone = sc.row_cone.cwiseProduct(e_cone);
        } else {
            VectorXd dcol(n);
            for (int j = 0; j < n; ++j) {
                dcol[j] = col_max[j] > 0 ? 1.0 / std::sqrt(col_max[j]) : 1.0;
            }
            sp.Aeq = sp.Aeq * dcol.asDiagonal();
            sp.G = sp.G * dcol.asDiagonal();
            sp.c = sp.c.cwiseProduct(dcol);
            sc.col = sc.col.cwiseProduct(dcol);
        }
    };
    for (int round = 0; round < 3; ++round) {
        update(true);
        update(false);
    }

    // uniform cost and rhs normalization
    const double cn = sp.c.lpNorm<Eigen::Infinity>();
    sc.cost_scale = cn > 1.0 ? 1.0 / cn : 1.0;
    sp.c *= sc.cost_scale;
    const double bn = std::max(sp.beq.size() ? sp.beq.lpNorm<Eigen::Infinity>() : 0.0,
                               sp.h.size() ? sp.h.lpNorm<Eigen::Infinity>() : 0.0);
    sc.rhs_scale = bn > 1.0 ? 1.0 / bn : 1.0;
    sp.beq *= sc.rhs_scale;
    sp.h *= sc.rhs_scale;
    return sc;
}

ConicSolution make_solution(const SplitProblem& sp, SolveStatus status, const VectorXd& x,
                            const VectorXd& yeq, const VectorXd& z, const VectorXd& s,
                            const std::string& msg) {
    ConicSolution sol;
    sol.status = status;
    sol.x = x;
    const int m = static_cast<int>(sp.row_is_eq.size());
    sol.y = VectorXd::Zero(m);
    sol.s = VectorXd::Zero(m);
    for (int r = 0; r < m; ++r) {
        if (sp.row_is_eq[r]) {
            if (yeq.size()) sol.y[r] = yeq[sp.row_local[r]];
        } else {
            if (z.size()) sol.y[r] = z[sp.row_local[r]];
            if (s.size()) sol.s[r] = s[sp.row_local[r]];
        }
    }
    sol.message = msg;
    return sol;
}

} // namespace

ConicSolution solve(const ConicProblem& p, const SolverSettings& settings) {
    const auto t0 = std::chrono::steady_clock::now();
    p.validate();

    if (settings.allow_dualize) {
        if (auto dual_sol = detail::try_dualized_solve(p, settings)) {
            return *dual_sol;
        }
    }

    SplitProblem sp = SplitProblem::from(p);
    const ScaleInfo scale = equilibrate(sp);
    const int n = sp.n;
    const int meq = static_cast<int>(sp.Aeq.rows());
    const int pc = static_cast<int>(sp.G.rows());
    const int deg = sp.layout.barrier_degree;

    KktSolver kkt(sp.G, sp.Aeq);

    // Maps a solution of the equilibrated problem back to the original data
    // and recomputes the reported objectives and residuals there.
    auto unscale = [&](ConicSolution sol) {
        sol.x = sol.x.cwiseProduct(scale.col) / scale.rhs_scale;
        const int m = static_cast<int>(sp.row_is_eq.size());
        for (int r = 0; r < m; ++r) {
            const double e = sp.row_is_eq[r] ? scale.row_eq[sp.row_local[r]]
                                             : scale.row_cone[sp.row_local[r]];
            sol.y[r] *= e / scale.cost_scale;
            sol.s[r] /= e * scale.rhs_scale;
        }
        if (sol.status == SolveStatus::Optimal || sol.status == SolveStatus::NumericalLimit) {
            Eigen::SparseMatrix<double> A(m, p.n_vars);
            A.setFromTriplets(p.A.begin(), p.A.end());
            sol.obj_primal = p.c.dot(sol.x);
            sol.obj_dual = -p.b.dot(sol.y);
            sol.res_primal =
                VectorXd(A * sol.x + sol.s - p.b).norm() / (1.0 + p.b.norm());
            sol.res_dual =
                VectorXd(A.transpose() * sol.y + p.c).norm() / (1.0 + p.c.norm());
            sol.gap_abs = std::abs(sol.obj_primal - sol.obj_dual);
            sol.gap_rel = sol.gap_abs / std::max({1.0, std::abs(sol.obj_primal),
                                                  std::abs(sol.obj_dual)});
        }
        return sol;
    };

    auto finish = [&](ConicSolution sol, int iters) {
        sol.iterations = iters;
        sol.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return sol;
    };

    // Initialization: least-norm primal/dual points nudged into the cone.
    NTScaling Wid = NTScaling::identity(sp.layout);
    if (!kkt.factor(Wid)) {
        return finish(unscale(make_solution(sp, SolveStatus::NumericalLimit, VectorXd::Zero(n),
                                            VectorXd::Zero(meq), VectorXd::Zero(pc),
                                            VectorXd::Zero(pc),
                                            "initial KKT factorization failed")),
                      0);
    }
    auto init_p = kkt.solve(VectorXd::Zero(n), sp.beq, sp.h, settings.refine_steps);
    VectorXd x = init_p.x;
    VectorXd s = pc > 0 ? VectorXd(sp.h - sp.G * x) : VectorXd(0);
    if (pc > 0) {
        const double t = -detail::min_eig(sp.layout, s);
        if (t >= -1e-8 * std::max(1.0, s.norm())) detail::add_identity(sp.layout, s, 1.0 + t);
    }
    auto init_d = kkt.solve(-sp.c, VectorXd::Zero(meq), VectorXd::Zero(pc), settings.refine_steps);
    VectorXd y = init_d.y.size() ? init_d.y : VectorXd::Zero(meq);
    VectorXd z = init_d.z.size() ? init_d.z : VectorXd(0);
    if (pc > 0) {
        const double t = -detail::min_eig(sp.layout, z);
        if (t >= -1e-8 * std::max(1.0, z.norm())) detail::add_identity(sp.layout, z, 1.0 + t);
    }
    double tau = 1.0, kappa = 1.0;

    // Original-data norms; convergence is measured on unscaled residuals,
    // recovered from the scaled ones through elementwise identities.
    const double norm_b = 1.0 + [&] {
        double s = 0;
        for (int r = 0; r < (int)sp.row_is_eq.size(); ++r) {
            if (sp.row_is_eq[r]) s += p.b[r] * p.b[r];
        }
        return std::sqrt(s);
    }();
    const double norm_h = 1.0 + [&] {
        double s = 0;
        for (int r = 0; r < (int)sp.row_is_eq.size(); ++r) {
            if (!sp.row_is_eq[r]) s += p.b[r] * p.b[r];
        }
        return std::sqrt(s);
    }();
    const double norm_c = 1.0 + p.c.norm();

    double best_quality = std::numeric_limits<double>::infinity();
    ConicSolution best;
    std::string stall_msg = "iteration limit reached";

    int iter = 0;
    for (; iter < settings.max_iters; ++iter) {
        // Residuals of the homogeneous embedding.
        VectorXd rx = sp.c * tau;
        if (meq > 0) rx += sp.Aeq.transpose() * y;
        if (pc > 0) rx += sp.G.transpose() * z;
        VectorXd ry = meq > 0 ? VectorXd(sp.Aeq * x - sp.beq * tau) : VectorXd(0);
        VectorXd rz = pc > 0 ? VectorXd(sp.G * x + s - sp.h * tau) : VectorXd(0);
        const double cx = sp.c.dot(x);
        const double by = meq > 0 ? sp.beq.dot(y) : 0.0;
        const double hz = pc > 0 ? sp.h.dot(z) : 0.0;
        const double rtau = kappa + cx + by + hz;

        const double gap = pc > 0 ? s.dot(z) : 0.0;
        const double mu = (gap + tau * kappa) / (deg + 1);

        // Unscaled residual norms: rx_orig = D^{-1} rx / cost_scale,
        // ry_orig = E_eq^{-1} ry, rz_orig = E_c^{-1} rz, and every inner
        // product rescales by 1/cost_scale.
        const double inv_sc = 1.0 / scale.cost_scale;
        const double inv_sb = 1.0 / scale.rhs_scale;
        const double cx_o = cx * inv_sc * inv_sb;
        const double by_o = by * inv_sc * inv_sb;
        const double hz_o = hz * inv_sc * inv_sb;
        const double gap_o = gap * inv_sc * inv_sb;
        double ry_onorm = 0.0, rz_onorm = 0.0, rx_onorm = 0.0;
        for (int r = 0; r < meq; ++r) {
            const double v = ry[r] / scale.row_eq[r] * inv_sb;
            ry_onorm += v * v;
        }
        for (int r = 0; r < pc; ++r) {
            const double v = rz[r] / scale.row_cone[r] * inv_sb;
            rz_onorm += v * v;
        }
        for (int j = 0; j < n; ++j) {
            const double v = rx[j] / scale.col[j] * inv_sc;
            rx_onorm += v * v;
        }
        ry_onorm = std::sqrt(ry_onorm);
        rz_onorm = std::sqrt(rz_onorm);
        rx_onorm = std::sqrt(rx_onorm);

        const double pcost = cx_o / tau;
        const double dcost = -(by_o + hz_o) / tau;
        const double pres =
            std::max(meq ? ry_onorm / norm_b : 0.0, pc ? rz_onorm / norm_h : 0.0) / tau;
        const double dres = rx_onorm / norm_c / tau;
        const double absgap = gap_o / (tau * tau);
        const double relgap = absgap / std::max({1.0, std::abs(pcost), std::abs(dcost)});

        if (settings.verbose) {
            std::fprintf(stderr,
                         "iter %3d  pcost % .6e  pres %.2e  dres %.2e  relgap %.2e  "
                         "mu %.2e  tau %.2e  kappa %.2e\n",
                         iter, pcost, pres, dres, relgap, mu, tau, kappa);
        }

        // Track the best iterate for a numerical-limit report.
        const double quality = std::max({pres, dres, relgap});
        if (quality > 50.0 * best_quality && iter > 5) {
            stall_msg = "diverging iterates";
            break;
        }
        if (quality < best_quality) {
            best_quality = quality;
            best = make_solution(sp, SolveStatus::NumericalLimit, x / tau, y / tau, z / tau,
                                 s / tau, "");
            best.obj_primal = pcost;
            best.obj_dual = dcost;
            best.res_primal = pres;
            best.res_dual = dres;
            best.gap_rel = relgap;
            best.gap_abs = absgap;
        }

        if (pres <= settings.feastol && dres <= settings.feastol &&
            (absgap <= settings.abstol || relgap <= settings.reltol)) {
            ConicSolution sol = make_solution(sp, SolveStatus::Optimal, x / tau, y / tau,
                                              z / tau, s / tau, "converged");
            sol = unscale(sol);
            // Optimality is declared on the equilibrated system; downgrade if
            // the residuals on the original data are materially worse.
            if (sol.res_primal > 10 * settings.feastol || sol.res_dual > 10 * settings.feastol ||
                (sol.gap_rel > 10 * settings.reltol && sol.gap_abs > 10 * settings.abstol)) {
                sol.status = SolveStatus::NumericalLimit;
                sol.message = "converged on scaled data only";
            }
            return finish(sol, iter);
        }

        // Certificates of primal / dual infeasibility (original space).
        const double dual_gain = -(by_o + hz_o);
        if (dual_gain > 1e-12) {
            VectorXd atz = VectorXd::Zero(n);
            if (meq > 0) atz += sp.Aeq.transpose() * y;
            if (pc > 0) atz += sp.G.transpose() * z;
            for (int j = 0; j < n; ++j) atz[j] = atz[j] / scale.col[j] * inv_sc;
            if (atz.norm() / norm_c <= settings.feastol * dual_gain) {
                ConicSolution sol = make_solution(sp, SolveStatus::Infeasible, VectorXd::Zero(n),
                                                  y / dual_gain, z / dual_gain, VectorXd::Zero(pc),
                                                  "primal infeasibility certificate found");
                sol.x.setZero();
                return finish(unscale(sol), iter);
            }
        }
        if (cx_o < -1e-12) {
            double r1 = 0.0, r2 = 0.0;
            if (meq > 0) {
                VectorXd ax = sp.Aeq * x;
                for (int r = 0; r < meq; ++r) {
                    const double v = ax[r] / scale.row_eq[r];
                    r1 += v * v;
                }
                r1 = std::sqrt(r1) / norm_b;
            }
            if (pc > 0) {
                VectorXd gs = sp.G * x + s;
                for (int r = 0; r < pc; ++r) {
                    const double v = gs[r] / scale.row_cone[r];
                    r2 += v * v;
                }
                r2 = std::sqrt(r2) / norm_h;
            }
            if (std::max(r1, r2) <= settings.feastol * (-cx_o)) {
                ConicSolution sol = make_solution(sp, SolveStatus::Unbounded, x / (-cx),
                                                  VectorXd::Zero(meq), VectorXd::Zero(pc),
                                                  s / (-cx), "dual infeasibility certificate found");
                return finish(unscale(sol), iter);
            }
        }

        if (tau < 1e-12 || mu < 1e-16) {
            stall_msg = "tau or mu vanished without certificate";
            break;
        }

        NTScaling W = [&]() -> NTScaling {
            try {
                return NTScaling::compute(sp.layout, s, z);
            } catch (const std::exception&) {
                return NTScaling::identity(sp.layout);
            }
        }();
        if (!kkt.factor(W)) {
            stall_msg = "KKT factorization failed";
            break;
        }
        const VectorXd lambda = W.lambda();
        const VectorXd lambda_sq = W.lambda_sq();
        const VectorXd e = W.identity_e();

        // Common column for the tau elimination.
        auto v1 = kkt.solve(-sp.c, sp.beq, sp.h, settings.refine_steps);
        const double denom =
            sp.c.dot(v1.x) + (meq ? sp.beq.dot(v1.y) : 0.0) + (pc ? sp.h.dot(v1.z) : 0.0) -
            kappa / tau;

        struct Direction {
            VectorXd dx, dy, dz, ds;
            double dtau = 0, dkappa = 0;
        };
        auto solve_newton = [&](double res_scale, const VectorXd& bs_lambda,
                                double bkappa) -> Direction {
            Direction d;
            VectorXd bx = -res_scale * rx;
            VectorXd by_v = meq ? VectorXd(-res_scale * ry) : VectorXd(0);
            VectorXd bz = pc ? VectorXd(-res_scale * rz) : VectorXd(0);
            const double btau = -res_scale * rtau;
            VectorXd bs_prime = pc ? W.lambda_inv_circ(bs_lambda) : VectorXd(0);
            VectorXd rz_mod = pc ? VectorXd(bz - W.apply_WT(bs_prime)) : VectorXd(0);
            auto v0 = kkt.solve(bx, by_v, rz_mod, settings.refine_steps);
            const double num = btau - bkappa / tau -
                               (sp.c.dot(v0.x) + (meq ? sp.beq.dot(v0.y) : 0.0) +
                                (pc ? sp.h.dot(v0.z) : 0.0));
            d.dtau = num / denom;
            d.dx = v0.x + d.dtau * v1.x;
            d.dy = meq ? VectorXd(v0.y + d.dtau * v1.y) : VectorXd(0);
            d.dz = pc ? VectorXd(v0.z + d.dtau * v1.z) : VectorXd(0);
            d.ds = pc ? VectorXd(W.apply_WT(bs_prime - W.apply_W(d.dz))) : VectorXd(0);
            d.dkappa = (bkappa - kappa * d.dtau) / tau;
            return d;
        };

        auto max_alpha = [&](const Direction& d) {
            double a = std::numeric_limits<double>::infinity();
            if (pc > 0) {
                const VectorXd rho_z = W.apply_W(d.dz);
                const VectorXd rho_s = W.apply_WinvT(d.ds);
                a = W.max_step(rho_z, a);
                a = W.max_step(rho_s, a);
            }
            if (d.dtau < 0) a = std::min(a, -tau / d.dtau);
            if (d.dkappa < 0) a = std::min(a, -kappa / d.dkappa);
            return a;
        };

        // Predictor.
        Direction aff = solve_newton(1.0, pc ? VectorXd(-lambda_sq) : VectorXd(0), -tau * kappa);
        const double alpha_aff = std::min(1.0, max_alpha(aff));
        double gap_aff = (tau + alpha_aff * aff.dtau) * (kappa + alpha_aff * aff.dkappa);
        if (pc > 0) gap_aff += (s + alpha_aff * aff.ds).dot(z + alpha_aff * aff.dz);
        const double mu_aff = gap_aff / (deg + 1);
        double sigma = std::pow(std::max(0.0, mu_aff / mu), 3.0);
        sigma = std::min(1.0, std::max(0.0, sigma));

        // Corrector.
        VectorXd bs_comb(0);
        if (pc > 0) {
            const VectorXd rho_z = W.apply_W(aff.dz);
            const VectorXd rho_s = W.apply_WinvT(aff.ds);
            bs_comb = -lambda_sq - W.jordan_product(rho_s, rho_z);
            VectorXd se = e * (sigma * mu);
            bs_comb += se;
        }
        const double bk_comb = -tau * kappa - aff.dtau * aff.dkappa + sigma * mu;
        Direction dir = solve_newton(1.0 - sigma, bs_comb, bk_comb);

        double alpha = settings.step_frac * max_alpha(dir);
        alpha = std::min(1.0, alpha);
        if (!(alpha > 1e-13)) {
            stall_msg = "step size vanished";
            break;
        }

        x += alpha * dir.dx;
        if (meq) y += alpha * dir.dy;
        if (pc) {
            z += alpha * dir.dz;
            s += alpha * dir.ds;
        }
        tau += alpha * dir.dtau;
        kappa += alpha * dir.dkappa;
    }

    best.status = SolveStatus::NumericalLimit;
    best.message = stall_msg;
    return finish(unscale(best), iter);
}

ResidualReport verify(const ConicProblem& p, const ConicSolution& sol) {
    ResidualReport rep;
    const int m = p.total_rows();
    Eigen::SparseMatrix<double> A(m, p.n_vars);
    A.setFromTriplets(p.A.begin(), p.A.end());

    if (sol.status == SolveStatus::Optimal) {
        rep.has_cone_claims = true;
        VectorXd pr = A * sol.x + sol.s - p.b;
        rep.primal_inf = m > 0 ? pr.lpNorm<Eigen::Infinity>() : 0.0;
        VectorXd dr = A.transpose() * sol.y + p.c;
        rep.dual_inf = p.n_vars > 0 ? dr.lpNorm<Eigen::Infinity>() : 0.0;
        rep.comp_gap = std::abs(p.c.dot(sol.x) + p.b.dot(sol.y));

        // Cone membership margins for the non-equality blocks.
        std::vector<ConeBlock> cone_blocks;
        for (const auto& blk : p.cones) {
            if (blk.kind != ConeBlock::Kind::Zero) cone_blocks.push_back(blk);
        }
        auto layout = detail::ConeLayout::from_blocks(cone_blocks);
        VectorXd s_cone(layout.total), z_cone(layout.total);
        int row = 0, local = 0;
        for (const auto& blk : p.cones) {
            for (int r = 0; r < blk.rows(); ++r, ++row) {
                if (blk.kind != ConeBlock::Kind::Zero) {
                    s_cone[local] = sol.s[row];
                    z_cone[local] = sol.y[row];
                    ++local;
                }
            }
        }
        rep.cone_margins = detail::block_min_eigs(layout, s_cone);
        rep.dual_cone_margins = detail::block_min_eigs(layout, z_cone);
    }
    return rep;
}

} // namespace qcadp::conic
