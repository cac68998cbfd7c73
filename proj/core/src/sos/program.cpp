#include "qcadp/sos/program.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcadp::sos {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

int SosProgram::add_coeff_vars(int count) {
    const int first = builder_.add_vars(count);
    n_coeff_vars_ += count;
    return first;
}

void SosProgram::set_maximize(const LinearCoeff& obj) {
    objective_ = obj;
    has_objective_ = true;
}

GramHandle SosProgram::add_gram(const poly::MonomialBasis& basis) {
    GramInfo info;
    info.basis = basis;
    info.first_var = builder_.add_psd_slack(static_cast<int>(basis.size()));
    grams_.push_back(std::move(info));
    return GramHandle{static_cast<int>(grams_.size()) - 1};
}

AffinePoly SosProgram::gram_poly(GramHandle h) const {
    const auto& info = grams_[h.index];
    const auto& z = info.basis;
    AffinePoly p(arity_);
    int idx = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j, ++idx) {
            const poly::Exponent mono = z[i] + z[j];
            LinearCoeff lc;
            // diagonal entries enter once; svec off-diagonals carry sqrt(2)
            // and the monomial picks up both (i,j) and (j,i), i.e. sqrt(2)*g.
            lc.add(info.first_var + idx, i == j ? 1.0 : kSqrt2);
            p.add_term(mono, lc);
        }
    }
    return p;
}

void SosProgram::match_zero(const AffinePoly& residual) {
    for (const auto& [e, lc] : residual.terms()) {
        builder_.add_eq(to_linexpr(lc));
    }
}

GramHandle SosProgram::compile_sos(const AffinePoly& target, const poly::MonomialBasis& basis) {
    // Coverage check: every target monomial must appear among basis products.
    std::map<poly::Exponent, bool> covered;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            covered[basis[i] + basis[j]] = true;
        }
    }
    // A target monomial outside the basis products is representable only with
    // coefficient zero. When its coefficient involves decision variables the
    // matching row below enforces exactly that; a fixed nonzero coefficient
    // can never be matched, which is the loud coverage failure.
    std::vector<poly::Exponent> uncovered;
    for (const auto& [e, lc] : target.terms()) {
        if (!covered.count(e) && lc.terms.empty() && std::abs(lc.constant) > 1e-13) {
            uncovered.push_back(e);
        }
    }
    if (!uncovered.empty()) {
        std::ostringstream os;
        os << "sos: basis cannot represent " << uncovered.size() << " monomial(s):";
        for (std::size_t k = 0; k < uncovered.size() && k < 8; ++k) {
            os << " [";
            for (std::size_t i = 0; i < uncovered[k].arity(); ++i) {
                os << int(uncovered[k][i]) << (i + 1 < uncovered[k].arity() ? " " : "]");
            }
        }
        throw std::runtime_error(os.str());
    }

    GramHandle h = add_gram(basis);
    AffinePoly residual = gram_poly(h);
    residual.add_scaled(target, -1.0);
    match_zero(residual);
    return h;
}

void SosProgram::add_linear_eq(const LinearCoeff& expr) {
    builder_.add_eq(to_linexpr(expr));
}

conic::LinExpr SosProgram::to_linexpr(const LinearCoeff& c) const {
    conic::LinExpr e(c.constant);
    for (const auto& [var, coeff] : c.terms) e.add(var, coeff);
    return e;
}

SosProgram::Result SosProgram::solve(const conic::SolverSettings& settings) const {
    conic::ProblemBuilder bld = builder_;
    if (has_objective_) {
        conic::LinExpr e = to_linexpr(objective_);
        bld.add_objective(e * -1.0); // maximize
    }
    conic::ConicProblem p = bld.build();

    Result res;
    res.raw = conic::solve(p, settings);
    res.status = res.raw.status;
    if (res.raw.x.size() == p.n_vars) {
        res.coeffs = res.raw.x.head(n_coeff_vars_);
        for (const auto& info : grams_) {
            const int side = static_cast<int>(info.basis.size());
            Eigen::MatrixXd M(side, side);
            int idx = 0;
            for (int i = 0; i < side; ++i) {
                for (int j = 0; j <= i; ++j, ++idx) {
                    const double v = res.raw.x[info.first_var + idx];
                    if (i == j) {
                        M(i, i) = v;
                    } else {
                        M(i, j) = v / kSqrt2;
                        M(j, i) = v / kSqrt2;
                    }
                }
            }
            res.grams.push_back(std::move(M));
        }
        double obj = objective_.constant;
        for (const auto& [var, coeff] : objective_.terms) obj += coeff * res.raw.x[var];
        res.objective = obj;
    }
    return res;
}

Certificate extract_certificate(const SosProgram& prog, const SosProgram::Result& result,
                                GramHandle h, const AffinePoly& target) {
    Certificate cert;
    cert.gram = result.grams.at(h.index);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cert.gram, Eigen::EigenvaluesOnly);
    cert.min_eigenvalue = es.eigenvalues().minCoeff();

    // Reconstruct z'Mz and compare against the instantiated target.
    const auto& basis = prog.basis_of(h);
    poly::Polynomial recon(prog.poly_arity());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            recon.add_term(basis[i] + basis[j], cert.gram(i, j));
        }
    }
    poly::Polynomial want = target.instantiate(result.raw.x);
    poly::Polynomial diff = recon - want;
    double max_dev = 0.0;
    for (const auto& [e, c] : diff.terms()) max_dev = std::max(max_dev, std::abs(c));
    cert.reconstruction_residual = max_dev;
    return cert;
}

} // namespace qcadp::sos
