#include "qcadp/conic/builder.hpp"

#include <stdexcept>

namespace qcadp::conic {

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    constant += o.constant;
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

LinExpr LinExpr::operator*(double s) const {
    LinExpr e;
    e.constant = constant * s;
    e.terms.reserve(terms.size());
    for (const auto& [i, v] : terms) e.terms.emplace_back(i, v * s);
    return e;
}

int ProblemBuilder::add_vars(int count) {
    const int first = n_vars_;
    n_vars_ += count;
    return first;
}

void ProblemBuilder::add_objective(int var, double coeff) {
    obj_.emplace_back(var, coeff);
}

void ProblemBuilder::add_objective(const LinExpr& e) {
    obj_offset_ += e.constant;
    for (const auto& [i, v] : e.terms) obj_.emplace_back(i, v);
}

// Row semantics: A x + s = b with s picked from the enclosing cone block.
// For an expression e = terms + constant, s = e means A = -terms, b = constant.
void ProblemBuilder::push_row(const LinExpr& e) {
    for (const auto& [i, v] : e.terms) {
        if (i < 0 || i >= n_vars_) throw std::out_of_range("builder: variable out of range");
        A_.emplace_back(n_rows_, i, -v);
    }
    b_.push_back(e.constant);
    ++n_rows_;
}

void ProblemBuilder::add_eq(const LinExpr& e) {
    if (!cones_.empty() && cones_.back().kind == ConeBlock::Kind::Zero) {
        cones_.back().dim += 1;
    } else {
        cones_.push_back(ConeBlock{ConeBlock::Kind::Zero, 1});
    }
    push_row(e);
}

void ProblemBuilder::add_nonneg(const LinExpr& e) {
    if (!cones_.empty() && cones_.back().kind == ConeBlock::Kind::NonNeg) {
        cones_.back().dim += 1;
    } else {
        cones_.push_back(ConeBlock{ConeBlock::Kind::NonNeg, 1});
    }
    push_row(e);
}

void ProblemBuilder::add_soc(const std::vector<LinExpr>& exprs) {
    if (exprs.size() < 2) throw std::invalid_argument("builder: SOC needs at least 2 rows");
    cones_.push_back(ConeBlock{ConeBlock::Kind::Soc, static_cast<int>(exprs.size())});
    for (const auto& e : exprs) push_row(e);
}

int ProblemBuilder::add_psd_slack(int side) {
    const int q = side * (side + 1) / 2;
    const int first = add_vars(q);
    cones_.push_back(ConeBlock{ConeBlock::Kind::Psd, side});
    for (int k = 0; k < q; ++k) {
        A_.emplace_back(n_rows_, first + k, -1.0);
        b_.push_back(0.0);
        ++n_rows_;
    }
    return first;
}

ConicProblem ProblemBuilder::build() const {
    ConicProblem p;
    p.n_vars = n_vars_;
    p.c = Eigen::VectorXd::Zero(n_vars_);
    for (const auto& [i, v] : obj_) p.c[i] += v;
    p.A = A_;
    p.b = Eigen::Map<const Eigen::VectorXd>(b_.data(), static_cast<int>(b_.size()));
    p.cones = cones_;
    p.validate();
    return p;
}

} // namespace qcadp::conic
