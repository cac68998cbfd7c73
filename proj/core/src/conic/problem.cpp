#include "qcadp/conic/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace qcadp::conic {

int ConicProblem::total_rows() const {
    int r = 0;
    for (const auto& blk : cones) r += blk.rows();
    return r;
}

void ConicProblem::validate() const {
    const int m = total_rows();
    if (c.size() != n_vars) throw std::invalid_argument("conic: objective size != n_vars");
    if (b.size() != m) throw std::invalid_argument("conic: offset size != cone rows");
    for (const auto& blk : cones) {
        if (blk.dim <= 0) throw std::invalid_argument("conic: nonpositive block size");
    }
    for (const auto& t : A) {
        if (t.row() < 0 || t.row() >= m || t.col() < 0 || t.col() >= n_vars) {
            throw std::invalid_argument("conic: constraint entry out of range");
        }
        if (!std::isfinite(t.value())) throw std::invalid_argument("conic: non-finite entry");
    }
    for (int i = 0; i < c.size(); ++i) {
        if (!std::isfinite(c[i])) throw std::invalid_argument("conic: non-finite objective");
    }
    for (int i = 0; i < b.size(); ++i) {
        if (!std::isfinite(b[i])) throw std::invalid_argument("conic: non-finite offset");
    }
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::NumericalLimit: return "numerical-limit";
    }
    return "unknown";
}

} // namespace qcadp::conic
