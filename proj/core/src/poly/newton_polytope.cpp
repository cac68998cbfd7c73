#include "qcadp/poly/newton_polytope.hpp"

#include <cmath>
#include <stdexcept>

namespace qcadp::poly {

// Phase-1 simplex on: find lambda >= 0 with sum(lambda) = 1 and
// P lambda = q. Feasible iff the artificial objective reaches ~0.
bool in_convex_hull(const std::vector<std::vector<double>>& points,
                    const std::vector<double>& query, double tol) {
    const std::size_t m = points.size();
    if (m == 0) return false;
    const std::size_t d = query.size();
    const std::size_t rows = d + 1;
    const std::size_t cols = m + rows; // lambda columns + artificial columns

    // Tableau: rows x (cols + 1 rhs), plus an objective row.
    std::vector<std::vector<double>> tab(rows + 1, std::vector<double>(cols + 1, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) tab[i][j] = points[j][i];
        tab[i][cols] = query[i];
    }
    for (std::size_t j = 0; j < m; ++j) tab[d][j] = 1.0;
    tab[d][cols] = 1.0;

    // Make rhs nonnegative, then add artificial basis.
    for (std::size_t i = 0; i < rows; ++i) {
        if (tab[i][cols] < 0) {
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] = -tab[i][j];
        }
        tab[i][m + i] = 1.0;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

    // Objective row: minimize sum of artificials. Reduced costs w.r.t. the
    // artificial basis: c - sum of constraint rows, with c = 1 on artificials.
    auto& obj = tab[rows];
    for (std::size_t i = 0; i < rows; ++i) obj[m + i] = 1.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j <= cols; ++j) obj[j] -= tab[i][j];
    }

    const std::size_t max_pivots = 50 * (rows + m);
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
        // Bland's rule: first column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (obj[j] < -1e-11) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] > 1e-11) {
                const double ratio = tab[i][cols] / tab[i][enter];
                if (leave == rows || ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == rows) break; // unbounded direction; cannot happen with bounded feasible set

        const double piv = tab[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double f = tab[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    return -obj[cols] <= tol; // objective value = -obj rhs after eliminations
}

} // namespace qcadp::poly
