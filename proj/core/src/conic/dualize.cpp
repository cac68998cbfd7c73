#include "qcadp/conic/problem.hpp"

#include <Eigen/SparseCore>

#include <cmath>
#include <optional>
#include <vector>

namespace qcadp::conic::detail {

// When every non-equality cone row reads  -x_j + s = b  with a dedicated
// column j (the layout SOS compilation emits: Gram entries as variables,
// slacked one-to-one into their PSD block), the problem is solved much faster
// through its dual: the dual has one variable per equality row and only the
// original free columns as equality constraints. This routine detects the
// pattern, builds the dual, solves it, and maps the solution back so callers
// never see the transformation.
std::optional<ConicSolution> try_dualized_solve(const ConicProblem& p,
                                                const SolverSettings& settings) {
    const int m = p.total_rows();
    const int n = p.n_vars;

    // Row classification.
    std::vector<int> row_kind(m, 0); // 0 = zero row, 1 = cone row
    {
        int row = 0;
        for (const auto& blk : p.cones) {
            for (int r = 0; r < blk.rows(); ++r, ++row) {
                row_kind[row] = blk.kind == ConeBlock::Kind::Zero ? 0 : 1;
            }
        }
    }
    int n_cone_rows = 0, n_eq_rows = 0;
    for (int r = 0; r < m; ++r) (row_kind[r] ? n_cone_rows : n_eq_rows)++;
    if (n_cone_rows == 0 || n_eq_rows == 0) return std::nullopt;

    // Each cone row must contain exactly one entry, -1, in a column used by
    // no other cone row.
    std::vector<int> cone_row_col(m, -1);
    std::vector<int> col_cone_row(n, -1);
    std::vector<int> cone_row_nnz(m, 0);
    for (const auto& t : p.A) {
        if (!row_kind[t.row()]) continue;
        if (++cone_row_nnz[t.row()] > 1) return std::nullopt;
        if (t.value() != -1.0) return std::nullopt;
        if (col_cone_row[t.col()] != -1) return std::nullopt;
        cone_row_col[t.row()] = t.col();
        col_cone_row[t.col()] = t.row();
    }
    for (int r = 0; r < m; ++r) {
        if (row_kind[r] && cone_row_col[r] == -1) return std::nullopt;
    }

    // Index maps.
    std::vector<int> eq_local(m, -1), cone_local(m, -1);
    {
        int eq = 0, cone = 0;
        for (int r = 0; r < m; ++r) {
            if (row_kind[r]) {
                cone_local[r] = cone++;
            } else {
                eq_local[r] = eq++;
            }
        }
    }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j) {
        if (col_cone_row[j] == -1) free_cols.push_back(j);
    }
    std::vector<int> free_local(n, -1);
    for (std::size_t k = 0; k < free_cols.size(); ++k) free_local[free_cols[k]] = int(k);
    const int nf = static_cast<int>(free_cols.size());

    // Dual problem over y (one variable per original equality row):
    //   minimize  (-beq - Aeq_s b_cone)' y
    //   s.t.      Aeq_f' y = c_f                 (zero rows)
    //             Aeq_s' y + s' = c_s, s' in K   (same cone blocks)
    ConicProblem d;
    d.n_vars = n_eq_rows;
    d.c = Eigen::VectorXd::Zero(n_eq_rows);
    Eigen::VectorXd b_cone(n_cone_rows), c_s(n_cone_rows);
    for (int r = 0; r < m; ++r) {
        if (row_kind[r]) {
            b_cone[cone_local[r]] = p.b[r];
            c_s[cone_local[r]] = p.c[cone_row_col[r]];
        } else {
            d.c[eq_local[r]] = -p.b[r];
        }
    }
    // -Aeq_s b_cone contribution to the dual objective.
    for (const auto& t : p.A) {
        if (row_kind[t.row()]) continue;
        const int slack_row = col_cone_row[t.col()];
        if (slack_row != -1) {
            d.c[eq_local[t.row()]] -= t.value() * b_cone[cone_local[slack_row]];
        }
    }
    // Rows: first the dual equality block (one row per free column), then the
    // original cone blocks.
    if (nf > 0) d.cones.push_back(ConeBlock{ConeBlock::Kind::Zero, nf});
    for (const auto& blk : p.cones) {
        if (blk.kind != ConeBlock::Kind::Zero) d.cones.push_back(blk);
    }
    d.b.resize(nf + n_cone_rows);
    for (int k = 0; k < nf; ++k) d.b[k] = p.c[free_cols[k]];
    for (int r = 0; r < n_cone_rows; ++r) d.b[nf + r] = c_s[r];
    for (const auto& t : p.A) {
        if (row_kind[t.row()]) continue; // only equality entries define the dual matrix
        const int y_idx = eq_local[t.row()];
        if (col_cone_row[t.col()] != -1) {
            const int cone_r = cone_local[col_cone_row[t.col()]];
            d.A.emplace_back(nf + cone_r, y_idx, t.value());
        } else {
            d.A.emplace_back(free_local[t.col()], y_idx, t.value());
        }
    }

    SolverSettings inner = settings;
    inner.allow_dualize = false;
    ConicSolution ds = solve(d, inner);

    ConicSolution sol;
    sol.iterations = ds.iterations;
    sol.wall_ms = ds.wall_ms;
    sol.message = "solved via dual: " + ds.message;
    if (ds.status == SolveStatus::Infeasible) {
        sol.status = SolveStatus::Unbounded;
        sol.x = Eigen::VectorXd::Zero(n);
        sol.y = Eigen::VectorXd::Zero(m);
        sol.s = Eigen::VectorXd::Zero(m);
        return sol;
    }
    if (ds.status == SolveStatus::Unbounded) {
        sol.status = SolveStatus::Infeasible;
        sol.x = Eigen::VectorXd::Zero(n);
        sol.y = Eigen::VectorXd::Zero(m);
        sol.s = Eigen::VectorXd::Zero(m);
        return sol;
    }
    sol.status = ds.status;

    // Map back: original x_free = dual equality multipliers, original cone
    // slack s = dual cone slack, original x_slack = s - b_cone, original
    // equality multipliers y = -y_dual, original cone multipliers z = dual s'
    // row values of the dual... recovered from ds.y / ds.s.
    sol.x = Eigen::VectorXd::Zero(n);
    sol.y = Eigen::VectorXd::Zero(m);
    sol.s = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < nf; ++k) sol.x[free_cols[k]] = ds.y[k];
    for (int r = 0; r < m; ++r) {
        if (row_kind[r]) {
            const int cr = cone_local[r];
            const double s_val = ds.y[nf + cr];      // dual multiplier of dual cone row
            const double sp_val = ds.s[nf + cr];     // dual slack
            sol.s[r] = s_val;
            sol.x[cone_row_col[r]] = s_val - b_cone[cr];
            sol.y[r] = sp_val;
        } else {
            sol.y[r] = -ds.x[eq_local[r]];
        }
    }
    sol.obj_primal = p.c.dot(sol.x);
    sol.obj_dual = -p.b.dot(sol.y);
    sol.res_primal = ds.res_dual;
    sol.res_dual = ds.res_primal;
    sol.gap_abs = ds.gap_abs;
    sol.gap_rel = ds.gap_rel;
    return sol;
}

} // namespace qcadp::conic::detail
