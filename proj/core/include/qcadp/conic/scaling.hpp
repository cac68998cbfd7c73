#pragma once

#include "qcadp/conic/problem.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qcadp::conic::detail {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Layout of the non-equality cone rows (NonNeg / Soc / Psd blocks only),
/// with per-block offsets into the stacked slack vector.
struct ConeLayout {
    struct Block {
        ConeBlock::Kind kind;
        int dim;    // NonNeg/Soc: length; Psd: side
        int offset; // first row of this block in the stacked vector
        int rows() const { return kind == ConeBlock::Kind::Psd ? dim * (dim + 1) / 2 : dim; }
    };
    std::vector<Block> blocks;
    int total = 0;
    int barrier_degree = 0; // nonneg count + #soc + sum of psd sides

    static ConeLayout from_blocks(const std::vector<ConeBlock>& cones);
};

// svec helpers (sqrt(2)-scaled lower triangle, row-major: index(i>=j) = i(i+1)/2+j)
void svec_to_mat(const double* v, int side, MatrixXd& M);
void mat_to_svec(const MatrixXd& M, double* v);

/// Nesterov-Todd scaling point for one iteration, per block, with the scaled
/// variable lambda = W z = W^{-T} s.
class NTScaling {
public:
    /// Identity scaling (used for initialization).
    static NTScaling identity(const ConeLayout& layout);
    /// Computes the scaling from strictly interior s, z.
    static NTScaling compute(const ConeLayout& layout, const VectorXd& s, const VectorXd& z);

    const VectorXd& lambda() const { return lambda_; }

    // Operator applications on stacked cone vectors.
    VectorXd apply_W(const VectorXd& u) const;        // W u
    VectorXd apply_WT(const VectorXd& u) const;       // W' u
    VectorXd apply_Winv(const VectorXd& u) const;     // W^{-1} u
    VectorXd apply_WinvT(const VectorXd& u) const;    // W^{-T} u
    VectorXd apply_WtW(const VectorXd& u) const;      // W'W u
    VectorXd apply_WtW_inv(const VectorXd& u) const;  // (W'W)^{-1} u

    /// (W'W)^{-1} applied to a sparse column given as (row, value) pairs in
    /// block-local stacked coordinates; adds the result into `out`.
    void apply_WtW_inv_sparse(const std::vector<std::pair<int, double>>& entries,
                              double* out) const;

    // Jordan-algebra pieces in lambda space.
    VectorXd lambda_sq() const;                        // lambda o lambda
    VectorXd identity_e() const;                       // unit element per block
    VectorXd jordan_product(const VectorXd& u, const VectorXd& v) const;
    VectorXd lambda_inv_circ(const VectorXd& v) const; // solve lambda o u = v

    /// sup { alpha : lambda + alpha rho in K }, capped at `cap`.
    double max_step(const VectorXd& rho, double cap) const;

    const ConeLayout& layout() const { return *layout_; }

private:
    const ConeLayout* layout_ = nullptr;
    VectorXd lambda_;
    // nonneg: w per entry; soc: beta + v; psd: R, Rti (= R^{-T}), RRt, T (= (RR')^{-1})
    std::vector<VectorXd> nn_w_;
    struct SocScale {
        double beta;
        VectorXd v;
    };
    std::vector<SocScale> soc_;
    struct PsdScale {
        MatrixXd R, Rti, RRt, T;
        VectorXd sigma;
    };
    std::vector<PsdScale> psd_;
    std::vector<int> nn_index_, soc_index_, psd_index_; // block -> per-kind list index
};

/// Minimum Jordan eigenvalue of a stacked cone vector (per-block min taken).
double min_eig(const ConeLayout& layout, const VectorXd& u);
/// u + t * e, with e the stacked unit element.
void add_identity(const ConeLayout& layout, VectorXd& u, double t);
/// Per-block minimum eigenvalues (for verify()).
std::vector<double> block_min_eigs(const ConeLayout& layout, const VectorXd& u);

} // namespace qcadp::conic::detail
