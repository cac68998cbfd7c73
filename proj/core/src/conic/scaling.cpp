#include "qcadp/conic/scaling.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcadp::conic::detail {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865475;

inline double soc_det(const double* u, int k) {
    double n1 = 0.0;
    for (int i = 1; i < k; ++i) n1 += u[i] * u[i];
    return u[0] * u[0] - n1;
}
} // namespace

ConeLayout ConeLayout::from_blocks(const std::vector<ConeBlock>& cones) {
    ConeLayout layout;
    int off = 0;
    for (const auto& blk : cones) {
        if (blk.kind == ConeBlock::Kind::Zero) continue;
        Block lb{blk.kind, blk.dim, off};
        off += lb.rows();
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg: layout.barrier_degree += blk.dim; break;
            case ConeBlock::Kind::Soc: layout.barrier_degree += 1; break;
            case ConeBlock::Kind::Psd: layout.barrier_degree += blk.dim; break;
            default: break;
        }
        layout.blocks.push_back(lb);
    }
    layout.total = off;
    return layout;
}

void svec_to_mat(const double* v, int side, MatrixXd& M) {
    M.resize(side, side);
    int idx = 0;
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j <= i; ++j, ++idx) {
            if (i == j) {
                M(i, i) = v[idx];
            } else {
                const double val = v[idx] * kInvSqrt2;
                M(i, j) = val;
                M(j, i) = val;
            }
        }
    }
}

void mat_to_svec(const MatrixXd& M, double* v) {
    const int side = static_cast<int>(M.rows());
    int idx = 0;
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j <= i; ++j, ++idx) {
            v[idx] = (i == j) ? M(i, i) : (M(i, j) + M(j, i)) * 0.5 * kSqrt2;
        }
    }
}

NTScaling NTScaling::identity(const ConeLayout& layout) {
    NTScaling w;
    w.layout_ = &layout;
    w.lambda_ = VectorXd::Zero(layout.total);
    for (const auto& blk : layout.blocks) {
        w.nn_index_.push_back(-1);
        w.soc_index_.push_back(-1);
        w.psd_index_.push_back(-1);
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                w.nn_index_.back() = static_cast<int>(w.nn_w_.size());
                w.nn_w_.push_back(VectorXd::Ones(blk.dim));
                break;
            case ConeBlock::Kind::Soc: {
                w.soc_index_.back() = static_cast<int>(w.soc_.size());
                SocScale s;
                s.beta = 1.0;
                s.v = VectorXd::Zero(blk.dim);
                s.v[0] = 1.0;
                w.soc_.push_back(std::move(s));
                break;
            }
            case ConeBlock::Kind::Psd: {
                w.psd_index_.back() = static_cast<int>(w.psd_.size());
                PsdScale p;
                p.R = MatrixXd::Identity(blk.dim, blk.dim);
                p.Rti = p.R;
                p.RRt = p.R;
                p.T = p.R;
                p.sigma = VectorXd::Ones(blk.dim);
                w.psd_.push_back(std::move(p));
                break;
            }
            default: break;
        }
    }
    return w;
}

NTScaling NTScaling::compute(const ConeLayout& layout, const VectorXd& s, const VectorXd& z) {
    NTScaling w;
    w.layout_ = &layout;
    w.lambda_ = VectorXd::Zero(layout.total);
    for (const auto& blk : layout.blocks) {
        w.nn_index_.push_back(-1);
        w.soc_index_.push_back(-1);
        w.psd_index_.push_back(-1);
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg: {
                w.nn_index_.back() = static_cast<int>(w.nn_w_.size());
                VectorXd wi(blk.dim);
                for (int i = 0; i < blk.dim; ++i) {
                    const double si = s[off + i], zi = z[off + i];
                    if (si <= 0 || zi <= 0) throw std::runtime_error("NT scaling: point not interior");
                    wi[i] = std::sqrt(si / zi);
                    w.lambda_[off + i] = std::sqrt(si * zi);
                }
                w.nn_w_.push_back(std::move(wi));
                break;
            }
            case ConeBlock::Kind::Soc: {
                w.soc_index_.back() = static_cast<int>(w.soc_.size());
                const int k = blk.dim;
                const double Js = soc_det(s.data() + off, k);
                const double Jz = soc_det(z.data() + off, k);
                if (Js <= 0 || Jz <= 0 || s[off] <= 0 || z[off] <= 0) {
                    throw std::runtime_error("NT scaling: SOC point not interior");
                }
                const double a = std::sqrt(Js), bnorm = std::sqrt(Jz);
                SocScale sc;
                sc.beta = std::sqrt(a / bnorm);
                VectorXd sb = s.segment(off, k) / a;
                VectorXd zb = z.segment(off, k) / bnorm;
                double dot = sb[0] * zb[0];
                for (int i = 1; i < k; ++i) dot += sb[i] * zb[i];
                const double gamma = std::sqrt((1.0 + dot) / 2.0);
                // Unit-hyperbolic Householder point: H(vh) maps zbar to sbar.
                VectorXd vh = sb;
                vh[0] += zb[0];
                for (int i = 1; i < k; ++i) vh[i] -= zb[i];
                vh /= (2.0 * gamma);
                // The scaling needs the Jordan square root of vh, so that
                // H(v)^2 = H(vh) and W z = W^{-1} s.
                sc.v.resize(k);
                sc.v[0] = std::sqrt((vh[0] + 1.0) / 2.0);
                for (int i = 1; i < k; ++i) sc.v[i] = vh[i] / (2.0 * sc.v[0]);
                // lambda = W z = beta (2 v (v'z) - J z)
                const double vz = sc.v.dot(z.segment(off, k));
                VectorXd lam = 2.0 * vz * sc.v;
                lam[0] -= z[off];
                for (int i = 1; i < k; ++i) lam[i] += z[off + i];
                lam *= sc.beta;
                w.lambda_.segment(off, k) = lam;
                w.soc_.push_back(std::move(sc));
                break;
            }
            case ConeBlock::Kind::Psd: {
                w.psd_index_.back() = static_cast<int>(w.psd_.size());
                const int side = blk.dim;
                MatrixXd S, Z;
                svec_to_mat(s.data() + off, side, S);
                svec_to_mat(z.data() + off, side, Z);
                Eigen::LLT<MatrixXd> llt_s(S), llt_z(Z);
                if (llt_s.info() != Eigen::Success || llt_z.info() != Eigen::Success) {
                    throw std::runtime_error("NT scaling: PSD point not interior");
                }
                MatrixXd Ls = llt_s.matrixL();
                MatrixXd Lz = llt_z.matrixL();
                Eigen::BDCSVD<MatrixXd> svd(Lz.transpose() * Ls,
                                            Eigen::ComputeFullU | Eigen::ComputeFullV);
                const VectorXd& sig = svd.singularValues();
                if (sig.minCoeff() <= 0) throw std::runtime_error("NT scaling: singular PSD pair");
                PsdScale p;
                VectorXd inv_sqrt = sig.array().sqrt().inverse();
                p.R = Ls * svd.matrixV() * inv_sqrt.asDiagonal();
                p.Rti = Lz * svd.matrixU() * inv_sqrt.asDiagonal();
                p.RRt = p.R * p.R.transpose();
                p.T = p.Rti * p.Rti.transpose();
                p.sigma = sig;
                // lambda = diag(sigma) as a matrix
                MatrixXd Lam = sig.asDiagonal();
                mat_to_svec(Lam, w.lambda_.data() + off);
                w.psd_.push_back(std::move(p));
                break;
            }
            default: break;
        }
    }
    return w;
}

namespace {

// H(v) u = 2 v (v'u) - J u, the hyperbolic Householder map of the SOC scaling.
inline void soc_apply_H(const VectorXd& v, const double* u, double* out, int k) {
    double vu = 0.0;
    for (int i = 0; i < k; ++i) vu += v[i] * u[i];
    out[0] = 2.0 * v[0] * vu - u[0];
    for (int i = 1; i < k; ++i) out[i] = 2.0 * v[i] * vu + u[i];
}

// H(v)^{-1} = J H(v) J.
inline void soc_apply_Hinv(const VectorXd& v, const double* u, double* out, int k) {
    // J u
    std::vector<double> ju(k);
    ju[0] = u[0];
    for (int i = 1; i < k; ++i) ju[i] = -u[i];
    std::vector<double> t(k);
    soc_apply_H(v, ju.data(), t.data(), k);
    out[0] = t[0];
    for (int i = 1; i < k; ++i) out[i] = -t[i];
}

} // namespace

VectorXd NTScaling::apply_W(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.segment(off, blk.dim) =
                    nn_w_[nn_index_[bi]].cwiseProduct(u.segment(off, blk.dim));
                break;
            case ConeBlock::Kind::Soc: {
                const auto& sc = soc_[soc_index_[bi]];
                soc_apply_H(sc.v, u.data() + off, out.data() + off, blk.dim);
                out.segment(off, blk.dim) *= sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                MatrixXd res = p.R.transpose() * U * p.R;
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::apply_WT(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                // diagonal: W' = W
                out.segment(off, blk.dim) =
                    nn_w_[nn_index_[bi]].cwiseProduct(u.segment(off, blk.dim));
                break;
            case ConeBlock::Kind::Soc: {
                // symmetric: W' = W
                const auto& sc = soc_[soc_index_[bi]];
                soc_apply_H(sc.v, u.data() + off, out.data() + off, blk.dim);
                out.segment(off, blk.dim) *= sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                MatrixXd res = p.R * U * p.R.transpose();
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::apply_Winv(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.segment(off, blk.dim) =
                    u.segment(off, blk.dim).cwiseQuotient(nn_w_[nn_index_[bi]]);
                break;
            case ConeBlock::Kind::Soc: {
                const auto& sc = soc_[soc_index_[bi]];
                soc_apply_Hinv(sc.v, u.data() + off, out.data() + off, blk.dim);
                out.segment(off, blk.dim) /= sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                MatrixXd res = p.Rti * U * p.Rti.transpose();
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::apply_WinvT(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.segment(off, blk.dim) =
                    u.segment(off, blk.dim).cwiseQuotient(nn_w_[nn_index_[bi]]);
                break;
            case ConeBlock::Kind::Soc: {
                const auto& sc = soc_[soc_index_[bi]];
                soc_apply_Hinv(sc.v, u.data() + off, out.data() + off, blk.dim);
                out.segment(off, blk.dim) /= sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                // W^{-T} U = R^{-1} U R^{-T}, with R^{-1} = Rti'
                MatrixXd res = p.Rti.transpose() * U * p.Rti;
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::apply_WtW(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg: {
                const auto& wv = nn_w_[nn_index_[bi]];
                out.segment(off, blk.dim) =
                    u.segment(off, blk.dim).cwiseProduct(wv).cwiseProduct(wv);
                break;
            }
            case ConeBlock::Kind::Soc: {
                const auto& sc = soc_[soc_index_[bi]];
                std::vector<double> tmp(blk.dim);
                soc_apply_H(sc.v, u.data() + off, tmp.data(), blk.dim);
                soc_apply_H(sc.v, tmp.data(), out.data() + off, blk.dim);
                out.segment(off, blk.dim) *= sc.beta * sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                MatrixXd res = p.RRt * U * p.RRt;
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::apply_WtW_inv(const VectorXd& u) const {
    VectorXd out(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg: {
                const auto& wv = nn_w_[nn_index_[bi]];
                out.segment(off, blk.dim) =
                    u.segment(off, blk.dim).cwiseQuotient(wv).cwiseQuotient(wv);
                break;
            }
            case ConeBlock::Kind::Soc: {
                const auto& sc = soc_[soc_index_[bi]];
                std::vector<double> tmp(blk.dim);
                soc_apply_Hinv(sc.v, u.data() + off, tmp.data(), blk.dim);
                soc_apply_Hinv(sc.v, tmp.data(), out.data() + off, blk.dim);
                out.segment(off, blk.dim) /= sc.beta * sc.beta;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                MatrixXd U;
                svec_to_mat(u.data() + off, blk.dim, U);
                MatrixXd res = p.T * U * p.T;
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

void NTScaling::apply_WtW_inv_sparse(const std::vector<std::pair<int, double>>& entries,
                                     double* out) const {
    // Group the entries per block, then apply the block operator.
    std::size_t bi = 0;
    std::size_t k = 0;
    while (k < entries.size()) {
        while (bi < layout_->blocks.size() &&
               entries[k].first >= layout_->blocks[bi].offset + layout_->blocks[bi].rows()) {
            ++bi;
        }
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        std::size_t end = k;
        while (end < entries.size() && entries[end].first < off + blk.rows()) ++end;

        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg: {
                const auto& wv = nn_w_[nn_index_[bi]];
                for (std::size_t t = k; t < end; ++t) {
                    const int li = entries[t].first - off;
                    out[off + li] += entries[t].second / (wv[li] * wv[li]);
                }
                break;
            }
            case ConeBlock::Kind::Soc: {
                VectorXd u = VectorXd::Zero(blk.dim);
                for (std::size_t t = k; t < end; ++t) u[entries[t].first - off] = entries[t].second;
                const auto& sc = soc_[soc_index_[bi]];
                std::vector<double> tmp(blk.dim), res(blk.dim);
                soc_apply_Hinv(sc.v, u.data(), tmp.data(), blk.dim);
                soc_apply_Hinv(sc.v, tmp.data(), res.data(), blk.dim);
                const double inv_b2 = 1.0 / (sc.beta * sc.beta);
                for (int i = 0; i < blk.dim; ++i) out[off + i] += res[i] * inv_b2;
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& p = psd_[psd_index_[bi]];
                const int side = blk.dim;
                // T M T accumulated entrywise: each svec entry contributes a
                // symmetrized rank-2 outer product of columns of T.
                MatrixXd res = MatrixXd::Zero(side, side);
                for (std::size_t t = k; t < end; ++t) {
                    int li = entries[t].first - off;
                    // invert svec index
                    int i = static_cast<int>((std::sqrt(8.0 * li + 1.0) - 1.0) / 2.0);
                    while ((i + 1) * (i + 2) / 2 <= li) ++i;
                    while (i * (i + 1) / 2 > li) --i;
                    const int j = li - i * (i + 1) / 2;
                    const double val = entries[t].second;
                    if (i == j) {
                        res.noalias() += val * p.T.col(i) * p.T.col(i).transpose();
                    } else {
                        const double v2 = val * kInvSqrt2;
                        res.noalias() += v2 * p.T.col(i) * p.T.col(j).transpose();
                        res.noalias() += v2 * p.T.col(j) * p.T.col(i).transpose();
                    }
                }
                std::vector<double> sv(blk.rows());
                mat_to_svec(res, sv.data());
                for (int r = 0; r < blk.rows(); ++r) out[off + r] += sv[r];
                break;
            }
            default: break;
        }
        k = end;
    }
}

VectorXd NTScaling::lambda_sq() const {
    return jordan_product(lambda_, lambda_);
}

VectorXd NTScaling::identity_e() const {
    VectorXd e = VectorXd::Zero(layout_->total);
    for (const auto& blk : layout_->blocks) {
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                e.segment(blk.offset, blk.dim).setOnes();
                break;
            case ConeBlock::Kind::Soc:
                e[blk.offset] = 1.0;
                break;
            case ConeBlock::Kind::Psd: {
                int idx = blk.offset;
                for (int i = 0; i < blk.dim; ++i) {
                    e[idx + i * (i + 1) / 2 + i] = 1.0;
                }
                break;
            }
            default: break;
        }
    }
    return e;
}

VectorXd NTScaling::jordan_product(const VectorXd& u, const VectorXd& v) const {
    VectorXd out = VectorXd::Zero(layout_->total);
    for (const auto& blk : layout_->blocks) {
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.segment(off, blk.dim) =
                    u.segment(off, blk.dim).cwiseProduct(v.segment(off, blk.dim));
                break;
            case ConeBlock::Kind::Soc: {
                const int k = blk.dim;
                double dot = 0.0;
                for (int i = 0; i < k; ++i) dot += u[off + i] * v[off + i];
                out[off] = dot;
                for (int i = 1; i < k; ++i) {
                    out[off + i] = u[off] * v[off + i] + v[off] * u[off + i];
                }
                break;
            }
            case ConeBlock::Kind::Psd: {
                MatrixXd U, V;
                svec_to_mat(u.data() + off, blk.dim, U);
                svec_to_mat(v.data() + off, blk.dim, V);
                MatrixXd res = 0.5 * (U * V + V * U);
                mat_to_svec(res, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

VectorXd NTScaling::lambda_inv_circ(const VectorXd& v) const {
    VectorXd out = VectorXd::Zero(layout_->total);
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.segment(off, blk.dim) =
                    v.segment(off, blk.dim).cwiseQuotient(lambda_.segment(off, blk.dim));
                break;
            case ConeBlock::Kind::Soc: {
                const int k = blk.dim;
                const double l0 = lambda_[off];
                double l1v1 = 0.0, l1sq = 0.0;
                for (int i = 1; i < k; ++i) {
                    l1v1 += lambda_[off + i] * v[off + i];
                    l1sq += lambda_[off + i] * lambda_[off + i];
                }
                const double det = l0 * l0 - l1sq;
                const double u0 = (l0 * v[off] - l1v1) / det;
                out[off] = u0;
                for (int i = 1; i < k; ++i) {
                    out[off + i] = (v[off + i] - u0 * lambda_[off + i]) / l0;
                }
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& sig = psd_[psd_index_[bi]].sigma;
                MatrixXd V;
                svec_to_mat(v.data() + off, blk.dim, V);
                MatrixXd U(blk.dim, blk.dim);
                for (int i = 0; i < blk.dim; ++i) {
                    for (int j = 0; j < blk.dim; ++j) {
                        U(i, j) = 2.0 * V(i, j) / (sig[i] + sig[j]);
                    }
                }
                mat_to_svec(U, out.data() + off);
                break;
            }
            default: break;
        }
    }
    return out;
}

double NTScaling::max_step(const VectorXd& rho, double cap) const {
    double alpha = cap;
    for (std::size_t bi = 0; bi < layout_->blocks.size(); ++bi) {
        const auto& blk = layout_->blocks[bi];
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                for (int i = 0; i < blk.dim; ++i) {
                    if (rho[off + i] < 0) {
                        alpha = std::min(alpha, -lambda_[off + i] / rho[off + i]);
                    }
                }
                break;
            case ConeBlock::Kind::Soc: {
                const int k = blk.dim;
                const double c = soc_det(lambda_.data() + off, k);
                double bq = lambda_[off] * rho[off];
                for (int i = 1; i < k; ++i) bq -= lambda_[off + i] * rho[off + i];
                const double a = soc_det(rho.data() + off, k);
                double af = cap;
                if (std::abs(a) < 1e-15) {
                    if (bq < 0) af = -c / (2.0 * bq);
                } else {
                    const double disc = bq * bq - a * c;
                    if (a < 0) {
                        af = (-bq - std::sqrt(disc)) / a;
                    } else if (disc >= 0 && bq < 0) {
                        af = (-bq - std::sqrt(disc)) / a;
                    }
                }
                if (af < 0) af = cap;
                // also keep the first component positive
                if (rho[off] < 0) af = std::min(af, -lambda_[off] / rho[off]);
                alpha = std::min(alpha, af);
                break;
            }
            case ConeBlock::Kind::Psd: {
                const auto& sig = psd_[psd_index_[bi]].sigma;
                MatrixXd Rm;
                svec_to_mat(rho.data() + off, blk.dim, Rm);
                for (int i = 0; i < blk.dim; ++i) {
                    for (int j = 0; j < blk.dim; ++j) {
                        Rm(i, j) /= std::sqrt(sig[i] * sig[j]);
                    }
                }
                Eigen::SelfAdjointEigenSolver<MatrixXd> es(Rm, Eigen::EigenvaluesOnly);
                const double emin = es.eigenvalues().minCoeff();
                if (emin < 0) alpha = std::min(alpha, -1.0 / emin);
                break;
            }
            default: break;
        }
    }
    return alpha;
}

double min_eig(const ConeLayout& layout, const VectorXd& u) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : block_min_eigs(layout, u)) m = std::min(m, v);
    return m;
}

std::vector<double> block_min_eigs(const ConeLayout& layout, const VectorXd& u) {
    std::vector<double> out;
    for (const auto& blk : layout.blocks) {
        const int off = blk.offset;
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                out.push_back(u.segment(off, blk.dim).minCoeff());
                break;
            case ConeBlock::Kind::Soc: {
                double n1 = 0.0;
                for (int i = 1; i < blk.dim; ++i) n1 += u[off + i] * u[off + i];
                out.push_back(u[off] - std::sqrt(n1));
                break;
            }
            case ConeBlock::Kind::Psd: {
                MatrixXd M;
                svec_to_mat(u.data() + off, blk.dim, M);
                Eigen::SelfAdjointEigenSolver<MatrixXd> es(M, Eigen::EigenvaluesOnly);
                out.push_back(es.eigenvalues().minCoeff());
                break;
            }
            default: break;
        }
    }
    return out;
}

void add_identity(const ConeLayout& layout, VectorXd& u, double t) {
    for (const auto& blk : layout.blocks) {
        switch (blk.kind) {
            case ConeBlock::Kind::NonNeg:
                u.segment(blk.offset, blk.dim).array() += t;
                break;
            case ConeBlock::Kind::Soc:
                u[blk.offset] += t;
                break;
            case ConeBlock::Kind::Psd:
                for (int i = 0; i < blk.dim; ++i) {
                    u[blk.offset + i * (i + 1) / 2 + i] += t;
                }
                break;
            default: break;
        }
    }
}

} // namespace qcadp::conic::detail
