#include "qcadp/poly/monomial_basis.hpp"

#include "qcadp/poly/newton_polytope.hpp"

#include <algorithm>

namespace qcadp::poly {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace {

void enumerate(std::size_t arity, int degree_left, std::size_t var, Exponent& cur,
               std::vector<Exponent>& out) {
    if (var == arity) {
        out.push_back(cur);
        return;
    }
    for (int p = 0; p <= degree_left; ++p) {
        cur[var] = static_cast<std::uint8_t>(p);
        enumerate(arity, degree_left - p, var + 1, cur, out);
    }
    cur[var] = 0;
}

} // namespace

MonomialBasis basis_up_to_degree(std::size_t arity, int degree,
                                 const std::optional<Polynomial>& prune_for) {
    if (!prune_for) return basis_up_to_degree_support(arity, degree, {});
    std::vector<Exponent> support;
    support.reserve(prune_for->term_count());
    for (const auto& [e, c] : prune_for->terms()) support.push_back(e);
    return basis_up_to_degree_support(arity, degree, support);
}

MonomialBasis basis_up_to_degree_support(std::size_t arity, int degree,
                                         const std::vector<Exponent>& support) {
    std::vector<Exponent> all;
    Exponent cur(arity);
    enumerate(arity, degree, 0, cur, all);
    std::sort(all.begin(), all.end(), GradedLexLess{});

    if (support.empty()) return MonomialBasis(std::move(all));

    // The hull always includes the origin: pruning against conv(support u {0})
    // keeps the constant monomial available and can only enlarge the basis,
    // so no valid Gram representation is ever excluded.
    std::vector<std::vector<double>> pts;
    pts.reserve(support.size() + 1);
    pts.emplace_back(arity, 0.0);
    int max_support_deg = 0;
    std::vector<int> max_per_var(arity, 0);
    for (const auto& e : support) {
        std::vector<double> p(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            p[i] = e[i];
            max_per_var[i] = std::max<int>(max_per_var[i], e[i]);
        }
        max_support_deg = std::max(max_support_deg, e.degree());
        pts.push_back(std::move(p));
    }

    std::vector<Exponent> kept;
    for (const auto& e : all) {
        // Cheap necessary conditions before the exact hull test.
        if (2 * e.degree() > max_support_deg) continue;
        bool box_ok = true;
        for (std::size_t i = 0; i < arity; ++i) {
            if (2 * e[i] > max_per_var[i]) {
                box_ok = false;
                break;
            }
        }
        if (!box_ok) continue;
        std::vector<double> q(arity);
        for (std::size_t i = 0; i < arity; ++i) q[i] = 2.0 * e[i];
        if (in_convex_hull(pts, q)) kept.push_back(e);
    }
    return MonomialBasis(std::move(kept));
}

} // namespace qcadp::poly
