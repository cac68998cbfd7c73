#include "qcadp/sos/sprocedure.hpp"

#include <stdexcept>

namespace qcadp::sos {

SProcedureBlock compile_sprocedure(SosProgram& prog, const AffinePoly& b,
                                   const std::vector<poly::Polynomial>& constraints,
                                   const SProcedureOptions& options) {
    if (options.multiplier_degree % 2 != 0 || options.multiplier_degree < 0) {
        throw std::invalid_argument("sprocedure: multiplier degree must be even and >= 0");
    }
    const std::size_t arity = prog.poly_arity();
    const auto mult_basis =
        poly::basis_up_to_degree(arity, options.multiplier_degree / 2);

    SProcedureBlock blk;
    blk.certificate_target = b;

    auto add_multiplier = [&](const poly::Polynomial& g) {
        GramHandle h = prog.add_gram(mult_basis);
        AffinePoly lambda = prog.gram_poly(h);
        blk.multipliers.push_back(h);
        blk.multiplier_polys.push_back(lambda);
        blk.certificate_target.add_scaled(multiply_affine(lambda, g), -1.0);
    };

    if (options.mode == MultiplierMode::PerConstraint) {
        for (const auto& g : constraints) add_multiplier(g);
    } else if (!constraints.empty()) {
        poly::Polynomial g_sum(arity);
        for (const auto& g : constraints) g_sum += g;
        add_multiplier(g_sum);
    }

    // Certificate basis: monomials up to half the target degree, pruned to the
    // half Newton polytope of the (symbolic-support) target.
    int deg = 0;
    for (const auto& e : blk.certificate_target.support()) deg = std::max(deg, e.degree());
    const int half = (deg + 1) / 2;
    poly::MonomialBasis main_basis =
        options.prune_basis
            ? poly::basis_up_to_degree_support(arity, half, blk.certificate_target.support())
            : poly::basis_up_to_degree(arity, half);

    blk.main = prog.compile_sos(blk.certificate_target, main_basis);
    return blk;
}

} // namespace qcadp::sos
