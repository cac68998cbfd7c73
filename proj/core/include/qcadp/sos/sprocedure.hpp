#pragma once

#include "qcadp/sos/program.hpp"

namespace qcadp::sos {

/// How constraint multipliers enter the nonnegativity certificate.
enum class MultiplierMode {
    PerConstraint, ///< b - sum_i lambda_i g_i in SOS, each lambda_i in SOS
    SharedSum,     ///< b - lambda * sum_i g_i in SOS, one lambda in SOS
};

struct SProcedureOptions {
    MultiplierMode mode = MultiplierMode::PerConstraint;
    int multiplier_degree = 2; ///< degree of each SOS multiplier (even)
    bool prune_basis = true;   ///< Newton-polytope pruning of the main Gram basis
};

struct SProcedureBlock {
    GramHandle main;                    ///< certificate Gram of b - sum(lambda g)
    std::vector<GramHandle> multipliers;
    AffinePoly certificate_target;      ///< the polynomial asserted to be SOS
    std::vector<AffinePoly> multiplier_polys;
};

/// Certifies b(x,u) >= 0 on the set {g_i >= 0}: subtracts SOS-multiplier-
/// weighted constraints and asserts the remainder is SOS. The main Gram basis
/// covers up to ceil(deg/2) with optional Newton-polytope pruning; multiplier
/// degrees come from options.
SProcedureBlock compile_sprocedure(SosProgram& prog, const AffinePoly& b,
                                   const std::vector<poly::Polynomial>& constraints,
                                   const SProcedureOptions& options = {});

} // namespace qcadp::sos
