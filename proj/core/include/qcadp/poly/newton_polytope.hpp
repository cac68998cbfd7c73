#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <vector>

namespace qcadp::poly {

/// Convex-hull membership test on exponent vectors: decides whether `query`
/// lies in conv(points). Runs a dense phase-1 simplex on the convex
/// combination formulation; points marginally outside the hull (within
/// tolerance) are reported as members, so callers that prune on a negative
/// answer never over-prune.
bool in_convex_hull(const std::vector<std::vector<double>>& points,
                    const std::vector<double>& query, double tol = 1e-9);

} // namespace qcadp::poly
