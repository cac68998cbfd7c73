#pragma once

#include "qcadp/conic/problem.hpp"

#include <iosfwd>

namespace qcadp::conic {

/// Sparse text dump for cross-checking against external solvers.
/// Header: "conic <n_vars> <n_rows> <n_blocks>" followed by one "cone <kind>
/// <dim>" line per block (kinds: zero, nonneg, soc, psd), then "c"/"b" vectors
/// and "A <nnz>" with COO triplets, one per line.
void write_problem(std::ostream& os, const ConicProblem& p);
ConicProblem read_problem(std::istream& is);

} // namespace qcadp::conic
