#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <iosfwd>

namespace qcadp::poly {

/// Text serialization: one term per line, "coeff e1 e2 ... en". Coefficients
/// are printed with 17 significant digits so round-trips are bit-exact.
void write_polynomial(std::ostream& os, const Polynomial& p);
Polynomial read_polynomial(std::istream& is, std::size_t arity, std::size_t n_terms);

std::string polynomial_to_text(const Polynomial& p);

} // namespace qcadp::poly
