#pragma once

#include "qcadp/adp/fitter.hpp"

#include <filesystem>

namespace qcadp::adp {

/// Persists a fitted family: per-member quadratic coefficients, weighting
/// metadata, certificate diagnostics, and the certified Bellman polynomial,
/// all in the line-oriented polynomial text format (bit-exact round-trip).
void save_family(const std::filesystem::path& file, const ValueFunctionFamily& fam);
ValueFunctionFamily load_family(const std::filesystem::path& file);

} // namespace qcadp::adp
