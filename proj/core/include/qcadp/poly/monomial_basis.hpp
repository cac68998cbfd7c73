#pragma once

#include "qcadp/poly/polynomial.hpp"

#include <optional>

namespace qcadp::poly {

/// Ordered monomial basis up to a total degree, in graded-lexicographic order.
/// An unpruned basis over n variables up to degree d has C(n+d, d) entries.
class MonomialBasis {
public:
    MonomialBasis() = default;
    explicit MonomialBasis(std::vector<Exponent> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    const Exponent& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Exponent>& entries() const { return entries_; }

private:
    std::vector<Exponent> entries_;
};

/// Full graded basis of monomials in `arity` variables up to total degree
/// `degree`. When `prune_for` is given, monomials whose doubled exponent lies
/// outside the Newton polytope of prune_for are removed; a Gram matrix over
/// the pruned basis can represent every sum-of-squares decomposition the full
/// basis can, for any polynomial supported on prune_for.
MonomialBasis basis_up_to_degree(std::size_t arity, int degree,
                                 const std::optional<Polynomial>& prune_for = std::nullopt);

/// Same pruning rule, driven by an explicit support set instead of a polynomial.
MonomialBasis basis_up_to_degree_support(std::size_t arity, int degree,
                                         const std::vector<Exponent>& support);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace qcadp::poly
