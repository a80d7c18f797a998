#pragma once

#include "inflect/polynomial.hpp"

#include <map>
#include <vector>

namespace inflect {

/// Rewrites a polynomial in formal Chern roots, symmetric within each root
/// group, as a polynomial in the elementary symmetric functions of the groups.
///
/// Roots all have weight 1; the elementary function e_i of a group has weight i.
/// Reduction repeatedly cancels the lexicographically leading monomial
/// x^a (a sorted within every group) against the product of elementary
/// functions with the same leading monomial, i.e. Gaussian elimination in the
/// triangular monomial-symmetric basis.
class SymmetricReducer {
public:
    explicit SymmetricReducer(std::vector<int> group_sizes);

    const RingPtr& root_ring() const noexcept { return roots_; }
    const RingPtr& elementary_ring() const noexcept { return elementary_; }

    Polynomial root(std::size_t group, std::size_t i) const;
    Polynomial elementary(std::size_t group, std::size_t i) const;

    /// Throws InvalidInput if the input is not symmetric within each group.
    Polynomial reduce(const Polynomial& symmetric);

private:
    std::size_t root_index(std::size_t group, std::size_t i) const { return offsets_[group] + i; }
    const Polynomial& elementary_product(const Exponents& e);

    std::vector<int> sizes_;
    std::vector<std::size_t> offsets_;
    RingPtr roots_;
    RingPtr elementary_;
    std::vector<Polynomial> elementary_in_roots_;  // indexed like elementary_ring variables
    std::map<Exponents, Polynomial> products_;
};

}  // namespace inflect
