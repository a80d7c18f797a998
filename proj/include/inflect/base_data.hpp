#pragma once

#include "inflect/graded.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inflect {

/// Intersection numbers on a base Y of dimension m: every monomial of weight m
/// in c1..cm (Chern classes of T_Y) and v1..vm (Chern classes of V) maps to a
/// number, or more generally to a polynomial in named parameters (for
/// families such as V = O(x) + ... on P^2).
class NumericalBaseData {
public:
    /// Throws InvalidInput unless dimension >= 1.
    explicit NumericalBaseData(int dimension, std::vector<std::string> parameters = {});

    int dimension() const noexcept { return dimension_; }
    const RingPtr& parameter_ring() const noexcept { return params_; }
    bool is_numeric() const;

    /// Ring of the monomial keys: c1..cm, v1..vm with their weights.
    const RingPtr& key_ring() const noexcept { return keys_; }
    /// Canonical spelling of a monomial key; throws InvalidInput if the text is
    /// not a monic monomial of weight m.
    std::string canonical_key(std::string_view monomial) const;

    void set(std::string_view monomial, const Polynomial& value);
    void set(std::string_view monomial, const Rational& value);
    /// Value given as an expression in the parameters.
    void set(std::string_view monomial, std::string_view value);

    std::optional<Polynomial> get(std::string_view monomial) const;
    const std::map<std::string, Polynomial>& assignments() const noexcept { return values_; }

    /// Integrates a class on the base: the weight-m part is evaluated term by
    /// term, lower weights integrate to zero. Throws IncompleteData listing
    /// every monomial without an assignment.
    Polynomial evaluate(const GradedClass& on_base) const;
    Polynomial evaluate(const Polynomial& on_base) const;

    /// Fixes some parameters to numbers; the remaining ones stay symbolic.
    NumericalBaseData specialize(const std::map<std::string, Rational>& values) const;

    /// All monomial keys of weight m (c's and v's up to index m).
    std::vector<std::string> all_keys() const;

    bool operator==(const NumericalBaseData& other) const;

private:
    int dimension_;
    RingPtr params_;
    RingPtr keys_;
    std::map<std::string, Polynomial> values_;
};

/// Builds base data from a presentation of the cohomology of Y: generator
/// classes of weight 1, the integrals of their top monomials, and the Chern
/// classes of T_Y and V written in the generators (coefficients may involve
/// parameters). Unset Chern classes are zero.
class IntersectionModel {
public:
    IntersectionModel(int dimension, std::vector<std::string> generators, std::vector<std::string> parameters = {});

    IntersectionModel& integral(std::string_view generator_monomial, std::string_view value);
    /// symbol is one of c1..cm, v1..vm.
    IntersectionModel& chern(std::string_view symbol, std::string_view expression);

    NumericalBaseData build() const;

private:
    int dimension_;
    std::vector<std::string> generators_;
    std::vector<std::string> parameters_;
    RingPtr ring_;  // generators followed by parameters
    std::map<Exponents, Polynomial> integrals_;
    std::map<std::string, Polynomial> classes_;
};

}  // namespace inflect
