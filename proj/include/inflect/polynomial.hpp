#pragma once

#include "inflect/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inflect {

/// A named generator with a cohomological weight (c_i has weight i, L has weight 1).
struct Variable {
    std::string name;
    int weight = 1;

    bool operator==(const Variable&) const = default;
};

/// Upper bound on the weight carried jointly by a subset of the variables.
/// Used for classes pulled back from a base of dimension m: any monomial whose
/// base part has weight > m vanishes.
struct WeightCap {
    std::vector<std::size_t> variables;
    int max_weight = 0;

    bool operator==(const WeightCap&) const = default;
};

class Ring {
public:
    explicit Ring(std::vector<Variable> variables, std::vector<WeightCap> caps = {});

    std::size_t size() const noexcept { return variables_.size(); }
    const Variable& operator[](std::size_t i) const { return variables_[i]; }
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const std::vector<WeightCap>& caps() const noexcept { return caps_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws InvalidInput when the name is unknown.
    std::size_t index(std::string_view name) const;

    /// Human-readable descriptor, e.g. "L:1 C1:1 C2:2 | cap{C1,C2}<=2".
    std::string descriptor() const;

    bool operator==(const Ring& other) const
    {
        return variables_ == other.variables_ && caps_ == other.caps_;
    }

private:
    std::vector<Variable> variables_;
    std::vector<WeightCap> caps_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> variables, std::vector<WeightCap> caps = {});
/// Convenience: all variables of weight 1.
RingPtr make_plain_ring(const std::vector<std::string>& names);

bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms with zero coefficient are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, const Rational& constant);

    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial monomial(RingPtr ring, Exponents exponents, const Rational& coefficient);
    /// Parses expressions such as "19*d + 68*c1^2 - 3/2*x*(y-1)^2" or "3L + 3V1 - 5C1".
    static Polynomial parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponents& exponents) const;

    int weight_of(const Exponents& exponents) const;
    /// Largest weighted degree among the terms; empty for the zero polynomial.
    std::optional<int> weighted_degree() const;
    int total_degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    Polynomial homogeneous_part(int weight) const;
    /// Drops every term of weight > max_weight or violating a ring cap.
    Polynomial truncated(int max_weight) const;

    void add_term(const Exponents& exponents, const Rational& coefficient);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& other) const;

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(std::size_t var) const;

    Rational evaluate(std::span<const Rational> point) const;
    /// Replaces variable i by images[i] (all images living in `target`).
    Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;
    /// Replaces one variable by a polynomial in the same ring.
    Polynomial substitute(std::size_t var, const Polynomial& value) const;
    /// Re-expresses the polynomial in a ring that contains all of its variables by name.
    Polynomial rebase(const RingPtr& target) const;

    /// Canonical text: ascending weighted degree, lexicographically descending inside a degree.
    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

/// Product keeping only terms of weight <= max_weight that satisfy the ring caps.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_weight);

bool satisfies_caps(const Ring& ring, const Exponents& exponents);

std::string monomial_to_string(const Ring& ring, const Exponents& exponents);

}  // namespace inflect
