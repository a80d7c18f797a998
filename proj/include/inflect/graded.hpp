#pragma once

#include "inflect/polynomial.hpp"

#include <optional>
#include <string>

namespace inflect {

/// An element of a truncated graded ring: a polynomial in weighted generators
/// where every term of weight above `truncation` (or violating a ring cap) is
/// discarded. Immutable; every operation returns a new value.
class GradedClass {
public:
    GradedClass(RingPtr ring, int truncation);
    GradedClass(Polynomial poly, int truncation);

    static GradedClass one(RingPtr ring, int truncation);
    static GradedClass constant(RingPtr ring, int truncation, const Rational& c);
    static GradedClass variable(RingPtr ring, int truncation, std::string_view name);
    static GradedClass parse(RingPtr ring, int truncation, std::string_view text);

    const RingPtr& ring() const noexcept { return poly_.ring(); }
    int truncation() const noexcept { return truncation_; }
    const Polynomial& polynomial() const noexcept { return poly_; }

    bool is_zero() const noexcept { return poly_.is_zero(); }
    /// Highest weighted degree present; empty (undefined) for the zero class.
    std::optional<int> degree() const { return poly_.weighted_degree(); }
    bool is_homogeneous() const { return poly_.is_homogeneous(); }
    Rational constant_term() const { return poly_.constant_term(); }

    /// Component of the given weight; an empty class when weight > truncation.
    GradedClass part(int weight) const;

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& other);
    GradedClass& operator-=(const GradedClass& other);
    GradedClass& operator*=(const GradedClass& other);
    GradedClass& operator*=(const Rational& scalar);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const GradedClass& b) { return a *= b; }
    friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
    friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }

    bool operator==(const GradedClass& other) const;

    GradedClass pow(unsigned exponent) const;
    /// Multiplies the weight-i component by factor^i (the grading automorphism).
    GradedClass scale_grading(const Rational& factor) const;

    std::string to_string() const { return poly_.to_string(); }

private:
    void check_compatible(const GradedClass& other) const;

    Polynomial poly_;
    int truncation_;
};

/// Multiplicative inverse of a class whose constant term is 1.
/// Throws InvalidInput for any other constant term.
GradedClass series_inverse(const GradedClass& x);

}  // namespace inflect
