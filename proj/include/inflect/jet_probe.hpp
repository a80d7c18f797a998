#pragma once

#include "inflect/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace inflect {

/// A local parameterization of a variety in P^N: coordinate polynomials in the
/// chart variables, probed up to derivative order k.
struct JetProbeSpec {
    std::vector<std::string> variables;
    std::vector<std::string> coordinates;
    int k = 2;
    int trials = 8;
    std::uint64_t seed = 1;
    long height = 100;

    bool operator==(const JetProbeSpec&) const = default;
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Parsed form of a spec. Construction throws InvalidInput for bad input
/// (unknown symbols, k < 0, trials < 1, height < 1, no coordinates).
class JetChart {
public:
    explicit JetChart(const JetProbeSpec& spec);

    const JetProbeSpec& spec() const noexcept { return spec_; }
    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& coordinates() const noexcept { return coords_; }
    /// Set when no coordinate is the constant 1.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Multi-indices of order <= k in graded-lex order: 0, then x1, x2, ..., then x1^2, x1 x2, ...
    std::vector<Exponents> multi_indices(int k) const;

    /// Rows: derivatives by the multi-indices; columns: coordinates.
    PolynomialMatrix symbolic_jet_matrix(int k) const;
    RationalMatrix jet_matrix(const std::vector<Rational>& point, int k) const;
    RationalMatrix jet_matrix(const std::vector<Rational>& point) const { return jet_matrix(point, spec_.k); }

private:
    JetProbeSpec spec_;
    RingPtr ring_;
    std::vector<Polynomial> coords_;
    std::vector<std::string> warnings_;
};

std::size_t rank(RationalMatrix m);

/// Rank over the field of rational functions by fraction-free elimination.
std::size_t symbolic_rank(PolynomialMatrix m);

struct JetRankReport {
    std::size_t rank = 0;
    std::vector<std::size_t> per_trial;
    std::uint64_t seed = 0;
    int trials = 0;
    int k = 0;
    long height = 0;
    std::string confidence = "sampled";
    std::vector<std::string> warnings;

    bool operator==(const JetRankReport&) const = default;
};

/// Maximum jet rank over `trials` random points with numerators in [-height, height]
/// and denominators in [1, height]. Points giving a zero matrix are resampled.
JetRankReport generic_jet_rank(const JetChart& chart);
JetRankReport generic_jet_rank(const JetProbeSpec& spec);

struct InflectionEquations {
    std::size_t target_rank = 0;
    std::size_t minor_count = 0;
    std::vector<Polynomial> minors;  // nonzero minors, each divided by the content
    /// gcd of all minors, monic; 0 when every minor vanishes.
    Polynomial content = Polynomial(make_plain_ring({}));
    /// Variables dividing the content with their multiplicity.
    std::vector<std::pair<std::string, int>> monomial_factors;
    /// Content with the monomial factors removed (1 if none is left).
    Polynomial residual = Polynomial(make_plain_ring({}));
};

/// All r x r minors of the symbolic jet matrix of order spec.k. Throws
/// ResourceLimit when more than 10^5 minors would be needed, InvalidInput when
/// r exceeds the matrix size.
InflectionEquations inflection_equations(const JetChart& chart, std::size_t r);

struct ProductRankIdentity {
    std::size_t base_rank_k = 0;
    std::size_t base_rank_k_minus_1 = 0;
    std::size_t predicted = 0;  // fiber_dim * rank_{k-1}(Y) + rank_k(Y)
    std::size_t direct = 0;     // generic rank of the Segre product chart
    bool holds = false;
};

/// Segre product of the base chart with P^fiber_dim (affine chart 1, t1, ..., t_f).
JetProbeSpec segre_product(const JetProbeSpec& base, int fiber_dim);
ProductRankIdentity product_rank_identity(const JetProbeSpec& base, int fiber_dim);

// ---------------------------------------------------------------------------
// Charts used by the examples

/// P^a x P^b, coordinates (1, u1..ua) x (1, v1..vb).
JetProbeSpec segre_chart(int a, int b, int k = 2);
/// (P^1)^n with all square-free monomials in t1..tn.
JetProbeSpec p1_power_chart(int n, int k = 2);
/// P(T_P2) in P^7 from the incidence x . y = 0, one diagonal product dropped.
JetProbeSpec flag_chart(int k = 2);
/// Chart of the blown-up Bordiga scroll near a point of the exceptional divisor (variables x, y, w).
JetProbeSpec bordiga_chart(int k = 2);
/// P(O(1) + O(2)) over P2 in P8: (1, u1, u2, v, v u1, v u2, v u1^2, v u1 u2, v u2^2).
JetProbeSpec split_plane_scroll_chart(int k = 2);
/// Cubic surface scroll in P4: (1, u, v, v u, v u^2).
JetProbeSpec cubic_scroll_chart(int k = 2);
/// Veronese surface in P5.
JetProbeSpec veronese_chart(int k = 2);
/// Rational normal curve of degree M.
JetProbeSpec rational_normal_curve(int degree, int k = 2);

}  // namespace inflect
