#pragma once

#include "inflect/bundle.hpp"
#include "inflect/graded.hpp"

#include <string>
#include <vector>

namespace inflect {

class NumericalBaseData;

/// Discrete data of a scroll X = P(V) -> Y in P^N: dim X = n, dim Y = m,
/// osculation order k. V has rank n - m + 1.
struct ScrollSetup {
    int n = 0;
    int m = 0;
    int k = 0;
    int N = 0;

    /// Throws InvalidInput unless 1 <= m < n and k >= 1.
    void validate() const;
    int fiber_rank() const noexcept { return n - m + 1; }
};

/// Upper bound for the generic rank of the k-th jet map of a scroll:
/// (n - m) binom(m + k - 1, k - 1) + binom(m + k, k).
Integer max_rank(int n, int m, int k);

/// Number of order-h derivatives that survive on a scroll chart, split as
/// (pure base derivatives, mixed base/fiber derivatives).
std::pair<Integer, Integer> derivative_count(int n, int m, int h);

struct Codimension {
    long ell = 0;
    /// r_k - 1 <= N <= r_k + n - 2, equivalently 1 <= ell <= n.
    bool in_range = false;
};

Codimension expected_codim(const ScrollSetup& setup);

/// Graded rings and the maps between base and total space of a scroll.
///
/// Base ring: c1..cm (Chern classes of T_Y), v1..vr (Chern classes of V), truncated at m.
/// Total ring: L, C1..Cm, V1..Vr truncated at n, with the pulled-back part capped at weight m.
class ScrollGeometry {
public:
    ScrollGeometry(int n, int m);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int fiber_rank() const noexcept { return n_ - m_ + 1; }

    const RingPtr& base_ring() const noexcept { return base_; }
    const RingPtr& total_ring() const noexcept { return total_; }

    GradedClass total_zero() const { return GradedClass(total_, n_); }
    GradedClass base_zero() const { return GradedClass(base_, m_); }
    GradedClass total_class(std::string_view text) const { return GradedClass::parse(total_, n_, text); }
    GradedClass base_class(std::string_view text) const { return GradedClass::parse(base_, m_, text); }

    GradedClass tautological() const;  // L
    FormalBundle tangent_base() const;  // pi^* T_Y
    FormalBundle bundle_v() const;      // pi^* V

    GradedClass pullback(const GradedClass& on_base) const;
    /// Rewrites L^r via sum_{i=1..r} (-1)^{i+1} V_i L^{r-i} until every L-power is below r.
    GradedClass chern_wu_reduce(const GradedClass& on_total) const;
    /// Fiber integration: coefficient of L^{r-1} after reduction, with C_i -> c_i, V_i -> v_i.
    GradedClass pushforward(const GradedClass& on_total) const;

    /// d = pi_*(L^n), the degree of X as a class on the base.
    GradedClass degree_class() const;

private:
    int n_;
    int m_;
    RingPtr base_;
    RingPtr total_;
};

/// c(E_k) = prod_{i=1..k} pi^*c(S^{i-1}T_Y (x) V^dual) * c(pi^*S^k T_Y (x) L^{-1}).
GradedClass total_chern_E_k(const ScrollSetup& setup,
                            SplittingStrategy strategy = SplittingStrategy::chern_roots);

struct InflectionClass {
    ScrollSetup setup;
    Codimension codim;
    GradedClass unreduced;
    GradedClass reduced;
    /// Set when the setup is outside the range where the class formula is asserted.
    std::vector<std::string> warnings;
};

/// Degree-ell part of the inverse of c(E_k). The formula presumes that the
/// inflectional locus has the expected codimension (or is empty); that
/// geometric hypothesis is the caller's obligation and is not checked.
InflectionClass inflection_class(const ScrollSetup& setup);

struct DegreeResult {
    /// pi_*(class . L^{n-ell}) as a homogeneous class of weight m on the base.
    GradedClass symbolic;
    /// The symbolic class evaluated on base data (constant for numeric data).
    Polynomial value;
    std::vector<std::string> warnings;
};

enum class ReductionOrder { reduce_then_multiply, multiply_then_reduce };

/// Symbolic degree on the base (no numerical data).
GradedClass degree_polynomial(const ScrollSetup& setup,
                              ReductionOrder order = ReductionOrder::multiply_then_reduce);

DegreeResult degree_of_inflection(const ScrollSetup& setup, const NumericalBaseData& data,
                                  ReductionOrder order = ReductionOrder::multiply_then_reduce);

}  // namespace inflect
