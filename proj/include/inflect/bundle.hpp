#pragma once

#include "inflect/graded.hpp"

#include <string>
#include <vector>

namespace inflect {

/// Largest derived rank the splitting-principle operations accept.
inline constexpr int kMaxDerivedRank = 64;

/// A vector bundle known only through its rank and total Chern class.
class FormalBundle {
public:
    /// Throws InvalidInput unless rank >= 1 and the constant term is 1.
    FormalBundle(int rank, GradedClass total_chern);

    static FormalBundle trivial(int rank, RingPtr ring, int truncation);
    /// Bundle whose i-th Chern class is the ring variable names[i-1].
    static FormalBundle generic(int rank, RingPtr ring, int truncation, const std::vector<std::string>& names);
    static FormalBundle line(const GradedClass& first_chern);

    int rank() const noexcept { return rank_; }
    const GradedClass& total_chern() const noexcept { return total_; }
    GradedClass chern(int i) const { return total_.part(i); }

    bool operator==(const FormalBundle&) const = default;

private:
    int rank_;
    GradedClass total_;
};

/// How Chern classes of tensor products and symmetric powers are obtained.
enum class SplittingStrategy {
    /// Expand in formal Chern roots, reduce the symmetric result to elementary functions.
    chern_roots,
    /// Route through the Chern character (Newton identities and Adams operations).
    chern_character,
};

FormalBundle dual(const FormalBundle& e);
FormalBundle direct_sum(const FormalBundle& a, const FormalBundle& b);

/// e tensor (sign * l) for a line with first Chern class l (homogeneous of weight 1).
FormalBundle tensor_line(const FormalBundle& e, const GradedClass& l, int sign = 1);

FormalBundle tensor(const FormalBundle& a, const FormalBundle& b,
                    SplittingStrategy strategy = SplittingStrategy::chern_roots);

FormalBundle sym_power(const FormalBundle& e, int k,
                       SplittingStrategy strategy = SplittingStrategy::chern_roots);

/// rank + sum_j p_j / j! with p_j the power sums of the Chern roots.
GradedClass chern_character(const FormalBundle& e);
FormalBundle from_chern_character(const GradedClass& ch);

}  // namespace inflect
