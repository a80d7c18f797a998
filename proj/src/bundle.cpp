#include "inflect/bundle.hpp"

#include "inflect/errors.hpp"
#include "inflect/symmetric.hpp"

#include <functional>

namespace inflect {

FormalBundle::FormalBundle(int rank, GradedClass total_chern) : rank_(rank), total_(std::move(total_chern))
{
    if (rank_ < 1)
        throw InvalidInput("bundle rank must be positive");
    if (total_.constant_term() != 1)
        throw InvalidInput("total Chern class must have constant term 1");
}

FormalBundle FormalBundle::trivial(int rank, RingPtr ring, int truncation)
{
    return FormalBundle(rank, GradedClass::one(std::move(ring), truncation));
}

FormalBundle FormalBundle::generic(int rank, RingPtr ring, int truncation, const std::vector<std::string>& names)
{
    GradedClass total = GradedClass::one(ring, truncation);
    for (const auto& n : names)
        total += GradedClass::variable(ring, truncation, n);
    return FormalBundle(rank, std::move(total));
}

FormalBundle FormalBundle::line(const GradedClass& first_chern)
{
    return FormalBundle(1, GradedClass::one(first_chern.ring(), first_chern.truncation()) + first_chern);
}

FormalBundle dual(const FormalBundle& e)
{
    return FormalBundle(e.rank(), e.total_chern().scale_grading(-1));
}

FormalBundle direct_sum(const FormalBundle& a, const FormalBundle& b)
{
    return FormalBundle(a.rank() + b.rank(), a.total_chern() * b.total_chern());
}

FormalBundle tensor_line(const FormalBundle& e, const GradedClass& l, int sign)
{
    if (sign != 1 && sign != -1)
        throw InvalidInput("tensor_line sign must be +1 or -1");
    if (!l.is_zero() && (!l.is_homogeneous() || *l.degree() != 1))
        throw InvalidInput("tensor_line needs a homogeneous class of degree 1");
    const GradedClass twist = l * Rational(sign);
    const int r = e.rank();
    GradedClass total(e.total_chern().ring(), e.total_chern().truncation());
    std::vector<GradedClass> twist_pow{GradedClass::one(total.ring(), total.truncation())};
    for (int k = 1; k <= r; ++k)
        twist_pow.push_back(twist_pow.back() * twist);
    for (int k = 0; k <= r; ++k)
        for (int i = 0; i <= k; ++i) {
            const GradedClass ci = e.chern(i);
            if (ci.is_zero())
                continue;
            total += ci * twist_pow[k - i] * Rational(binomial(r - i, k - i));
        }
    return FormalBundle(r, std::move(total));
}

// ---------------------------------------------------------------------------
// Chern character route

namespace {

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Power sums p_1..p_T of the Chern roots via Newton's identities.
std::vector<GradedClass> power_sums(const FormalBundle& e)
{
    const GradedClass& c = e.total_chern();
    const int top = c.truncation();
    std::vector<GradedClass> cs, ps;
    for (int j = 0; j <= top; ++j)
        cs.push_back(c.part(j));
    ps.push_back(GradedClass::constant(c.ring(), top, e.rank()));
    for (int j = 1; j <= top; ++j) {
        GradedClass p = cs[j] * Rational(j % 2 ? j : -j);
        for (int i = 1; i < j; ++i)
            p += cs[i] * ps[j - i] * Rational(i % 2 ? 1 : -1);
        ps.push_back(std::move(p));
    }
    return ps;
}

}  // namespace

GradedClass chern_character(const FormalBundle& e)
{
    auto ps = power_sums(e);
    GradedClass ch = ps[0];
    for (std::size_t j = 1; j < ps.size(); ++j)
        ch += ps[j] * (Rational(1) / factorial(static_cast<int>(j)));
    return ch;
}

FormalBundle from_chern_character(const GradedClass& ch)
{
    const Rational rank = ch.constant_term();
    if (!is_integer(rank) || rank < 1)
        throw InvalidInput("Chern character must have a positive integral rank");
    const int top = ch.truncation();
    std::vector<GradedClass> ps{ch.part(0)};
    for (int j = 1; j <= top; ++j)
        ps.push_back(ch.part(j) * factorial(j));
    // j c_j = sum_{i=1..j} (-1)^{i-1} c_{j-i} p_i
    std::vector<GradedClass> cs{GradedClass::one(ch.ring(), top)};
    for (int j = 1; j <= top; ++j) {
        GradedClass acc(ch.ring(), top);
        for (int i = 1; i <= j; ++i)
            acc += cs[j - i] * ps[i] * Rational(i % 2 ? 1 : -1);
        cs.push_back(acc * (Rational(1) / j));
    }
    GradedClass total(ch.ring(), top);
    for (const auto& cj : cs)
        total += cj;
    return FormalBundle(static_cast<int>(rank.get_num().get_si()), std::move(total));
}

// ---------------------------------------------------------------------------
// Chern root route

namespace {

// Products over derived roots, truncated at `top`, reduced to elementary functions,
// then evaluated on the operands' Chern classes.
FormalBundle from_roots(SymmetricReducer& reducer, const std::vector<Polynomial>& derived_roots,
                        const std::vector<const FormalBundle*>& operands, int top)
{
    const RingPtr& roots = reducer.root_ring();
    Polynomial product(roots, 1);
    for (const auto& r : derived_roots)
        product = multiply_truncated(product, Polynomial(roots, 1) + r, top);
    const Polynomial reduced = reducer.reduce(product);

    const GradedClass& model = operands.front()->total_chern();
    std::vector<Polynomial> images;
    for (const auto* op : operands)
        for (int i = 1; i <= op->rank(); ++i)
            images.push_back(op->chern(i).polynomial());
    GradedClass total(reduced.substitute(images, model.ring()), top);
    return FormalBundle(static_cast<int>(derived_roots.size()), std::move(total));
}

void check_operands(const FormalBundle& a, const FormalBundle& b)
{
    if (!same_ring(a.total_chern().ring(), b.total_chern().ring()) ||
        a.total_chern().truncation() != b.total_chern().truncation())
        throw InvalidInput("bundles live in different graded rings");
}

}  // namespace

FormalBundle tensor(const FormalBundle& a, const FormalBundle& b, SplittingStrategy strategy)
{
    check_operands(a, b);
    if (a.rank() * b.rank() > kMaxDerivedRank)
        throw ResourceLimit("tensor product rank " + std::to_string(a.rank() * b.rank()) + " exceeds guard " +
                            std::to_string(kMaxDerivedRank));
    if (strategy == SplittingStrategy::chern_character)
        return from_chern_character(chern_character(a) * chern_character(b));

    SymmetricReducer reducer({a.rank(), b.rank()});
    std::vector<Polynomial> derived;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j)
            derived.push_back(reducer.root(0, i) + reducer.root(1, j));
    return from_roots(reducer, derived, {&a, &b}, a.total_chern().truncation());
}

FormalBundle sym_power(const FormalBundle& e, int k, SplittingStrategy strategy)
{
    if (k < 1)
        throw InvalidInput("symmetric power order must be positive");
    const Integer derived_rank = binomial(e.rank() + k - 1, k);
    if (derived_rank > kMaxDerivedRank)
        throw ResourceLimit("symmetric power rank " + derived_rank.get_str() + " exceeds guard " +
                            std::to_string(kMaxDerivedRank));
    if (k == 1)
        return e;

    if (strategy == SplittingStrategy::chern_character) {
        // ch(S^k E) = sum over partitions lambda of k of (1/z_lambda) prod_parts psi^part ch(E)
        const GradedClass ch = chern_character(e);
        GradedClass total(ch.ring(), ch.truncation());
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int remaining, int max_part) {
            if (remaining == 0) {
                GradedClass term = GradedClass::one(ch.ring(), ch.truncation());
                Rational z = 1;
                std::vector<int> mult(k + 1, 0);
                for (int p : parts) {
                    term *= ch.scale_grading(p);
                    z *= p;
                    ++mult[p];
                }
                for (int m : mult)
                    z *= factorial(m);
                total += term * (Rational(1) / z);
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
            }
        };
        rec(k, k);
        return from_chern_character(total);
    }

    SymmetricReducer reducer({e.rank()});
    std::vector<Polynomial> derived;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            Polynomial r(reducer.root_ring());
            for (int j : pick)
                r += reducer.root(0, j);
            derived.push_back(std::move(r));
            return;
        }
        for (int j = start; j < e.rank(); ++j) {
            pick[depth] = j;
            rec(j, depth + 1);
        }
    };
    rec(0, 0);
    return from_roots(reducer, derived, {&e}, e.total_chern().truncation());
}

}  // namespace inflect
