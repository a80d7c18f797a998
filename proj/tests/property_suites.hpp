#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.
// Each suite draws `cases` instances from a seeded generator and reports the
// first counterexample.

#include "inflect/bundle.hpp"
#include "inflect/jet_probe.hpp"
#include "inflect/rational.hpp"
#include "inflect/scroll_model.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace inflect::props {

struct SuiteResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool pass() const { return cases > 0 && failures == 0; }
    void record(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
};

inline int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937_64& rng)
{
    int num = 0;
    while (num == 0)
        num = uniform(rng, -5, 5);
    Rational q(num, uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

/// Sum of `terms` random monomials of positive weight up to the truncation.
inline GradedClass random_class(const RingPtr& ring, int truncation, std::mt19937_64& rng, int terms)
{
    GradedClass out(ring, truncation);
    const auto& vars = ring->variables();
    for (int t = 0; t < terms; ++t) {
        GradedClass mono = GradedClass::one(ring, truncation);
        int weight = 0;
        const int target = uniform(rng, 1, truncation);
        while (weight < target) {
            std::vector<const Variable*> fits;
            for (const auto& v : vars)
                if (weight + v.weight <= truncation)
                    fits.push_back(&v);
            if (fits.empty())
                break;
            const Variable& v = *fits[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fits.size()) - 1))];
            mono *= GradedClass::variable(ring, truncation, v.name);
            weight += v.weight;
        }
        if (weight == 0)
            continue;
        out += mono * small_rational(rng);
    }
    return out;
}

/// x * x^{-1} = 1 and (x^{-1})^{-1} = x for classes with constant term 1.
inline SuiteResult series_inverse_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (int c = 0; c < cases; ++c) {
        const int nvars = uniform(rng, 1, 3);
        std::vector<Variable> vars;
        for (int i = 0; i < nvars; ++i)
            vars.push_back({"x" + std::to_string(i + 1), uniform(rng, 1, 3)});
        const RingPtr ring = make_ring(vars);
        const int truncation = uniform(rng, 1, 6);
        const GradedClass x = GradedClass::one(ring, truncation) + random_class(ring, truncation, rng, uniform(rng, 1, 4));
        const GradedClass inv = series_inverse(x);
        result.record(x * inv == GradedClass::one(ring, truncation) && series_inverse(inv) == x,
                      "inverse of " + x.to_string());
    }
    return result;
}

/// Bundles built from explicit Chern roots (random integral linear forms in three
/// weight-one classes): sums, duals, twists, tensor products and symmetric powers
/// agree with the products over the corresponding roots, for both strategies.
inline SuiteResult root_consistency_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult result;
    const RingPtr ring = make_plain_ring({"u", "v", "w"});
    for (int c = 0; c < cases; ++c) {
        const int truncation = uniform(rng, 1, 3);
        const auto form = [&] {
            GradedClass l(ring, truncation);
            for (const char* name : {"u", "v", "w"})
                l += GradedClass::variable(ring, truncation, name) * Rational(uniform(rng, -2, 2));
            return l;
        };
        const GradedClass one = GradedClass::one(ring, truncation);
        const auto roots = [&](int rank) {
            std::vector<GradedClass> r;
            for (int i = 0; i < rank; ++i)
                r.push_back(form());
            return r;
        };
        const auto product = [&](const std::vector<GradedClass>& rs) {
            GradedClass p = one;
            for (const auto& x : rs)
                p *= one + x;
            return p;
        };
        const auto xs = roots(uniform(rng, 1, 3)), ys = roots(uniform(rng, 1, 3));
        const FormalBundle a(static_cast<int>(xs.size()), product(xs)), b(static_cast<int>(ys.size()), product(ys));
        const GradedClass l = form();

        std::vector<GradedClass> sums, duals, twists;
        for (const auto& x : xs) {
            duals.push_back(-x);
            twists.push_back(x + l);
            for (const auto& y : ys)
                sums.push_back(x + y);
        }
        std::vector<GradedClass> sym;
        const int k = uniform(rng, 1, 3);
        // multisets of size k from the roots of a, as non-decreasing index sequences
        std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
        while (true) {
            GradedClass s(ring, truncation);
            for (auto i : idx)
                s += xs[i];
            sym.push_back(s);
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == xs.size() - 1)
                --pos;
            if (pos < 0)
                break;
            const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
            for (int q = pos; q < k; ++q)
                idx[static_cast<std::size_t>(q)] = next;
        }

        const SplittingStrategy strategy =
            uniform(rng, 0, 1) ? SplittingStrategy::chern_roots : SplittingStrategy::chern_character;
        bool ok = direct_sum(a, b).total_chern() == a.total_chern() * b.total_chern();
        ok = ok && dual(a).total_chern() == product(duals);
        ok = ok && tensor_line(a, l).total_chern() == product(twists);
        const FormalBundle t = tensor(a, b, strategy);
        ok = ok && t.rank() == static_cast<int>(sums.size()) && t.total_chern() == product(sums);
        const FormalBundle s = sym_power(a, k, strategy);
        ok = ok && s.rank() == static_cast<int>(sym.size()) && s.total_chern() == product(sym);
        ok = ok && from_chern_character(chern_character(a)) == a;
        result.record(ok, "ranks " + std::to_string(xs.size()) + "," + std::to_string(ys.size()) + " k=" +
                              std::to_string(k) + " c(A)=" + a.total_chern().to_string());
    }
    return result;
}

inline ScrollGeometry random_geometry(std::mt19937_64& rng)
{
    const int n = uniform(rng, 2, 5);
    return ScrollGeometry(n, uniform(rng, 1, n - 1));
}

/// Reduction is idempotent, leaves L-powers below the fiber rank, and does not
/// change the pushforward.
inline SuiteResult chern_wu_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (int c = 0; c < cases; ++c) {
        const ScrollGeometry geo = random_geometry(rng);
        const int r = geo.fiber_rank();
        const GradedClass x = random_class(geo.total_ring(), geo.n(), rng, uniform(rng, 1, 5)) +
                              geo.tautological().pow(static_cast<unsigned>(uniform(rng, r, geo.n()))) *
                                  small_rational(rng);
        const GradedClass once = geo.chern_wu_reduce(x);
        const auto L = geo.total_ring()->find("L");
        const bool low = once.polynomial().degree_in(*L) < r;
        result.record(low && geo.chern_wu_reduce(once) == once && geo.pushforward(once) == geo.pushforward(x),
                      "n=" + std::to_string(geo.n()) + " m=" + std::to_string(geo.m()) + " x=" + x.to_string());
    }
    return result;
}

/// pi_*(pi^*a . b) = a . pi_*(b).
inline SuiteResult projection_formula_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (int c = 0; c < cases; ++c) {
        const ScrollGeometry geo = random_geometry(rng);
        const GradedClass a = GradedClass::one(geo.base_ring(), geo.m()) * small_rational(rng) +
                              random_class(geo.base_ring(), geo.m(), rng, uniform(rng, 1, 3));
        const GradedClass b = random_class(geo.total_ring(), geo.n(), rng, uniform(rng, 1, 4));
        result.record(geo.pushforward(geo.pullback(a) * b) == a * geo.pushforward(b),
                      "a=" + a.to_string() + " b=" + b.to_string());
    }
    return result;
}

inline std::string random_poly_text(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_degree)
{
    std::string text;
    const int terms = uniform(rng, 1, 3);
    for (int t = 0; t < terms; ++t) {
        int coefficient = 0;
        while (coefficient == 0)
            coefficient = uniform(rng, -3, 3);
        std::string term = std::to_string(coefficient);
        const int degree = uniform(rng, 0, max_degree);
        for (int d = 0; d < degree; ++d)
            term += "*" + vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
        text += (text.empty() ? "" : " + ") + term;
    }
    return text;
}

/// Random scroll charts x(u) + sum_i v_i y_i(u): the sampled rank stays below the
/// bound r_k and the column count, grows with k, the jet matrix has binom(n+k, k)
/// rows, and rows of order >= 2 in the fiber variables alone vanish.
inline SuiteResult jet_rank_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (int c = 0; c < cases; ++c) {
        const int m = uniform(rng, 1, 2), f = uniform(rng, 1, 2), n = m + f;
        JetProbeSpec spec;
        std::vector<std::string> base;
        for (int i = 1; i <= m; ++i)
            base.push_back("u" + std::to_string(i));
        spec.variables = base;
        for (int i = 1; i <= f; ++i)
            spec.variables.push_back("v" + std::to_string(i));
        spec.coordinates.push_back("1");
        for (int j = uniform(rng, 1, 4); j > 0; --j)
            spec.coordinates.push_back(random_poly_text(rng, base, 3));
        for (int i = 1; i <= f; ++i)
            for (int j = uniform(rng, 1, 3); j > 0; --j)
                spec.coordinates.push_back("v" + std::to_string(i) + "*(" + random_poly_text(rng, base, 2) + ")");
        spec.trials = 2;
        spec.seed = rng();
        const JetChart chart(spec);
        const int k = uniform(rng, 1, 2);
        bool ok = true;
        std::size_t previous = 0;
        for (int order = k; order <= k + 1; ++order) {
            JetProbeSpec s = spec;
            s.k = order;
            const std::size_t rank = generic_jet_rank(JetChart(s)).rank;
            ok = ok && Integer(static_cast<long>(rank)) <= max_rank(n, m, order);
            ok = ok && rank <= spec.coordinates.size() && rank >= previous;
            previous = rank;
        }
        const auto idx = chart.multi_indices(k + 1);
        ok = ok && Integer(static_cast<long>(idx.size())) == binomial(n + k + 1, k + 1);
        std::vector<Rational> point;
        for (int i = 0; i < n; ++i)
            point.push_back(small_rational(rng));
        const RationalMatrix jm = chart.jet_matrix(point, k + 1);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            int base_order = 0, fiber_order = 0;
            for (int i = 0; i < n; ++i)
                (i < m ? base_order : fiber_order) += idx[r][static_cast<std::size_t>(i)];
            if (base_order == 0 && fiber_order >= 2)
                for (const auto& entry : jm[r])
                    ok = ok && entry == 0;
        }
        std::string coords;
        for (const auto& x : spec.coordinates)
            coords += x + "; ";
        result.record(ok, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " coordinates " + coords);
    }
    return result;
}

}  // namespace inflect::props
