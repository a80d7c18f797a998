#include "inflect/scroll_model.hpp"

#include "inflect/base_data.hpp"
#include "inflect/errors.hpp"

#include <algorithm>

namespace inflect {

void ScrollSetup::validate() const
{
    if (m < 1 || m >= n)
        throw InvalidInput("scroll needs 1 <= m < n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    if (k < 1)
        throw InvalidInput("osculation order k must be positive");
}

Integer max_rank(int n, int m, int k)
{
    if (m < 1 || m > n || k < 1)
        throw InvalidInput("max_rank needs 1 <= m <= n and k >= 1");
    return Integer(n - m) * binomial(m + k - 1, k - 1) + binomial(m + k, k);
}

std::pair<Integer, Integer> derivative_count(int n, int m, int h)
{
    if (h == 0)
        return {1, 0};
    // order-h derivatives in the base variables, and order h-1 base
    // derivatives of each of the n-m fiber coordinates
    return {binomial(m - 1 + h, h), Integer(n - m) * binomial(m - 2 + h, h - 1)};
}

Codimension expected_codim(const ScrollSetup& setup)
{
    setup.validate();
    const Integer rk = max_rank(setup.n, setup.m, setup.k);
    Codimension c;
    c.ell = static_cast<long>(setup.N + 2 - rk.get_si());
    c.in_range = c.ell >= 1 && c.ell <= setup.n;
    return c;
}

// ---------------------------------------------------------------------------

namespace {

std::string indexed(const char* stem, int i)
{
    return stem + std::to_string(i);
}

}  // namespace

ScrollGeometry::ScrollGeometry(int n, int m) : n_(n), m_(m)
{
    ScrollSetup{n, m, 1, 0}.validate();
    const int r = fiber_rank();
    std::vector<Variable> base, total{{"L", 1}};
    for (int i = 1; i <= m; ++i) {
        base.push_back({indexed("c", i), i});
        total.push_back({indexed("C", i), i});
    }
    for (int i = 1; i <= r; ++i) {
        base.push_back({indexed("v", i), i});
        total.push_back({indexed("V", i), i});
    }
    WeightCap cap;
    cap.max_weight = m;
    for (std::size_t i = 1; i < total.size(); ++i)
        cap.variables.push_back(i);
    base_ = make_ring(std::move(base));
    total_ = make_ring(std::move(total), {cap});
}

GradedClass ScrollGeometry::tautological() const
{
    return GradedClass::variable(total_, n_, "L");
}

FormalBundle ScrollGeometry::tangent_base() const
{
    std::vector<std::string> names;
    for (int i = 1; i <= m_; ++i)
        names.push_back(indexed("C", i));
    return FormalBundle::generic(m_, total_, n_, names);
}

FormalBundle ScrollGeometry::bundle_v() const
{
    std::vector<std::string> names;
    for (int i = 1; i <= fiber_rank(); ++i)
        names.push_back(indexed("V", i));
    return FormalBundle::generic(fiber_rank(), total_, n_, names);
}

GradedClass ScrollGeometry::pullback(const GradedClass& on_base) const
{
    if (!same_ring(on_base.ring(), base_))
        throw InvalidInput("pullback expects a class on the base ring");
    std::vector<Polynomial> images;
    for (const auto& v : base_->variables()) {
        std::string name = v.name;
        name[0] = static_cast<char>(std::toupper(name[0]));
        images.push_back(Polynomial::variable(total_, name));
    }
    return GradedClass(on_base.polynomial().substitute(images, total_), n_);
}

GradedClass ScrollGeometry::chern_wu_reduce(const GradedClass& on_total) const
{
    if (!same_ring(on_total.ring(), total_) || on_total.truncation() != n_)
        throw InvalidInput("Chern-Wu reduction expects a class on the total space");
    const int r = fiber_rank();
    // L^r = sum_{i=1..r} (-1)^{i+1} V_i L^{r-i}
    Polynomial rule(total_);
    for (int i = 1; i <= r; ++i) {
        Exponents e(total_->size(), 0);
        e[0] = r - i;
        e[static_cast<std::size_t>(m_ + i)] = 1;
        rule.add_term(e, i % 2 ? 1 : -1);
    }

    Polynomial done(total_), pending = on_total.polynomial();
    while (!pending.is_zero()) {
        Polynomial next(total_);
        for (const auto& [e, c] : pending.terms()) {
            if (e[0] < r) {
                done.add_term(e, c);
                continue;
            }
            Exponents lower = e;
            lower[0] -= r;
            next += multiply_truncated(Polynomial::monomial(total_, lower, c), rule, n_);
        }
        pending = std::move(next);
    }
    return GradedClass(std::move(done), n_);
}

GradedClass ScrollGeometry::pushforward(const GradedClass& on_total) const
{
    const GradedClass reduced = chern_wu_reduce(on_total);
    const int r = fiber_rank();
    Polynomial out(base_);
    for (const auto& [e, c] : reduced.polynomial().terms()) {
        if (e[0] != r - 1)
            continue;
        out.add_term(Exponents(e.begin() + 1, e.end()), c);
    }
    return GradedClass(std::move(out), m_);
}

GradedClass ScrollGeometry::degree_class() const
{
    return pushforward(tautological().pow(static_cast<unsigned>(n_)));
}

// ---------------------------------------------------------------------------

namespace {

// c(E_k) computed in a ring truncated at `top` (<= n); only parts up to `top` are needed
// for a class of codimension `top`.
GradedClass e_k_product(const ScrollSetup& s, int top, SplittingStrategy strategy)
{
    const ScrollGeometry geo(s.n, s.m);
    const RingPtr& ring = geo.total_ring();
    auto cut = [&](const FormalBundle& b) { return FormalBundle(b.rank(), GradedClass(b.total_chern().polynomial(), top)); };
    const FormalBundle t = cut(geo.tangent_base());
    const FormalBundle v_dual = dual(cut(geo.bundle_v()));

    GradedClass total = GradedClass::one(ring, top);
    for (int i = 1; i <= s.k; ++i) {
        if (i == 1) {
            total *= v_dual.total_chern();
            continue;
        }
        total *= tensor(sym_power(t, i - 1, strategy), v_dual, strategy).total_chern();
    }
    const GradedClass l = GradedClass::variable(ring, top, "L");
    total *= tensor_line(sym_power(t, s.k, strategy), l, -1).total_chern();
    return GradedClass(total.polynomial(), s.n);
}

}  // namespace

GradedClass total_chern_E_k(const ScrollSetup& setup, SplittingStrategy strategy)
{
    setup.validate();
    return e_k_product(setup, setup.n, strategy);
}

InflectionClass inflection_class(const ScrollSetup& setup)
{
    setup.validate();
    const ScrollGeometry geo(setup.n, setup.m);
    InflectionClass out{setup, expected_codim(setup), geo.total_zero(), geo.total_zero(), {}};
    const long ell = out.codim.ell;
    if (!out.codim.in_range)
        out.warnings.push_back("N=" + std::to_string(setup.N) + " gives codimension " + std::to_string(ell) +
                               " outside 1.." + std::to_string(setup.n) + "; formula not asserted");
    if (ell < 0 || ell > setup.n)
        return out;
    if (ell == 0) {
        out.unreduced = GradedClass::one(geo.total_ring(), setup.n);
        out.reduced = out.unreduced;
        return out;
    }
    const int top = static_cast<int>(ell);
    const GradedClass inverse = series_inverse(e_k_product(setup, top, SplittingStrategy::chern_roots));
    out.unreduced = inverse.part(top);
    out.reduced = geo.chern_wu_reduce(out.unreduced);
    return out;
}

GradedClass degree_polynomial(const ScrollSetup& setup, ReductionOrder order)
{
    const InflectionClass cls = inflection_class(setup);
    const ScrollGeometry geo(setup.n, setup.m);
    const long ell = cls.codim.ell;
    if (ell < 0 || ell > setup.n)
        return geo.base_zero();
    const GradedClass lpow = geo.tautological().pow(static_cast<unsigned>(setup.n - ell));
    if (order == ReductionOrder::reduce_then_multiply)
        return geo.pushforward(cls.reduced * lpow);
    return geo.pushforward(cls.unreduced * lpow);
}

DegreeResult degree_of_inflection(const ScrollSetup& setup, const NumericalBaseData& data, ReductionOrder order)
{
    if (data.dimension() != setup.m)
        throw InvalidInput("base data has dimension " + std::to_string(data.dimension()) + ", scroll base has " +
                           std::to_string(setup.m));
    const InflectionClass cls = inflection_class(setup);
    DegreeResult out{degree_polynomial(setup, order), Polynomial(data.parameter_ring()), cls.warnings};
    out.value = data.evaluate(out.symbolic);

    const Polynomial d = data.evaluate(ScrollGeometry(setup.n, setup.m).degree_class());
    if (d.is_constant() && d.constant_term() <= 0)
        out.warnings.push_back("base data gives d = " + to_string(d.constant_term()) + ", not a genuine scroll");
    if (out.value.is_constant() && !is_integer(out.value.constant_term()))
        out.warnings.push_back("degree " + to_string(out.value.constant_term()) + " is not an integer");
    return out;
}

}  // namespace inflect
