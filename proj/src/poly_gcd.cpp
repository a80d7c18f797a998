#include "inflect/poly_gcd.hpp"

#include "inflect/errors.hpp"

#include <algorithm>
#include <random>

namespace inflect {

namespace {

const std::pair<const Exponents, Rational>& leading(const Polynomial& f)
{
    return *f.terms().rbegin();
}

bool uses(const Polynomial& f, std::size_t var)
{
    return f.degree_in(var) > 0;
}

// Coefficients of f as a polynomial in `var`, keyed by the power of `var`.
std::map<int, Polynomial> coefficients_in(const Polynomial& f, std::size_t var)
{
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[var] = 0;
        out.try_emplace(e[var], f.ring()).first->second.add_term(rest, c);
    }
    return out;
}

Polynomial shifted(const Polynomial& f, std::size_t var, int power)
{
    Polynomial out(f.ring());
    for (const auto& [e, c] : f.terms()) {
        Exponents s = e;
        s[var] += power;
        out.add_term(s, c);
    }
    return out;
}

// --- univariate helpers over Q, coefficient i multiplies t^i ---

using Univariate = std::vector<Rational>;

void trim(Univariate& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Univariate uni_mod(Univariate a, const Univariate& b)
{
    while (a.size() >= b.size()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::size_t uni_gcd_degree(Univariate a, Univariate b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

Univariate specialize(const Polynomial& f, std::size_t var, const std::vector<Rational>& point)
{
    Univariate out(static_cast<std::size_t>(f.degree_in(var)) + 1);
    for (const auto& [e, c] : f.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == var)
                continue;
            for (int k = 0; k < e[i]; ++k)
                v *= point[i];
        }
        out[static_cast<std::size_t>(e[var])] += v;
    }
    trim(out);
    return out;
}

// True when gcd(f, g) is certainly constant: for every shared variable there is a
// specialization of the others keeping the degree of f whose univariate gcd is 1.
bool certainly_coprime(const Polynomial& f, const Polynomial& g)
{
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(2, 997);
    const std::size_t n = f.ring()->size();
    for (std::size_t var = 0; var < n; ++var) {
        if (!uses(f, var) || !uses(g, var))
            continue;
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            std::vector<Rational> point(n);
            for (auto& p : point)
                p = pick(rng);
            const Univariate fs = specialize(f, var, point);
            if (static_cast<int>(fs.size()) - 1 != f.degree_in(var))
                continue;
            if (uni_gcd_degree(fs, specialize(g, var, point)) != 0)
                return false;
            certified = true;
        }
        if (!certified)
            return false;
    }
    return true;
}

Polynomial one_like(const Polynomial& f)
{
    return Polynomial(f.ring(), 1);
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var)
{
    const int db = b.degree_in(var);
    const Polynomial lb = coefficients_in(b, var).rbegin()->second;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        const Polynomial la = coefficients_in(a, var).rbegin()->second;
        a = lb * a - shifted(la * b, var, da - db);
    }
    return a;
}

Polynomial content_in(const Polynomial& f, std::size_t var)
{
    std::vector<Polynomial> coeffs;
    for (auto& [power, c] : coefficients_in(f, var))
        coeffs.push_back(std::move(c));
    return gcd(coeffs);
}

Polynomial primitive_in(const Polynomial& f, std::size_t var)
{
    return *divide_exact(f, content_in(f, var));
}

// gcd of two polynomials without monomial factors.
Polynomial gcd_reduced(const Polynomial& f, const Polynomial& g)
{
    if (f.is_constant() || g.is_constant())
        return one_like(f);
    const std::size_t n = f.ring()->size();
    // A variable present in only one argument cannot occur in the gcd.
    for (std::size_t var = 0; var < n; ++var) {
        const bool in_f = uses(f, var), in_g = uses(g, var);
        if (in_f == in_g)
            continue;
        std::vector<Polynomial> list{in_f ? g : f};
        for (auto& [power, c] : coefficients_in(in_f ? f : g, var))
            list.push_back(std::move(c));
        return gcd(list);
    }
    if (certainly_coprime(f, g))
        return one_like(f);

    std::size_t var = 0;
    while (!uses(f, var))
        ++var;
    const Polynomial cf = content_in(f, var), cg = content_in(g, var);
    const Polynomial c = gcd(cf, cg);
    Polynomial a = *divide_exact(f, cf), b = *divide_exact(g, cg);
    if (a.degree_in(var) < b.degree_in(var))
        std::swap(a, b);
    while (true) {
        const Polynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero())
            return make_monic(c * b);
        if (r.degree_in(var) == 0)
            return make_monic(c);
        a = std::move(b);
        b = primitive_in(r, var);
    }
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw InvalidInput("division by the zero polynomial");
    if (!same_ring(f.ring(), g.ring()))
        throw InvalidInput("divide_exact: polynomials from different rings");
    Polynomial q(f.ring()), r = f;
    const auto& [eg, cg] = leading(g);
    while (!r.is_zero()) {
        const auto [er, cr] = leading(r);
        Exponents e(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            e[i] = er[i] - eg[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        const Rational c = cr / cg;
        q.add_term(e, c);
        for (const auto& [et, ct] : g.terms()) {
            Exponents s = et;
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += e[i];
            r.add_term(s, -c * ct);
        }
    }
    return q;
}

Polynomial monomial_content(const Polynomial& f)
{
    if (f.is_zero())
        return one_like(f);
    Exponents low = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            low[i] = std::min(low[i], e[i]);
    return Polynomial::monomial(f.ring(), low, 1);
}

Polynomial make_monic(const Polynomial& f)
{
    if (f.is_zero())
        return f;
    return f * (1 / leading(f).second);
}

Polynomial gcd(const Polynomial& f, const Polynomial& g)
{
    if (!same_ring(f.ring(), g.ring()))
        throw InvalidInput("gcd: polynomials from different rings");
    if (f.is_zero())
        return make_monic(g);
    if (g.is_zero())
        return make_monic(f);
    const Polynomial mf = monomial_content(f), mg = monomial_content(g);
    Exponents m = mf.terms().begin()->first;
    const Exponents& other = mg.terms().begin()->first;
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = std::min(m[i], other[i]);
    const Polynomial common = Polynomial::monomial(f.ring(), m, 1);
    return make_monic(common * gcd_reduced(*divide_exact(f, mf), *divide_exact(g, mg)));
}

Polynomial gcd(const std::vector<Polynomial>& list)
{
    if (list.empty())
        throw InvalidInput("gcd of an empty list");
    // small polynomials first: the running gcd shrinks faster
    std::vector<const Polynomial*> order;
    for (const auto& p : list)
        order.push_back(&p);
    std::stable_sort(order.begin(), order.end(),
                     [](const Polynomial* a, const Polynomial* b) { return a->term_count() < b->term_count(); });
    Polynomial g(list.front().ring());
    for (const Polynomial* p : order) {
        g = gcd(g, *p);
        if (g.is_constant() && !g.is_zero())
            break;
    }
    return g;
}

}  // namespace inflect
