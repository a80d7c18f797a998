#include "inflect/polynomial.hpp"

#include "inflect/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace inflect {

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<Variable> variables, std::vector<WeightCap> caps)
    : variables_(std::move(variables)), caps_(std::move(caps))
{
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].weight < 1)
            throw InvalidInput("variable '" + variables_[i].name + "' must have weight >= 1");
        if (variables_[i].name.empty())
            throw InvalidInput("variable names must be non-empty");
        for (std::size_t j = 0; j < i; ++j)
            if (variables_[j].name == variables_[i].name)
                throw InvalidInput("duplicate variable name '" + variables_[i].name + "'");
    }
    for (const auto& cap : caps_)
        for (auto v : cap.variables)
            if (v >= variables_.size())
                throw InvalidInput("weight cap refers to a missing variable");
}

std::optional<std::size_t> Ring::find(std::string_view name) const
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw InvalidInput("unknown variable '" + std::string(name) + "' in ring [" + descriptor() + "]");
}

std::string Ring::descriptor() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i)
            out << ' ';
        out << variables_[i].name << ':' << variables_[i].weight;
    }
    for (const auto& cap : caps_) {
        out << " | cap{";
        for (std::size_t j = 0; j < cap.variables.size(); ++j)
            out << (j ? "," : "") << variables_[cap.variables[j]].name;
        out << "}<=" << cap.max_weight;
    }
    return out.str();
}

RingPtr make_ring(std::vector<Variable> variables, std::vector<WeightCap> caps)
{
    return std::make_shared<const Ring>(std::move(variables), std::move(caps));
}

RingPtr make_plain_ring(const std::vector<std::string>& names)
{
    std::vector<Variable> vars;
    vars.reserve(names.size());
    for (const auto& n : names)
        vars.push_back({n, 1});
    return make_ring(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

bool satisfies_caps(const Ring& ring, const Exponents& e)
{
    for (const auto& cap : ring.caps()) {
        int w = 0;
        for (auto v : cap.variables)
            w += e[v] * ring[v].weight;
        if (w > cap.max_weight)
            return false;
    }
    return true;
}

std::string monomial_to_string(const Ring& ring, const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring[i].name;
        if (e[i] > 1)
            out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw InvalidInput("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : Polynomial(std::move(ring))
{
    if (constant != 0)
        terms_.emplace(Exponents(ring_->size(), 0), constant);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name)
{
    Exponents e(ring->size(), 0);
    e[ring->index(name)] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exponents, const Rational& coefficient)
{
    Polynomial p(std::move(ring));
    if (exponents.size() != p.ring_->size())
        throw InvalidInput("exponent vector length does not match ring");
    p.add_term(exponents, coefficient);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && weight_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const
{
    return coefficient(Exponents(ring_->size(), 0));
}

Rational Polynomial::coefficient(const Exponents& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::weight_of(const Exponents& e) const
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        w += e[i] * (*ring_)[i].weight;
    return w;
}

std::optional<int> Polynomial::weighted_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, weight_of(e));
    return best;
}

int Polynomial::total_degree() const
{
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e)
            d += x;
        best = std::max(best, d);
    }
    return best;
}

int Polynomial::degree_in(std::size_t var) const
{
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, e[var]);
    return best;
}

bool Polynomial::is_homogeneous() const
{
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
        int x = weight_of(e);
        if (w && *w != x)
            return false;
        w = x;
    }
    return true;
}

Polynomial Polynomial::homogeneous_part(int weight) const
{
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_)
        if (weight_of(e) == weight)
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

Polynomial Polynomial::truncated(int max_weight) const
{
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_)
        if (weight_of(e) <= max_weight && satisfies_caps(*ring_, e))
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (inserted)
        it->second.canonicalize();  // callers may pass mpq_class(p, q) unreduced
    else {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (!same_ring(ring_, other.ring_))
        throw InvalidInput("cannot add polynomials from different rings");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (!same_ring(ring_, other.ring_))
        throw InvalidInput("cannot subtract polynomials from different rings");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

namespace {

Polynomial multiply_impl(const Polynomial& a, const Polynomial& b, std::optional<int> max_weight)
{
    if (!same_ring(a.ring(), b.ring()))
        throw InvalidInput("cannot multiply polynomials from different rings");
    const Ring& ring = *a.ring();
    const bool check_caps = max_weight.has_value() && !ring.caps().empty();
    Polynomial out(a.ring());
    Exponents e(ring.size());
    for (const auto& [ea, ca] : a.terms()) {
        const int wa = a.weight_of(ea);
        if (max_weight && wa > *max_weight)
            continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (max_weight && wa + b.weight_of(eb) > *max_weight)
                continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            if (check_caps && !satisfies_caps(ring, e))
                continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    return multiply_impl(a, b, std::nullopt);
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_weight)
{
    return multiply_impl(a, b, max_weight);
}

bool Polynomial::operator==(const Polynomial& other) const
{
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(ring_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1u;
        if (exponent)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != ring_->size())
        throw InvalidInput("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= point[i];
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const RingPtr& target) const
{
    if (images.size() != ring_->size())
        throw InvalidInput("substitution needs one image per variable");
    // Cache powers of each image.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!same_ring(images[i].ring(), target))
            throw InvalidInput("substitution images must live in the target ring");
        powers[i].push_back(Polynomial(target, 1));
    }
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(powers[i].back() * images[i]);
            t = t * powers[i][e[i]];
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const
{
    std::vector<Polynomial> images;
    images.reserve(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i)
        images.push_back(i == var ? value : Polynomial::variable(ring_, (*ring_)[i].name));
    return substitute(images, ring_);
}

Polynomial Polynomial::rebase(const RingPtr& target) const
{
    // only variables that actually occur need a counterpart in the target
    std::vector<std::optional<std::size_t>> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i)
        map[i] = target->find((*ring_)[i].name);
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Exponents f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!map[i])
                throw InvalidInput("variable " + (*ring_)[i].name + " is not part of the target ring");
            f[*map[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<const Exponents*, const Rational*>> order;
    order.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        order.emplace_back(&e, &c);
    std::stable_sort(order.begin(), order.end(), [this](const auto& x, const auto& y) {
        int wx = weight_of(*x.first), wy = weight_of(*y.first);
        if (wx != wy)
            return wx < wy;
        return *x.first > *y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : order) {
        Rational mag = abs(*c);
        const bool neg = sgn(*c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const bool unit_monomial = weight_of(*e) == 0 && std::all_of(e->begin(), e->end(), [](int x) { return x == 0; });
        if (unit_monomial) {
            out += mag.get_str();
        } else {
            if (mag != 1)
                out += mag.get_str() + "*";
            out += monomial_to_string(*ring_, *e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

    Polynomial run()
    {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                           std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor()
    {
        skip_space();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Polynomial expression()
    {
        skip_space();
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                Polynomial d = power();
                if (!d.is_constant() || d.is_zero())
                    fail("division only by non-zero constants");
                acc *= Rational(1) / d.constant_term();
            } else if (starts_factor()) {
                acc = acc * power();  // implicit product, e.g. "3L"
            } else {
                return acc;
            }
        }
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Polynomial(ring_, Rational(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            if (!ring_->find(name))
                fail("unknown variable '" + std::string(name) + "'");
            return Polynomial::variable(ring_, name);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text)
{
    return Parser(std::move(ring), text).run();
}

}  // namespace inflect
