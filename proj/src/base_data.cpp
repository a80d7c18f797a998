#include "inflect/base_data.hpp"

#include "inflect/errors.hpp"

#include <functional>

namespace inflect {

namespace {

RingPtr key_ring_for(int m)
{
    std::vector<Variable> vars;
    for (int i = 1; i <= m; ++i)
        vars.push_back({"c" + std::to_string(i), i});
    for (int i = 1; i <= m; ++i)
        vars.push_back({"v" + std::to_string(i), i});
    return make_ring(std::move(vars));
}

// Exponent vectors of weight exactly `target` in the given ring.
std::vector<Exponents> monomials_of_weight(const Ring& ring, int target)
{
    std::vector<Exponents> out;
    Exponents e(ring.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == ring.size()) {
            if (remaining == 0)
                out.push_back(e);
            return;
        }
        for (int a = 0; a * ring[i].weight <= remaining; ++a) {
            e[i] = a;
            rec(i + 1, remaining - a * ring[i].weight);
        }
        e[i] = 0;
    };
    rec(0, target);
    return out;
}

}  // namespace

NumericalBaseData::NumericalBaseData(int dimension, std::vector<std::string> parameters) : dimension_(dimension)
{
    if (dimension < 1)
        throw InvalidInput("base dimension must be positive");
    params_ = make_plain_ring(parameters);
    keys_ = key_ring_for(dimension);
}

bool NumericalBaseData::is_numeric() const
{
    for (const auto& [key, value] : values_)
        if (!value.is_constant())
            return false;
    return true;
}

std::string NumericalBaseData::canonical_key(std::string_view monomial) const
{
    const Polynomial p = Polynomial::parse(keys_, monomial);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw InvalidInput("'" + std::string(monomial) + "' is not a monic monomial");
    const Exponents& e = p.terms().begin()->first;
    if (p.weight_of(e) != dimension_)
        throw InvalidInput("monomial '" + std::string(monomial) + "' does not have weight " +
                           std::to_string(dimension_));
    return monomial_to_string(*keys_, e);
}

void NumericalBaseData::set(std::string_view monomial, const Polynomial& value)
{
    values_.insert_or_assign(canonical_key(monomial), value.rebase(params_));
}

void NumericalBaseData::set(std::string_view monomial, const Rational& value)
{
    set(monomial, Polynomial(params_, value));
}

void NumericalBaseData::set(std::string_view monomial, std::string_view value)
{
    set(monomial, Polynomial::parse(params_, value));
}

std::optional<Polynomial> NumericalBaseData::get(std::string_view monomial) const
{
    auto it = values_.find(canonical_key(monomial));
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

Polynomial NumericalBaseData::evaluate(const GradedClass& on_base) const
{
    return evaluate(on_base.polynomial());
}

Polynomial NumericalBaseData::evaluate(const Polynomial& on_base) const
{
    const Ring& ring = *on_base.ring();
    Polynomial total(params_);
    std::vector<std::string> missing;
    for (const auto& [e, c] : on_base.terms()) {
        if (on_base.weight_of(e) != dimension_)
            continue;
        Exponents k(keys_->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            auto at = keys_->find(ring[i].name);
            if (!at)
                throw InvalidInput("base class uses unknown symbol " + ring[i].name);
            k[*at] += e[i];
        }
        const std::string key = monomial_to_string(*keys_, k);
        auto it = values_.find(key);
        if (it == values_.end()) {
            missing.push_back(key);
            continue;
        }
        total += it->second * c;
    }
    if (!missing.empty())
        throw IncompleteData(std::move(missing));
    return total;
}

NumericalBaseData NumericalBaseData::specialize(const std::map<std::string, Rational>& values) const
{
    std::vector<std::string> keep;
    for (const auto& v : params_->variables())
        if (!values.count(v.name))
            keep.push_back(v.name);
    NumericalBaseData out(dimension_, keep);
    std::vector<Polynomial> images;
    for (const auto& v : params_->variables()) {
        auto it = values.find(v.name);
        images.push_back(it != values.end() ? Polynomial(out.params_, it->second)
                                            : Polynomial::variable(out.params_, v.name));
    }
    for (const auto& [key, value] : values_)
        out.values_.emplace(key, value.substitute(images, out.params_));
    return out;
}

std::vector<std::string> NumericalBaseData::all_keys() const
{
    std::vector<std::string> out;
    for (const auto& e : monomials_of_weight(*keys_, dimension_))
        out.push_back(monomial_to_string(*keys_, e));
    return out;
}

bool NumericalBaseData::operator==(const NumericalBaseData& other) const
{
    return dimension_ == other.dimension_ && *params_ == *other.params_ && values_ == other.values_;
}

// ---------------------------------------------------------------------------

IntersectionModel::IntersectionModel(int dimension, std::vector<std::string> generators,
                                     std::vector<std::string> parameters)
    : dimension_(dimension), generators_(std::move(generators)), parameters_(std::move(parameters))
{
    if (dimension < 1)
        throw InvalidInput("base dimension must be positive");
    std::vector<std::string> all = generators_;
    all.insert(all.end(), parameters_.begin(), parameters_.end());
    ring_ = make_plain_ring(all);
}

IntersectionModel& IntersectionModel::integral(std::string_view generator_monomial, std::string_view value)
{
    const Polynomial p = Polynomial::parse(ring_, generator_monomial);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw InvalidInput("integral key must be a monic monomial in the generators");
    const Exponents& e = p.terms().begin()->first;
    int degree = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i >= generators_.size() && e[i] != 0)
            throw InvalidInput("integral key may not involve parameters");
        degree += e[i];
    }
    if (degree != dimension_)
        throw InvalidInput("integral key must have degree " + std::to_string(dimension_));
    integrals_.insert_or_assign(e, Polynomial::parse(make_plain_ring(parameters_), value));
    return *this;
}

IntersectionModel& IntersectionModel::chern(std::string_view symbol, std::string_view expression)
{
    const std::string name(symbol);
    if (name.size() < 2 || (name[0] != 'c' && name[0] != 'v'))
        throw InvalidInput("unknown Chern symbol " + name);
    const int index = std::stoi(name.substr(1));
    if (index < 1 || index > dimension_)
        throw InvalidInput("Chern symbol " + name + " out of range");
    classes_.insert_or_assign(name, Polynomial::parse(ring_, expression));
    return *this;
}

NumericalBaseData IntersectionModel::build() const
{
    NumericalBaseData data(dimension_, parameters_);
    const RingPtr& params = data.parameter_ring();
    const Ring& keys = *data.key_ring();
    const std::size_t g = generators_.size();

    for (const auto& key : monomials_of_weight(keys, dimension_)) {
        Polynomial product(ring_, 1);
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0)
                continue;
            auto it = classes_.find(keys[i].name);
            product *= it == classes_.end() ? Polynomial(ring_) : it->second.pow(key[i]);
        }
        Polynomial value(params);
        for (const auto& [e, c] : product.terms()) {
            Exponents gen(ring_->size(), 0);
            int degree = 0;
            for (std::size_t i = 0; i < g; ++i) {
                gen[i] = e[i];
                degree += e[i];
            }
            if (degree != dimension_)
                continue;
            auto it = integrals_.find(gen);
            if (it == integrals_.end())
                throw InvalidInput("no integral given for " + monomial_to_string(*ring_, gen));
            Exponents p(e.begin() + g, e.end());
            value += it->second * Polynomial::monomial(params, p, c);
        }
        data.set(monomial_to_string(keys, key), value);
    }
    return data;
}

}  // namespace inflect
