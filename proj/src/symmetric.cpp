#include "inflect/symmetric.hpp"

#include "inflect/errors.hpp"

#include <functional>

namespace inflect {

SymmetricReducer::SymmetricReducer(std::vector<int> group_sizes) : sizes_(std::move(group_sizes))
{
    std::vector<Variable> roots, elems;
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
        if (sizes_[g] < 1)
            throw InvalidInput("root groups must be non-empty");
        offsets_.push_back(roots.size());
        for (int i = 0; i < sizes_[g]; ++i) {
            roots.push_back({"x" + std::to_string(g) + "_" + std::to_string(i + 1), 1});
            elems.push_back({"e" + std::to_string(g) + "_" + std::to_string(i + 1), i + 1});
        }
    }
    roots_ = make_ring(std::move(roots));
    elementary_ = make_ring(std::move(elems));

    for (std::size_t g = 0; g < sizes_.size(); ++g) {
        const int n = sizes_[g];
        for (int i = 1; i <= n; ++i) {
            // sum over i-subsets of the group
            Polynomial e(roots_);
            std::vector<int> pick(i);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == i) {
                    Exponents x(roots_->size(), 0);
                    for (int j : pick)
                        x[offsets_[g] + j] = 1;
                    e.add_term(x, 1);
                    return;
                }
                for (int j = start; j < n; ++j) {
                    pick[depth] = j;
                    rec(j + 1, depth + 1);
                }
            };
            rec(0, 0);
            elementary_in_roots_.push_back(std::move(e));
        }
    }
}

Polynomial SymmetricReducer::root(std::size_t group, std::size_t i) const
{
    Exponents x(roots_->size(), 0);
    x[root_index(group, i)] = 1;
    return Polynomial::monomial(roots_, std::move(x), 1);
}

Polynomial SymmetricReducer::elementary(std::size_t group, std::size_t i) const
{
    return elementary_in_roots_.at(offsets_[group] + i - 1);
}

const Polynomial& SymmetricReducer::elementary_product(const Exponents& e)
{
    if (auto it = products_.find(e); it != products_.end())
        return it->second;
    std::size_t first = e.size();
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] > 0) {
            first = j;
            break;
        }
    Polynomial value(roots_, 1);
    if (first != e.size()) {
        Exponents smaller = e;
        --smaller[first];
        value = elementary_product(smaller) * elementary_in_roots_[first];
    }
    return products_.emplace(e, std::move(value)).first->second;
}

Polynomial SymmetricReducer::reduce(const Polynomial& symmetric)
{
    if (!same_ring(symmetric.ring(), roots_))
        throw InvalidInput("symmetric reduction expects a polynomial in the root ring");
    Polynomial rest = symmetric;
    Polynomial out(elementary_);
    while (!rest.is_zero()) {
        const auto& [lead, coeff] = *rest.terms().rbegin();
        Exponents e(elementary_->size(), 0);
        for (std::size_t g = 0; g < sizes_.size(); ++g) {
            for (int i = 0; i < sizes_[g]; ++i) {
                const int a = lead[offsets_[g] + i];
                const int b = (i + 1 < sizes_[g]) ? lead[offsets_[g] + i + 1] : 0;
                if (a < b)
                    throw InvalidInput("polynomial is not symmetric in its root groups");
                e[offsets_[g] + i] = a - b;
            }
        }
        const Rational c = coeff;
        out.add_term(e, c);
        rest -= elementary_product(e) * c;
    }
    return out;
}

}  // namespace inflect
