#include "inflect/graded.hpp"

#include "inflect/errors.hpp"

namespace inflect {

GradedClass::GradedClass(RingPtr ring, int truncation) : poly_(std::move(ring)), truncation_(truncation)
{
    if (truncation_ < 0)
        throw InvalidInput("truncation must be non-negative");
}

GradedClass::GradedClass(Polynomial poly, int truncation)
    : poly_(poly.truncated(truncation)), truncation_(truncation)
{
    if (truncation_ < 0)
        throw InvalidInput("truncation must be non-negative");
}

GradedClass GradedClass::one(RingPtr ring, int truncation)
{
    return constant(std::move(ring), truncation, 1);
}

GradedClass GradedClass::constant(RingPtr ring, int truncation, const Rational& c)
{
    return GradedClass(Polynomial(std::move(ring), c), truncation);
}

GradedClass GradedClass::variable(RingPtr ring, int truncation, std::string_view name)
{
    return GradedClass(Polynomial::variable(std::move(ring), name), truncation);
}

GradedClass GradedClass::parse(RingPtr ring, int truncation, std::string_view text)
{
    return GradedClass(Polynomial::parse(std::move(ring), text), truncation);
}

GradedClass GradedClass::part(int weight) const
{
    return GradedClass(poly_.homogeneous_part(weight), truncation_);
}

void GradedClass::check_compatible(const GradedClass& other) const
{
    if (!same_ring(ring(), other.ring()))
        throw InvalidInput("graded classes live in different rings");
    if (truncation_ != other.truncation_)
        throw InvalidInput("graded classes have different truncations (" + std::to_string(truncation_) +
                           " vs " + std::to_string(other.truncation_) + ")");
}

GradedClass GradedClass::operator-() const
{
    GradedClass out(*this);
    out.poly_ = -poly_;
    return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& other)
{
    check_compatible(other);
    poly_ += other.poly_;
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other)
{
    check_compatible(other);
    poly_ -= other.poly_;
    return *this;
}

GradedClass& GradedClass::operator*=(const GradedClass& other)
{
    check_compatible(other);
    poly_ = multiply_truncated(poly_, other.poly_, truncation_);
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& scalar)
{
    poly_ *= scalar;
    return *this;
}

bool GradedClass::operator==(const GradedClass& other) const
{
    return truncation_ == other.truncation_ && poly_ == other.poly_;
}

GradedClass GradedClass::pow(unsigned exponent) const
{
    GradedClass result = one(ring(), truncation_);
    GradedClass base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent)
            base *= base;
    }
    return result;
}

GradedClass GradedClass::scale_grading(const Rational& factor) const
{
    Polynomial out(ring());
    for (const auto& [e, c] : poly_.terms()) {
        Rational f = 1;
        for (int i = poly_.weight_of(e); i > 0; --i)
            f *= factor;
        out.add_term(e, c * f);
    }
    return GradedClass(std::move(out), truncation_);
}

GradedClass series_inverse(const GradedClass& x)
{
    if (x.constant_term() != 1)
        throw InvalidInput("series inverse requires constant term 1, got " + x.constant_term().get_str());
    const int top = x.truncation();
    std::vector<GradedClass> xs, ys;
    for (int d = 0; d <= top; ++d)
        xs.push_back(x.part(d));
    ys.push_back(GradedClass::one(x.ring(), top));
    // y_d = -sum_{i=1..d} x_i y_{d-i}
    for (int d = 1; d <= top; ++d) {
        GradedClass acc(x.ring(), top);
        for (int i = 1; i <= d; ++i)
            if (!xs[i].is_zero() && !ys[d - i].is_zero())
                acc += xs[i] * ys[d - i];
        ys.push_back(-acc);
    }
    GradedClass out(x.ring(), top);
    for (const auto& y : ys)
        out += y;
    return out;
}

}  // namespace inflect
