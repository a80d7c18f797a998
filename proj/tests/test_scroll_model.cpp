#include "doctest.h"

#include "inflect/errors.hpp"
#include "inflect/presets.hpp"
#include "inflect/scroll_model.hpp"

using namespace inflect;

namespace doctest {
template <>
struct StringMaker<GradedClass> {
    static String convert(const GradedClass& x) { return x.to_string().c_str(); }
};
}  // namespace doctest

TEST_CASE("max_rank")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 4; ++k)
            CHECK(max_rank(n, 1, k) == k * n + 1);
    CHECK(max_rank(3, 2, 2) == 9);
    CHECK(max_rank(4, 3, 2) == 14);
    CHECK(max_rank(3, 2, 1) == 4);
}

TEST_CASE("derivative counts sum to the rank bound")
{
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m)
            for (int k = 1; k <= 4; ++k) {
                Integer total = 0;
                for (int h = 0; h <= k; ++h) {
                    auto [pure, mixed] = derivative_count(n, m, h);
                    total += pure + mixed;
                }
                CHECK(total == max_rank(n, m, k));
            }
}

TEST_CASE("expected codimension and range")
{
    auto a = expected_codim({3, 2, 2, 8});
    CHECK(a.ell == 1);
    CHECK(a.in_range);
    CHECK(expected_codim({4, 3, 2, 13}).ell == 1);
    auto b = expected_codim({4, 3, 2, 16});
    CHECK(b.ell == 4);
    CHECK(b.in_range);
    auto c = expected_codim({3, 2, 2, 11});
    CHECK(c.ell == 4);
    CHECK_FALSE(c.in_range);
    CHECK(expected_codim({3, 2, 2, 7}).ell == 0);
    CHECK_FALSE(expected_codim({3, 2, 2, 7}).in_range);
    CHECK_THROWS_AS(expected_codim({2, 2, 2, 8}), InvalidInput);
}

TEST_CASE("E_2 factorization")
{
    const ScrollSetup s{3, 2, 2, 10};
    const ScrollGeometry geo(3, 2);
    const auto t = geo.tangent_base();
    const auto vd = dual(geo.bundle_v());
    const auto expected = vd.total_chern() * tensor(vd, t).total_chern() *
                          tensor_line(sym_power(t, 2), geo.tautological(), -1).total_chern();
    CHECK(total_chern_E_k(s) == expected);
    CHECK(total_chern_E_k(s, SplittingStrategy::chern_character) == expected);
}

TEST_CASE("E_1 is V dual times T twisted")
{
    const ScrollGeometry geo(4, 2);
    const auto expected = dual(geo.bundle_v()).total_chern() *
                          tensor_line(geo.tangent_base(), geo.tautological(), -1).total_chern();
    CHECK(total_chern_E_k({4, 2, 1, 5}) == expected);
}

TEST_CASE("E_k over an abelian base")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = m + 1; n <= m + 2; ++n)
            for (int k = 1; k <= 3; ++k) {
                const ScrollGeometry geo(n, m);
                const auto full = total_chern_E_k({n, m, k, 0});
                // kill the tangent classes
                std::vector<Polynomial> images;
                for (const auto& v : geo.total_ring()->variables())
                    images.push_back(v.name[0] == 'C' ? Polynomial(geo.total_ring())
                                                      : Polynomial::variable(geo.total_ring(), v.name));
                const GradedClass abelian(full.polynomial().substitute(images, geo.total_ring()), n);
                const auto mu = binomial(m - 1 + k, m - 1).get_ui();
                const auto nu = binomial(m - 1 + k, m).get_ui();
                const auto one = GradedClass::one(geo.total_ring(), n);
                const auto expected = (one - geo.tautological()).pow(mu) *
                                      dual(geo.bundle_v()).total_chern().pow(nu);
                CHECK(abelian == expected);
            }
}

TEST_CASE("inflection classes of threefold scrolls over surfaces")
{
    const ScrollGeometry geo(3, 2);
    CHECK(inflection_class({3, 2, 2, 8}).unreduced == geo.total_class("3L + 3V1 - 5C1"));
    CHECK(inflection_class({3, 2, 2, 9}).unreduced ==
          geo.total_class("6L^2 + 9V1*L - 18C1*L + 6V1^2 - 3V2 - 16C1*V1 + 16C1^2 - 6C2"));
    CHECK(inflection_class({3, 2, 2, 10}).unreduced ==
          geo.total_class("10L^3 - 42C1*L^2 + 18V1*L^2 + 68C1^2*L - 26C2*L - 57C1*V1*L + 18V1^2*L - 9V2*L"));
}

TEST_CASE("inflection class of a fourfold over a threefold")
{
    const ScrollGeometry geo(4, 3);
    CHECK(inflection_class({4, 3, 2, 14}).unreduced ==
          geo.total_class("21L^2 + 24V1*L - 40C1*L + 10V1^2 - 4V2 - 25C1*V1 + 22C1^2 - 7C2"));
}

TEST_CASE("out of range setups are flagged, not refused")
{
    auto cls = inflection_class({3, 2, 2, 11});
    CHECK_FALSE(cls.codim.in_range);
    CHECK_FALSE(cls.warnings.empty());
}

TEST_CASE("Chern-Wu reduction")
{
    const ScrollGeometry geo(3, 2);
    CHECK(geo.chern_wu_reduce(geo.total_class("L")) == geo.total_class("L"));
    CHECK(geo.chern_wu_reduce(geo.total_class("L^2")) == geo.total_class("L*V1 - V2"));
    CHECK(geo.chern_wu_reduce(geo.total_class("L^3")) == geo.total_class("(V1^2 - V2)L - V1*V2"));
}

TEST_CASE("pushforward")
{
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m) {
            const ScrollGeometry geo(n, m);
            const int r = geo.fiber_rank();
            const auto lp = [&](int e) { return geo.tautological().pow(static_cast<unsigned>(e)); };
            CHECK(geo.pushforward(lp(r - 1)) == GradedClass::one(geo.base_ring(), m));
            if (r >= 2)
                CHECK(geo.pushforward(geo.total_class("V1") * lp(r - 2)).is_zero());
        }
    const ScrollGeometry geo(3, 2);
    CHECK(geo.degree_class() == geo.base_class("v1^2 - v2"));
}

TEST_CASE("degree polynomial over a surface")
{
    const ScrollGeometry geo(3, 2);
    auto d = geo.degree_class();
    auto expected = d * Rational(19) + geo.base_class("68c1^2 - 26c2 - 99c1*v1 + 27v1^2");
    CHECK(degree_polynomial({3, 2, 2, 10}) == expected);
    CHECK(degree_polynomial({3, 2, 2, 10}, ReductionOrder::reduce_then_multiply) == expected);
}

TEST_CASE("degrees over an abelian surface")
{
    auto data = preset("abelian_surface");
    auto res = degree_of_inflection({3, 2, 2, 10}, data);
    auto params = data.parameter_ring();
    CHECK(res.value == Polynomial::parse(params, "19d + 27(2g - 2)"));

    // Secant scroll with p = 11: d = 3p, 2g - 2 = 4p
    auto numeric = data.specialize({{"d", 33}, {"g", 23}});
    auto res2 = degree_of_inflection({3, 2, 2, 10}, numeric);
    CHECK(res2.value == Polynomial(numeric.parameter_ring(), 1815));
}

TEST_CASE("Veronese surface times a line, projected")
{
    auto data = preset("P2").specialize({{"x", 4}, {"y", 4}});
    CHECK(data.get("c1^2")->constant_term() == 9);
    CHECK(data.get("c2")->constant_term() == 3);
    CHECK(data.evaluate(ScrollGeometry(3, 2).degree_class()).constant_term() == 12);
    auto res = degree_of_inflection({3, 2, 2, 10}, data);
    CHECK(res.value.constant_term() == 6);
    CHECK(res.warnings.empty());
}

TEST_CASE("missing intersection numbers are listed")
{
    NumericalBaseData data(2);
    data.set("v1^2", Rational(4));
    try {
        degree_of_inflection({3, 2, 2, 10}, data);
        FAIL("expected IncompleteData");
    } catch (const IncompleteData& e) {
        CHECK(e.missing().size() == 4);
    }
}

TEST_CASE("base data dimension must match")
{
    CHECK_THROWS_AS(degree_of_inflection({3, 2, 2, 10}, preset("P3")), InvalidInput);
}
