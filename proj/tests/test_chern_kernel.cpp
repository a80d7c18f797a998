#include "doctest.h"

#include "inflect/bundle.hpp"
#include "inflect/errors.hpp"
#include "inflect/graded.hpp"

using namespace inflect;

namespace {

RingPtr chern_ring(const std::vector<std::pair<std::string, int>>& vars)
{
    std::vector<Variable> v;
    for (const auto& [name, w] : vars)
        v.push_back({name, w});
    return make_ring(v);
}

}  // namespace

namespace doctest {
template <>
struct StringMaker<GradedClass> {
    static String convert(const GradedClass& x) { return x.to_string().c_str(); }
};
}  // namespace doctest

TEST_CASE("series inverse of the identity")
{
    auto ring = chern_ring({{"b1", 1}});
    auto one = GradedClass::one(ring, 4);
    CHECK(series_inverse(one) == one);
}

TEST_CASE("series inverse of a rank three total class")
{
    auto ring = chern_ring({{"b1", 1}, {"b2", 2}, {"b3", 3}});
    auto x = GradedClass::parse(ring, 3, "1 + b1 + b2 + b3");
    auto expected = GradedClass::parse(ring, 3, "1 - b1 + (b1^2 - b2) + (-b1^3 + 2*b1*b2 - b3)");
    CHECK(series_inverse(x) == expected);
}

TEST_CASE("inverse of (1 - L)^3 has binomial coefficients")
{
    auto ring = chern_ring({{"L", 1}});
    auto x = GradedClass::parse(ring, 4, "(1 - L)^3");
    auto y = series_inverse(x);
    const int expected[] = {1, 3, 6, 10, 15};
    for (int j = 0; j <= 4; ++j)
        CHECK(y.polynomial().coefficient({j}) == expected[j]);
}

TEST_CASE("series inverse rejects a non-unit constant term")
{
    auto ring = chern_ring({{"b1", 1}});
    CHECK_THROWS_AS(series_inverse(GradedClass::parse(ring, 2, "2 + b1")), InvalidInput);
    CHECK_THROWS_AS(series_inverse(GradedClass(ring, 2)), InvalidInput);
}

TEST_CASE("dual bundle")
{
    auto ring = chern_ring({{"v1", 1}, {"v2", 2}});
    auto triv = FormalBundle::trivial(3, ring, 2);
    CHECK(dual(triv) == triv);

    auto v = FormalBundle::generic(2, ring, 2, {"v1", "v2"});
    CHECK(series_inverse(dual(v).total_chern()) == GradedClass::parse(ring, 2, "1 + v1 + v1^2 - v2"));
    CHECK(dual(dual(v)) == v);
}

TEST_CASE("twisting by a line")
{
    // pulled back from a surface: base classes vanish above weight 2
    auto ring = make_ring({{"L", 1}, {"C1", 1}, {"C2", 2}}, {WeightCap{{1, 2}, 2}});
    auto t = FormalBundle::generic(2, ring, 3, {"C1", "C2"});
    CHECK(tensor_line(t, GradedClass(ring, 3)) == t);

    auto s2 = sym_power(t, 2);
    auto twisted = tensor_line(s2, GradedClass::variable(ring, 3, "L"), -1);
    auto expected = GradedClass::parse(
        ring, 3, "1 + (3C1 - 3L) + (2C1^2 + 4C2 - 6C1*L + 3L^2) - ((2C1^2 + 4C2)*L - 3C1*L^2 + L^3)");
    CHECK(twisted.total_chern() == expected);

    CHECK_THROWS_AS(tensor_line(t, GradedClass::parse(ring, 3, "L + C2")), InvalidInput);
}

TEST_CASE("twisting S^2 of a rank three bundle")
{
    auto ring = make_ring({{"L", 1}, {"C1", 1}, {"C2", 2}, {"C3", 3}});
    auto t = FormalBundle::generic(3, ring, 3, {"C1", "C2", "C3"});
    auto twisted = tensor_line(sym_power(t, 2), GradedClass::variable(ring, 3, "L"), -1);
    CHECK(twisted.rank() == 6);
    CHECK(twisted.chern(1) == GradedClass::parse(ring, 3, "4C1 - 6L"));
    CHECK(twisted.chern(2) == GradedClass::parse(ring, 3, "5(C1^2 + C2) - 20C1*L + 15L^2"));
}

TEST_CASE("symmetric squares")
{
    auto r2 = chern_ring({{"c1", 1}, {"c2", 2}});
    auto t2 = FormalBundle::generic(2, r2, 2, {"c1", "c2"});
    CHECK(sym_power(t2, 1) == t2);
    CHECK(sym_power(t2, 2).total_chern() == GradedClass::parse(r2, 2, "1 + 3c1 + 2c1^2 + 4c2"));

    auto r3 = chern_ring({{"c1", 1}, {"c2", 2}, {"c3", 3}});
    auto t3 = FormalBundle::generic(3, r3, 3, {"c1", "c2", "c3"});
    auto expected = GradedClass::parse(r3, 3, "1 + 4c1 + 5(c1^2 + c2) + 2c1^3 + 11c1*c2 + 7c3");
    CHECK(sym_power(t3, 2).total_chern() == expected);
    CHECK(sym_power(t3, 2, SplittingStrategy::chern_character).total_chern() == expected);
}

TEST_CASE("V dual tensor T on a surface")
{
    auto ring = chern_ring({{"c1", 1}, {"c2", 2}, {"v1", 1}, {"v2", 2}});
    auto t = FormalBundle::generic(2, ring, 2, {"c1", "c2"});
    for (int n = 3; n <= 6; ++n) {
        std::vector<std::string> names{"v1", "v2"};
        auto v = FormalBundle(n - 1, GradedClass::parse(ring, 2, "1 + v1 + v2"));
        auto e = tensor(dual(v), t);
        CHECK(e.rank() == 2 * (n - 1));
        CHECK(e.chern(1) == GradedClass::parse(ring, 2, "-2v1 + " + std::to_string(n - 1) + "c1"));
        const std::string c2 = "v1^2 + 2v2 - " + std::to_string(2 * n - 3) + "v1*c1 + " +
                               binomial(n - 1, 2).get_str() + "c1^2 + " + std::to_string(n - 1) + "c2";
        CHECK(e.chern(2) == GradedClass::parse(ring, 2, c2));
    }
}

TEST_CASE("V dual tensor T on a threefold")
{
    auto ring = chern_ring({{"c1", 1}, {"c2", 2}, {"c3", 3}, {"v1", 1}, {"v2", 2}});
    auto t = FormalBundle::generic(3, ring, 3, {"c1", "c2", "c3"});
    auto v = FormalBundle::generic(2, ring, 3, {"v1", "v2"});
    for (auto strategy : {SplittingStrategy::chern_roots, SplittingStrategy::chern_character}) {
        auto e = tensor(dual(v), t, strategy);
        CHECK(e.chern(1) == GradedClass::parse(ring, 3, "-3v1 + 2c1"));
        CHECK(e.chern(3) == GradedClass::parse(ring, 3,
                                               "-v1^3 - 6v1*v2 + 4c1(v1^2 + v2) - (2c1^2 + 4c2)v1 + 2c1*c2 + 2c3"));
    }
}

TEST_CASE("line tensor line adds first Chern classes")
{
    auto ring = chern_ring({{"a", 1}, {"b", 1}});
    auto a = FormalBundle::line(GradedClass::variable(ring, 2, "a"));
    auto b = FormalBundle::line(GradedClass::variable(ring, 2, "b"));
    CHECK(tensor(a, b).total_chern() == GradedClass::parse(ring, 2, "1 + a + b"));
}

TEST_CASE("rank guard")
{
    auto ring = chern_ring({{"c1", 1}});
    auto e = FormalBundle(9, GradedClass::parse(ring, 1, "1 + c1"));
    CHECK_THROWS_AS(tensor(e, e), ResourceLimit);
    CHECK_THROWS_AS(sym_power(e, 3), ResourceLimit);
}

TEST_CASE("degree of the zero class is undefined")
{
    auto ring = chern_ring({{"c1", 1}});
    CHECK_FALSE(GradedClass(ring, 3).degree().has_value());
    CHECK(GradedClass::parse(ring, 3, "c1^2").degree() == 2);
}

TEST_CASE("mixing truncations is rejected")
{
    auto ring = chern_ring({{"c1", 1}});
    CHECK_THROWS_AS(GradedClass::one(ring, 2) + GradedClass::one(ring, 3), InvalidInput);
}
