#include "doctest.h"

#include "inflect/closed_forms.hpp"
#include "inflect/errors.hpp"

#include <set>

using namespace inflect;

TEST_CASE("every registered closed form matches the engine")
{
    const auto& registry = formula_registry();
    REQUIRE(registry.size() > 50);
    for (const auto& record : registry) {
        CAPTURE(record.id);
        const CheckOutcome out = record.run();
        CAPTURE(out.expected);
        CAPTURE(out.actual);
        CHECK(out.pass);
    }
}

TEST_CASE("registry ids are unique and sorted")
{
    const auto& registry = formula_registry();
    std::set<std::string> ids;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        CHECK(ids.insert(registry[i].id).second);
        if (i > 0)
            CHECK(registry[i - 1].id < registry[i].id);
        CHECK(!registry[i].description.empty());
    }
}

TEST_CASE("a corrupted template fails its check")
{
    for (const auto& record : formula_registry()) {
        if (record.id != "threefold.degree.P10" && record.id != "abelian.flexes.n3.k2" &&
            record.id != "kernel.sym2_twist_inverse.m2")
            continue;
        FormulaRecord bad = record;
        bad.template_text += " + 1";
        CAPTURE(record.id);
        CHECK_FALSE(bad.run().pass);
    }
}

TEST_CASE("abelian surface degrees")
{
    auto deg = abelian_degree(2, 3);
    auto ring = deg.ring();
    CHECK(deg == Polynomial::parse(ring, "19d + 27(2g - 2)"));
    CHECK(abelian_degree(2, 2) == Polynomial::parse(ring, "9d + 12(2g - 2)"));
    const std::vector<Rational> point{Rational(33), Rational(23)};
    CHECK(deg.evaluate(point) == 1815);
}

TEST_CASE("secant scroll example")
{
    CHECK(secant_scroll_p(2) == 11);
    CHECK(secant_scroll_flexes(2, 11) == 1815);
    CHECK(secant_scroll_p(3) == 18);
    CHECK(secant_scroll_flexes(3, 18) == 11016);
}

TEST_CASE("abelian class drops negative powers for small codimension")
{
    CHECK_FALSE(abelian_class(3, 2, 2, 2).dropped_terms);
    CHECK(abelian_class(3, 2, 2, 1).dropped_terms);
    CHECK(abelian_class(4, 3, 2, 2).dropped_terms);
    CHECK_THROWS_AS(abelian_class(4, 4, 2, 2), InvalidInput);
    CHECK_THROWS_AS(abelian_class(3, 2, 2, 0), InvalidInput);
}

TEST_CASE("templates")
{
    const ScrollGeometry geo(3, 2);
    CHECK(class_template(geo, "K") == geo.total_class("-C1"));
    CHECK(base_template(geo, "2g - 2") == Polynomial::parse(geo.base_ring(), "v1^2 - c1*v1"));
    CHECK(base_template(geo, "H") == Polynomial::parse(geo.base_ring(), "v1/2"));
    CHECK(base_template(geo, "d") == Polynomial::parse(geo.base_ring(), "v1^2 - v2"));
    CHECK_THROWS_AS(base_template(ScrollGeometry(4, 3), "g"), InvalidInput);
    CHECK(divisor_class(3, 2) == geo.total_class("-5C1 + 3V1 + 3L"));
}

TEST_CASE("exceptional cases of the lower bound")
{
    CHECK(thm_details_case(2).degree == "3d - 12");
    CHECK_THROWS_AS(thm_details_case(5), InvalidInput);
    auto p = thm_details_degree(3, {{"d", 12}, {"q", 1}, {"F", 2}, {"G", 2}});
    CHECK(p.is_constant());
    CHECK(p.constant_term() == 44);
}
