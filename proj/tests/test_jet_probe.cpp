#include "doctest.h"

#include "inflect/errors.hpp"
#include "inflect/jet_probe.hpp"
#include "inflect/poly_gcd.hpp"
#include "inflect/rational.hpp"

using namespace inflect;

TEST_CASE("constant coordinates have rank 1")
{
    JetProbeSpec s{{"u"}, {"1", "2", "-3"}, 1};
    CHECK(generic_jet_rank(s).rank == 1);
}

TEST_CASE("jet matrix shape and order")
{
    const JetChart chart(split_plane_scroll_chart());
    const auto idx = chart.multi_indices(2);
    REQUIRE(idx.size() == 10);
    CHECK(idx[0] == Exponents{0, 0, 0});
    CHECK(idx[1] == Exponents{1, 0, 0});
    CHECK(idx[3] == Exponents{0, 0, 1});
    CHECK(idx[4] == Exponents{2, 0, 0});
    CHECK(idx[5] == Exponents{1, 1, 0});
    CHECK(idx[9] == Exponents{0, 0, 2});
    const auto m = chart.jet_matrix({Rational(1), Rational(2), Rational(3)});
    CHECK(m.size() == 10);
    CHECK(m[0].size() == 9);
    CHECK(m[0][6] == 3);  // v u1^2 at (1, 2, 3)
    CHECK(m[4][6] == 6);  // d^2/du1^2 (v u1^2) = 2v
    for (const auto& x : m[9])
        CHECK(x == 0);  // the chart is linear in v
    CHECK_THROWS_AS(chart.jet_matrix({Rational(1)}), InvalidInput);
}

TEST_CASE("Segre charts have full second osculation")
{
    CHECK(generic_jet_rank(segre_chart(1, 1)).rank == 4);
    CHECK(generic_jet_rank(segre_chart(2, 1)).rank == 6);
    CHECK(generic_jet_rank(segre_chart(2, 2)).rank == 9);
    CHECK(generic_jet_rank(segre_chart(3, 1)).rank == 8);
}

TEST_CASE("products of lines")
{
    for (int n = 3; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(generic_jet_rank(p1_power_chart(n)).rank == binomial(n + 2, 2) - n);
    }
    CHECK(generic_jet_rank(p1_power_chart(3)).rank == 7);
}

TEST_CASE("flag threefold")
{
    CHECK(generic_jet_rank(flag_chart()).rank == 8);
}

TEST_CASE("P(O(1)+O(2)) over the plane")
{
    const JetChart chart(split_plane_scroll_chart());
    CHECK(generic_jet_rank(chart).rank == 9);
    CHECK(symbolic_rank(chart.symbolic_jet_matrix(2)) == 9);
    const auto eq = inflection_equations(chart, 9);
    CHECK(eq.content == Polynomial::parse(chart.ring(), "v^3"));
    REQUIRE(eq.monomial_factors.size() == 1);
    CHECK(eq.monomial_factors[0] == std::pair<std::string, int>{"v", 3});
    CHECK(eq.residual == Polynomial(chart.ring(), 1));
}

TEST_CASE("Bordiga chart")
{
    const JetChart chart(bordiga_chart());
    CHECK(chart.warnings().size() == 1);
    CHECK(generic_jet_rank(chart).rank == 9);
    const auto eq = inflection_equations(chart, 9);
    CHECK(eq.minor_count == 100);
    REQUIRE_FALSE(eq.monomial_factors.empty());
    const auto y = Polynomial::parse(chart.ring(), "y");
    for (const auto& m : eq.minors)
        CHECK(divide_exact(m * eq.content, y).has_value());
    CHECK(eq.monomial_factors[0].first == "y");
    CHECK(eq.monomial_factors[0].second == 5);
}

TEST_CASE("cubic surface scroll inflects along v = 0")
{
    const JetChart chart(cubic_scroll_chart());
    const auto eq = inflection_equations(chart, 5);
    CHECK(eq.content == Polynomial::parse(chart.ring(), "v"));
}

TEST_CASE("product rank identity")
{
    SUBCASE("Veronese surface")
    {
        const auto p = product_rank_identity(veronese_chart(), 1);
        CHECK(p.holds);
        CHECK(p.predicted == 9);
    }
    SUBCASE("cubic scroll")
    {
        const auto p = product_rank_identity(cubic_scroll_chart(), 1);
        CHECK(p.holds);
        CHECK(p.direct == 8);
    }
    SUBCASE("rational normal curves")
    {
        for (int degree = 1; degree <= 5; ++degree)
            for (int k = 1; k <= degree; ++k) {
                CAPTURE(degree);
                CAPTURE(k);
                CHECK(product_rank_identity(rational_normal_curve(degree, k), 1).holds);
            }
    }
}

TEST_CASE("reports are reproducible from the seed")
{
    auto spec = bordiga_chart();
    spec.seed = 42;
    const auto a = generic_jet_rank(spec);
    const auto b = generic_jet_rank(spec);
    CHECK(a == b);
    CHECK(a.per_trial.size() == 8);
    CHECK(a.seed == 42);
    CHECK(a.confidence == "sampled");
}

TEST_CASE("invalid probes")
{
    CHECK_THROWS_AS(JetChart(JetProbeSpec{{"u"}, {"1", "z"}, 2}), InvalidInput);
    CHECK_THROWS_AS(JetChart(JetProbeSpec{{"u", "u"}, {"1"}, 2}), InvalidInput);
    CHECK_THROWS_AS(JetChart(JetProbeSpec{{"u"}, {}, 2}), InvalidInput);
    JetProbeSpec no_trials{{"u"}, {"1", "u"}, 2};
    no_trials.trials = 0;
    CHECK_THROWS_AS(JetChart{no_trials}, InvalidInput);
    CHECK_THROWS_AS(inflection_equations(JetChart(cubic_scroll_chart()), 6), InvalidInput);
    CHECK_THROWS_AS(inflection_equations(JetChart(p1_power_chart(5, 3)), 20), ResourceLimit);
}

TEST_CASE("resampling when the matrix vanishes")
{
    JetProbeSpec s{{"u"}, {"0*u"}, 0};
    s.trials = 2;
    const auto r = generic_jet_rank(s);
    CHECK(r.rank == 0);
    CHECK(r.warnings.size() == 3);  // not normalized, plus one notice per trial
}

TEST_CASE("polynomial gcd")
{
    auto ring = make_plain_ring({"x", "y", "z"});
    auto P = [&](const char* t) { return Polynomial::parse(ring, t); };
    CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2x*y + y^2")) == P("x + y"));
    CHECK(gcd(P("x*y*(x + z)^2"), P("y^2*(x + z)*(x - 1)")) == P("y*(x + z)"));
    CHECK(gcd(P("x + 1"), P("y + 1")) == P("1"));
    CHECK(gcd(P("0"), P("2x")) == P("x"));
    CHECK(gcd(P("(x*y + z)^3*(y - 2)"), P("(x*y + z)^2*(x - 2)")) == P("(x*y + z)^2"));
    CHECK(gcd(std::vector<Polynomial>{P("x^2*y"), P("x*y^3"), P("x^3*y*z")}) == P("x*y"));
    CHECK(monomial_content(P("x^2*y + x*y^2*z")) == P("x*y"));
    CHECK_FALSE(divide_exact(P("x + 1"), P("x")).has_value());
    CHECK(*divide_exact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    CHECK_THROWS_AS(divide_exact(P("x"), P("0")), InvalidInput);
}
