#include "doctest.h"

#include "inflect/errors.hpp"
#include "inflect/presets.hpp"
#include "inflect/serialize.hpp"

using namespace inflect;

TEST_CASE("rational round trip")
{
    for (const char* text : {"0", "7", "-3/4", "123456789012345678901234567890/7"}) {
        const Rational q = parse_rational(text);
        CHECK(rational_from_json(to_json(q)) == q);
    }
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), InvalidInput);
}

TEST_CASE("polynomial and class round trip on a capped ring")
{
    const RingPtr ring = make_ring({{"c1", 1}, {"c2", 2}, {"L", 1}}, {{{0, 1}, 2}});
    const auto p = Polynomial::parse(ring, "3/2 c1^2 - c2 + 7 L^5 c1 - 1");
    const Json j = to_json(p);
    CHECK(j.at("text") == p.to_string());
    const Polynomial back = polynomial_from_json(j);
    CHECK(back == p);
    CHECK(*back.ring() == *ring);

    const GradedClass c(p, 4);
    const GradedClass cb = graded_class_from_json(to_json(c));
    CHECK(cb == c);
    CHECK(cb.truncation() == 4);

    // through text as well
    CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
}

TEST_CASE("malformed polynomials are rejected")
{
    const RingPtr ring = make_plain_ring({"x", "y"});
    Json j = to_json(Polynomial::parse(ring, "x + y"));
    Json bad = j;
    bad["terms"][0]["exponents"] = {1};
    CHECK_THROWS_AS(polynomial_from_json(bad), InvalidInput);
    bad = j;
    bad["terms"][0]["den"] = "0";
    CHECK_THROWS_AS(polynomial_from_json(bad), InvalidInput);
    bad = j;
    bad["terms"][0]["exponents"] = {-1, 0};
    CHECK_THROWS_AS(polynomial_from_json(bad), InvalidInput);
    bad = j;
    bad.erase("ring");
    CHECK_THROWS_AS(polynomial_from_json(bad), InvalidInput);
    bad = j;
    bad["ring"]["caps"] = Json::array({{{"variables", {5}}, {"max_weight", 1}}});
    CHECK_THROWS_AS(polynomial_from_json(bad), InvalidInput);
}

TEST_CASE("every preset round trips")
{
    for (const auto& info : presets()) {
        CAPTURE(info.name);
        const NumericalBaseData data = preset(info.name);
        const NumericalBaseData back = base_data_from_json(Json::parse(to_json(data).dump()));
        CHECK(back == data);
    }
}

TEST_CASE("base data accepts integers and expressions")
{
    const Json j = Json::parse(R"({"dimension": 2, "parameters": ["x"],
        "values": {"c1^2": 9, "c2": 3, "v1^2": "x^2", "v2": "x + 1", "c1 v1": "3x"}})");
    const NumericalBaseData data = base_data_from_json(j);
    CHECK(data.get("c1^2") == Polynomial(data.parameter_ring(), 9));
    CHECK(data.get("v1 c1")->to_string() == "3*x");
    CHECK_THROWS_AS(base_data_from_json(Json::parse(R"({"dimension": 0, "values": {}})")), InvalidInput);
    CHECK_THROWS_AS(base_data_from_json(Json::parse(R"({"dimension": 2, "values": {"c1": 1}})")), InvalidInput);
    CHECK_THROWS_AS(base_data_from_json(Json::parse(R"({"values": {}})")), InvalidInput);
}

TEST_CASE("setup round trip")
{
    const ScrollSetup s{3, 2, 2, 9};
    const ScrollSetup b = setup_from_json(to_json(s));
    CHECK(b.n == 3);
    CHECK(b.m == 2);
    CHECK(b.k == 2);
    CHECK(b.N == 9);
}

TEST_CASE("scan report round trip")
{
    for (const char* family : {"P2_N9", "P3"}) {
        const ScanReport r = run_scan(scan_problem(family, std::string(family) == "P3" ? 2 : 0));
        const ScanReport back = scan_report_from_json(Json::parse(to_json(r).dump()));
        CHECK(back == r);
    }
    Json j = to_json(run_scan(scan_problem("P2_N10")));
    j["verdict"] = "maybe";
    CHECK_THROWS_AS(scan_report_from_json(j), InvalidInput);
}

TEST_CASE("jet spec and report round trip")
{
    const JetProbeSpec spec = split_plane_scroll_chart();
    CHECK(jet_spec_from_json(to_json(spec)) == spec);
    const Json minimal = Json::parse(R"({"variables": ["t"], "coordinates": ["1", "t", "t^2"]})");
    const JetProbeSpec m = jet_spec_from_json(minimal);
    CHECK(m.k == 2);
    CHECK(m.trials == 8);
    const JetRankReport r = generic_jet_rank(spec);
    CHECK(jet_report_from_json(Json::parse(to_json(r).dump())) == r);
    CHECK_THROWS_AS(jet_spec_from_json(Json::parse(R"({"variables": "t"})")), InvalidInput);
}

TEST_CASE("output-only forms")
{
    const auto c = inflection_class({3, 2, 2, 9});
    const Json j = to_json(c);
    CHECK(j.at("codimension") == 2);
    CHECK(graded_class_from_json(j.at("reduced")) == c.reduced);
    const auto d = degree_of_inflection({3, 2, 2, 9}, preset("P2").specialize({{"x", 0}, {"y", 0}}));
    CHECK(to_json(d).contains("integer"));
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}
