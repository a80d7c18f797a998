#include "doctest.h"

#include "inflect/cli.hpp"
#include "inflect/errors.hpp"
#include "inflect/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace inflect;
using namespace inflect::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "inflect");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("rank")
{
    auto r = invoke({"rank", "--n", "3", "--m", "2", "--k", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("r_2 = 9\n", 0) == 0);
    CHECK(invoke({"rank", "--n", "4", "--m", "3", "--k", "2"}).out.rfind("r_2 = 14\n", 0) == 0);
    CHECK(invoke({"rank", "--n", "3", "--m", "1", "--k", "2"}).out.rfind("r_2 = 7\n", 0) == 0);

    r = invoke({"rank", "--n", "3", "--m", "2", "--k", "2", "--format", "structured"});
    const Json j = Json::parse(r.out);
    CHECK(j.at("r_k") == "9");
    REQUIRE(j.at("orders").size() == 3);
    CHECK(j["orders"][1]["base"] == "2");
    CHECK(j["orders"][1]["mixed"] == "1");
    CHECK(j["orders"][2]["total"] == "5");
}

TEST_CASE("class")
{
    auto r = invoke({"class", "--n", "3", "--m", "2", "--k", "2", "--N", "8"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("reduced:   3*L - 5*C1 + 3*V1") != std::string::npos);

    r = invoke({"class", "--n", "4", "--m", "3", "--k", "2", "--N", "15"});
    CHECK(r.out.find("unreduced: 56*L^3 - 154*L^2*C1 + 84*L^2*V1") != std::string::npos);

    r = invoke({"class", "--n", "3", "--m", "2", "--k", "2", "--N", "11"});
    CHECK(r.code == exit_ok);
    CHECK(r.err.find("warning:") != std::string::npos);
    CHECK(r.out.find("out of range") != std::string::npos);

    r = invoke({"class", "--n", "3", "--m", "2", "--k", "2", "--N", "8", "--format", "structured"});
    const Json j = Json::parse(r.out);
    CHECK(j.at("codimension") == 1);
    CHECK(j.at("reduced").at("text") == "3*L - 5*C1 + 3*V1");
}

TEST_CASE("degree from presets and files")
{
    // d = 19 over P2 in P9: v1 = 6h, v2 = 17h^2
    auto r = invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--base", "P2", "--param", "x=6",
                     "--param", "y=17", "--format", "structured"});
    REQUIRE(r.code == exit_ok);
    const Json j = Json::parse(r.out);
    REQUIRE(j.contains("integer"));

    const std::string file = temp_file("inflect_cli_p2.json",
                                       R"({"dimension": 2, "values": {"c1^2": 9, "c2": 3, "c1 v1": 18,
                                           "v1^2": 36, "v2": 17}})");
    auto f = invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--data", file, "--format",
                     "structured"});
    REQUIRE(f.code == exit_ok);
    CHECK(Json::parse(f.out).at("integer") == j.at("integer"));

    // relative paths are looked up under the data directory
    setenv(data_dir_env, std::filesystem::temp_directory_path().c_str(), 1);
    auto g = invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--data", "inflect_cli_p2.json",
                     "--format", "structured"});
    unsetenv(data_dir_env);
    CHECK(g.code == exit_ok);

    const std::string partial = temp_file("inflect_cli_partial.json", R"({"dimension": 2, "values": {"c2": 3}})");
    auto h = invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--data", partial});
    CHECK(h.code == exit_incomplete);
    CHECK(h.err.find("c1^2") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"rank", "--n", "3", "--m", "2"}).code == exit_usage);
    CHECK(invoke({"rank", "--n", "2", "--m", "3", "--k", "2"}).code == exit_usage);
    CHECK(invoke({"rank", "--n", "3", "--m", "2", "--k", "2", "--seed", "4"}).code == exit_usage);
    CHECK(invoke({"rank", "--n", "3", "--m", "2", "--k", "2", "--format", "xml"}).code == exit_usage);
    CHECK(invoke({"rank", "class"}).code == exit_usage);
    CHECK(invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--base", "P2", "--data", "x.json"}).code ==
          exit_usage);
    CHECK(invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9"}).code == exit_usage);
    CHECK(invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--base", "Mars"}).code == exit_usage);
    CHECK(invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--base", "P2", "--param", "q=1"}).code ==
          exit_usage);
    CHECK(invoke({"degree", "--n", "3", "--m", "2", "--k", "2", "--N", "9", "--base", "P2", "--param", "x"}).code ==
          exit_usage);
    CHECK(invoke({"jet", "spec.json", "--chart", "flag"}).code == exit_usage);
    CHECK(invoke({"jet"}).code == exit_usage);
    CHECK(invoke({"jet", "--chart", "nothing"}).code == exit_usage);
    CHECK(invoke({"scan", "Mars"}).code == exit_usage);
    CHECK(invoke({"verify", "--filter", "no-such-check"}).code == exit_usage);
    const auto help = invoke({"--help"});
    CHECK(help.code == exit_ok);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("scan")
{
    auto r = invoke({"scan", "P2_N10"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("verdict:    empty (stable") != std::string::npos);
    r = invoke({"scan", "P2_N9", "--format", "structured"});
    const ScanReport report = scan_report_from_json(Json::parse(r.out));
    REQUIRE(report.survivors.size() == 1);
    CHECK(report.survivors[0].point.at("d") == 10);
    r = invoke({"scan", "P3", "--ell", "2"});
    CHECK(r.out.find("survivor:   d=24 x=4 y=5") != std::string::npos);
    CHECK(invoke({"scan"}).out.find("Q3 --ell 4") != std::string::npos);
}

TEST_CASE("jet")
{
    auto r = invoke({"jet", "--chart", "split_plane_scroll", "--minors", "9"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("rank:   9", 0) == 0);
    CHECK(r.out.find("content: v^3") != std::string::npos);

    const std::string spec = temp_file("inflect_cli_spec.json",
                                       R"({"variables": ["u", "v"], "coordinates": ["1", "u", "v", "u*v"], "seed": 3})");
    r = invoke({"jet", spec, "--format", "structured", "--trials", "2"});
    REQUIRE(r.code == exit_ok);
    const JetRankReport rep = jet_report_from_json(Json::parse(r.out));
    CHECK(rep.rank == 4);
    CHECK(rep.seed == 3);
    CHECK(rep.trials == 2);

    // same seed, same report
    CHECK(invoke({"jet", spec, "--format", "structured"}).out == invoke({"jet", spec, "--format", "structured"}).out);

    r = invoke({"jet", "--chart", "bordiga", "--minors", "12"});
    CHECK(r.code == exit_usage);
}

TEST_CASE("verify")
{
    auto r = invoke({"verify", "--filter", "abelian"});
    CHECK(r.code == exit_ok);
    std::istringstream lines(r.out);
    std::string line, previous;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("PASS", 0) != 0)
            continue;
        ++rows;
        CHECK(line > previous);
        previous = line;
    }
    CHECK(rows > 10);
    CHECK(r.out.find("kernel.") == std::string::npos);

    r = invoke({"verify", "--filter", "abelian", "--inject-fault", "abelian.flexes.n3.k2"});
    CHECK(r.code == exit_check_failed);
    CHECK(r.out.find("FAIL  abelian.flexes.n3.k2") != std::string::npos);

    r = invoke({"verify", "--filter", "jet", "--format", "structured"});
    const Json j = Json::parse(r.out);
    CHECK(j.at("failed") == 0);
    CHECK(j.at("rows").size() > 10);
}

TEST_CASE("verify faults in every kind of check")
{
    for (const char* id : {"scan.P2_N10", "jet.segre.2x2", "jet.bordiga.content", "jet.product.veronese",
                           "jet.split_plane_scroll.content", "kernel.sym2_twist_inverse.m2"}) {
        CAPTURE(id);
        VerifyOptions o;
        o.filter = id;
        o.inject_fault = id;
        const auto rows = run_verify(o);
        REQUIRE(!rows.empty());
        for (const auto& row : rows)
            CHECK(row.pass == (row.id != id));
    }
    VerifyOptions bad;
    bad.inject_fault = "nothing.here";
    CHECK_THROWS_AS(run_verify(bad), InvalidInput);
}

TEST_CASE("run config round trip")
{
    RunConfig c;
    c.command = "degree";
    c.n = 3;
    c.m = 2;
    c.k = 2;
    c.N = 9;
    c.base = "Fe";
    c.params = {{"e", "1"}, {"a", "2"}};
    c.format = "structured";
    CHECK(run_config_from_json(Json::parse(to_json(c).dump())) == c);

    RunConfig j;
    j.command = "jet";
    j.chart = "flag";
    j.seed = 18446744073709551615ull;
    j.trials = 3;
    j.minors = 8;
    CHECK(run_config_from_json(Json::parse(to_json(j).dump())) == j);

    std::ostringstream sink;
    const char* argv[] = {"inflect", "verify", "--filter", "scan", "--format", "structured"};
    const auto parsed = parse_arguments(6, argv, sink);
    REQUIRE(parsed);
    CHECK(parsed->filter == "scan");
    CHECK(run_config_from_json(to_json(*parsed)) == *parsed);

    Json broken = to_json(c);
    broken["data"] = "x.json";
    CHECK_THROWS_AS(run_config_from_json(broken), InvalidInput);
    broken = to_json(c);
    broken["format"] = "xml";
    CHECK_THROWS_AS(run_config_from_json(broken), InvalidInput);
    CHECK_THROWS_AS(run_config_from_json(Json::object()), InvalidInput);
}
