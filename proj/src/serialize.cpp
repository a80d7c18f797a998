#include "inflect/serialize.hpp"

#include "inflect/errors.hpp"

#include <fstream>

namespace inflect {

namespace {

template <typename F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

Json point_to_json(const ScanPoint& p)
{
    Json j = Json::object();
    for (const auto& [k, v] : p)
        j[k] = to_json(v);
    return j;
}

ScanPoint point_from_json(const Json& j)
{
    ScanPoint p;
    for (const auto& [k, v] : j.items())
        p[k] = rational_from_json(v);
    return p;
}

}  // namespace

Json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw InvalidInput("rational must be a string or an integer");
    return parse_rational(j.get<std::string>());
}

Json to_json(const Ring& ring)
{
    Json vars = Json::array();
    for (const auto& v : ring.variables())
        vars.push_back({{"name", v.name}, {"weight", v.weight}});
    Json caps = Json::array();
    for (const auto& c : ring.caps())
        caps.push_back({{"variables", c.variables}, {"max_weight", c.max_weight}});
    return {{"variables", vars}, {"caps", caps}};
}

RingPtr ring_from_json(const Json& j)
{
    return guarded("ring", [&] {
        std::vector<Variable> vars;
        for (const auto& v : j.at("variables"))
            vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
        std::vector<WeightCap> caps;
        if (j.contains("caps"))
            for (const auto& c : j.at("caps")) {
                WeightCap cap{c.at("variables").get<std::vector<std::size_t>>(), c.at("max_weight").get<int>()};
                for (std::size_t i : cap.variables)
                    if (i >= vars.size())
                        throw InvalidInput("weight cap refers to variable " + std::to_string(i));
                caps.push_back(std::move(cap));
            }
        return make_ring(std::move(vars), std::move(caps));
    });
}

Json to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return {{"ring", to_json(*p.ring())}, {"terms", terms}, {"text", p.to_string()}};
}

Polynomial polynomial_from_json(const Json& j)
{
    return guarded("polynomial", [&] {
        const RingPtr ring = ring_from_json(j.at("ring"));
        Polynomial p(ring);
        for (const auto& t : j.at("terms")) {
            const auto e = t.at("exponents").get<Exponents>();
            if (e.size() != ring->size())
                throw InvalidInput("exponent vector length does not match the ring");
            for (int x : e)
                if (x < 0)
                    throw InvalidInput("negative exponent");
            Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
            if (c.get_den() == 0)
                throw InvalidInput("zero denominator");
            c.canonicalize();
            p.add_term(e, c);
        }
        return p;
    });
}

Json to_json(const GradedClass& c)
{
    Json j = to_json(c.polynomial());
    j["truncation"] = c.truncation();
    return j;
}

GradedClass graded_class_from_json(const Json& j)
{
    return guarded("class", [&] { return GradedClass(polynomial_from_json(j), j.at("truncation").get<int>()); });
}

Json to_json(const NumericalBaseData& data)
{
    Json params = Json::array();
    for (const auto& v : data.parameter_ring()->variables())
        params.push_back(v.name);
    Json values = Json::object();
    for (const auto& [k, v] : data.assignments())
        values[k] = v.to_string();
    return {{"dimension", data.dimension()}, {"parameters", params}, {"values", values}};
}

NumericalBaseData base_data_from_json(const Json& j)
{
    return guarded("base data", [&] {
        std::vector<std::string> params;
        if (j.contains("parameters"))
            params = j.at("parameters").get<std::vector<std::string>>();
        NumericalBaseData data(j.at("dimension").get<int>(), params);
        for (const auto& [k, v] : j.at("values").items()) {
            if (v.is_number_integer())
                data.set(k, Rational(v.get<long>()));
            else
                data.set(k, std::string_view(v.get_ref<const std::string&>()));
        }
        return data;
    });
}

Json to_json(const ScrollSetup& s)
{
    return {{"n", s.n}, {"m", s.m}, {"k", s.k}, {"N", s.N}};
}

ScrollSetup setup_from_json(const Json& j)
{
    return guarded("setup", [&] {
        return ScrollSetup{j.at("n").get<int>(), j.at("m").get<int>(), j.at("k").get<int>(), j.at("N").get<int>()};
    });
}

Json to_json(const InflectionClass& c)
{
    return {{"setup", to_json(c.setup)},
            {"codimension", c.codim.ell},
            {"in_range", c.codim.in_range},
            {"unreduced", to_json(c.unreduced)},
            {"reduced", to_json(c.reduced)},
            {"warnings", c.warnings}};
}

Json to_json(const DegreeResult& d)
{
    Json j{{"symbolic", to_json(d.symbolic)}, {"value", to_json(d.value)}, {"warnings", d.warnings}};
    if (d.value.is_constant())
        j["integer"] = to_string(d.value.constant_term());
    return j;
}

Json to_json(const ScanReport& r)
{
    Json bounds = Json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"variable", b.variable},
                          {"lo", b.lo},
                          {"hi", b.hi},
                          {"reason", b.reason},
                          {"witness", b.witness},
                          {"cauchy", b.cauchy},
                          {"last_feasible", b.last_feasible}});
    Json survivors = Json::array();
    for (const auto& s : r.survivors)
        survivors.push_back({{"point", point_to_json(s.point)},
                             {"annotation", s.annotation},
                             {"excluded", s.excluded},
                             {"exceptional", s.exceptional}});
    Json degenerate = Json::array();
    for (const auto& p : r.degenerate)
        degenerate.push_back(point_to_json(p));
    Json j{{"family", r.family},     {"equation", r.equation},   {"solved", r.solved},
           {"bounds", bounds},       {"candidates", r.candidates}, {"survivors", survivors},
           {"degenerate", degenerate}, {"rejections", r.rejections}, {"verdict", to_string(r.verdict)},
           {"condition", r.condition}};
    j["stable"] = r.stable ? Json(*r.stable) : Json(nullptr);
    return j;
}

ScanReport scan_report_from_json(const Json& j)
{
    return guarded("scan report", [&] {
        ScanReport r;
        r.family = j.at("family").get<std::string>();
        r.equation = j.at("equation").get<std::string>();
        r.solved = j.at("solved").get<std::string>();
        for (const auto& b : j.at("bounds"))
            r.bounds.push_back({b.at("variable").get<std::string>(), b.at("lo").get<long>(), b.at("hi").get<long>(),
                                b.at("reason").get<std::string>(), b.at("witness").get<std::string>(),
                                b.at("cauchy").get<long>(), b.at("last_feasible").get<long>()});
        r.candidates = j.at("candidates").get<long>();
        for (const auto& s : j.at("survivors"))
            r.survivors.push_back({point_from_json(s.at("point")), s.at("annotation").get<std::string>(),
                                   s.at("excluded").get<bool>(), s.at("exceptional").get<bool>()});
        for (const auto& p : j.at("degenerate"))
            r.degenerate.push_back(point_from_json(p));
        r.rejections = j.at("rejections").get<std::map<std::string, long>>();
        r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        r.condition = j.at("condition").get<std::string>();
        if (!j.at("stable").is_null())
            r.stable = j.at("stable").get<bool>();
        return r;
    });
}

Json to_json(const JetProbeSpec& s)
{
    return {{"variables", s.variables}, {"coordinates", s.coordinates}, {"k", s.k},
            {"trials", s.trials},       {"seed", s.seed},               {"height", s.height}};
}

JetProbeSpec jet_spec_from_json(const Json& j)
{
    return guarded("jet probe spec", [&] {
        JetProbeSpec s;
        s.variables = j.at("variables").get<std::vector<std::string>>();
        s.coordinates = j.at("coordinates").get<std::vector<std::string>>();
        s.k = j.value("k", s.k);
        s.trials = j.value("trials", s.trials);
        s.seed = j.value("seed", s.seed);
        s.height = j.value("height", s.height);
        return s;
    });
}

Json to_json(const JetRankReport& r)
{
    return {{"rank", r.rank},   {"per_trial", r.per_trial},   {"seed", r.seed},         {"trials", r.trials},
            {"k", r.k},         {"height", r.height},         {"confidence", r.confidence}, {"warnings", r.warnings}};
}

JetRankReport jet_report_from_json(const Json& j)
{
    return guarded("jet report", [&] {
        JetRankReport r;
        r.rank = j.at("rank").get<std::size_t>();
        r.per_trial = j.at("per_trial").get<std::vector<std::size_t>>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.trials = j.at("trials").get<int>();
        r.k = j.at("k").get<int>();
        r.height = j.at("height").get<long>();
        r.confidence = j.at("confidence").get<std::string>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    });
}

Json to_json(const InflectionEquations& e)
{
    Json factors = Json::array();
    for (const auto& [name, mult] : e.monomial_factors)
        factors.push_back({{"variable", name}, {"multiplicity", mult}});
    return {{"target_rank", e.target_rank},
            {"minor_count", e.minor_count},
            {"nonzero_minors", e.minors.size()},
            {"content", e.content.to_string()},
            {"monomial_factors", factors},
            {"residual", e.residual.to_string()}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

}  // namespace inflect
