#include "inflect/cli.hpp"

#include "inflect/errors.hpp"
#include "inflect/presets.hpp"
#include "inflect/scroll_model.hpp"
#include "inflect/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>

namespace inflect::cli {

namespace {

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
}

template <typename T>
void get(const Json& j, const char* key, std::optional<T>& v)
{
    if (j.contains(key) && !j.at(key).is_null())
        v = j.at(key).get<T>();
}

const std::map<std::string, std::function<JetProbeSpec()>>& charts()
{
    static const std::map<std::string, std::function<JetProbeSpec()>> table{
        {"bordiga", [] { return bordiga_chart(); }},
        {"cubic_scroll", [] { return cubic_scroll_chart(); }},
        {"split_plane_scroll", [] { return split_plane_scroll_chart(); }},
        {"flag", [] { return flag_chart(); }},
        {"p1_power3", [] { return p1_power_chart(3); }},
        {"p1_power4", [] { return p1_power_chart(4); }},
        {"p1_power5", [] { return p1_power_chart(5); }},
        {"segre1x1", [] { return segre_chart(1, 1); }},
        {"segre2x1", [] { return segre_chart(2, 1); }},
        {"segre2x2", [] { return segre_chart(2, 2); }},
        {"segre3x1", [] { return segre_chart(3, 1); }},
        {"veronese", [] { return veronese_chart(); }},
    };
    return table;
}

bool structured(const RunConfig& c)
{
    return c.format == "structured";
}

ScrollSetup setup_of(const RunConfig& c, bool need_N)
{
    if (!c.n || !c.m || !c.k || (need_N && !c.N))
        throw InvalidInput(c.command + " needs --n --m --k" + (need_N ? " --N" : ""));
    ScrollSetup s{*c.n, *c.m, *c.k, c.N.value_or(0)};
    s.validate();
    return s;
}

std::string resolve_data_path(const std::string& path)
{
    namespace fs = std::filesystem;
    if (fs::exists(path) || fs::path(path).is_absolute())
        return path;
    if (const char* dir = std::getenv(data_dir_env)) {
        const fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate))
            return candidate.string();
    }
    return path;
}

NumericalBaseData base_data_of(const RunConfig& c)
{
    NumericalBaseData data = c.base ? preset(*c.base) : base_data_from_json(read_json_file(resolve_data_path(*c.data)));
    if (c.params.empty())
        return data;
    std::map<std::string, Rational> values;
    for (const auto& [name, text] : c.params) {
        if (!data.parameter_ring()->find(name))
            throw InvalidInput("base data has no parameter '" + name + "'");
        values[name] = parse_rational(text);
    }
    return data.specialize(values);
}

int cmd_rank(const RunConfig& c, std::ostream& out)
{
    const ScrollSetup s = setup_of(c, false);
    const Integer r = max_rank(s.n, s.m, s.k);
    Json orders = Json::array();
    for (int h = 0; h <= s.k; ++h) {
        const auto [pure, mixed] = derivative_count(s.n, s.m, h);
        orders.push_back({{"order", h}, {"base", pure.get_str()}, {"mixed", mixed.get_str()},
                          {"total", Integer(pure + mixed).get_str()}});
    }
    if (structured(c)) {
        out << Json{{"n", s.n}, {"m", s.m}, {"k", s.k}, {"r_k", r.get_str()}, {"orders", orders}}.dump(2) << '\n';
        return exit_ok;
    }
    out << "r_" << s.k << " = " << r.get_str() << '\n';
    out << "order  base  mixed  total\n";
    for (const auto& o : orders)
        out << std::setw(5) << o["order"].get<int>() << std::setw(6) << o["base"].get<std::string>()
            << std::setw(7) << o["mixed"].get<std::string>() << std::setw(7) << o["total"].get<std::string>()
            << '\n';
    return exit_ok;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err)
{
    for (const auto& w : warnings)
        err << "warning: " << w << '\n';
}

int cmd_class(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const InflectionClass ic = inflection_class(setup_of(c, true));
    print_warnings(ic.warnings, err);
    if (structured(c)) {
        out << to_json(ic).dump(2) << '\n';
        return exit_ok;
    }
    out << "codimension " << ic.codim.ell << (ic.codim.in_range ? "" : " (out of range)") << '\n';
    out << "unreduced: " << ic.unreduced.to_string() << '\n';
    out << "reduced:   " << ic.reduced.to_string() << '\n';
    return exit_ok;
}

int cmd_degree(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (!c.base && !c.data)
        throw InvalidInput("degree needs --base or --data");
    const DegreeResult d = degree_of_inflection(setup_of(c, true), base_data_of(c));
    print_warnings(d.warnings, err);
    if (structured(c)) {
        out << to_json(d).dump(2) << '\n';
        return exit_ok;
    }
    out << "symbolic: " << d.symbolic.to_string() << '\n';
    out << "degree:   " << d.value.to_string() << '\n';
    return exit_ok;
}

std::string point_text(const ScanPoint& p)
{
    std::string s;
    for (const auto& [k, v] : p)
        s += (s.empty() ? "" : " ") + k + "=" + to_string(v);
    return s;
}

int cmd_scan(const RunConfig& c, std::ostream& out)
{
    if (!c.family) {
        for (const auto& f : scan_families())
            out << f.name << (f.ell ? " --ell " + std::to_string(f.ell) : std::string()) << "  " << f.description
                << '\n';
        return exit_ok;
    }
    const ScanReport r = run_scan(scan_problem(*c.family, c.ell.value_or(0)));
    if (structured(c)) {
        out << to_json(r).dump(2) << '\n';
        return exit_ok;
    }
    out << "family:     " << r.family << '\n' << "equation:   " << r.equation << " = 0, solved for " << r.solved << '\n';
    for (const auto& b : r.bounds)
        out << "bound:      " << b.lo << " <= " << b.variable << " <= " << b.hi << "  (" << b.reason << ")\n";
    out << "candidates: " << r.candidates << '\n';
    for (const auto& [why, count] : r.rejections)
        out << "rejected:   " << count << " by " << why << '\n';
    for (const auto& s : r.survivors)
        out << "survivor:   " << point_text(s.point) << (s.annotation.empty() ? "" : "  " + s.annotation) << '\n';
    for (const auto& p : r.degenerate)
        out << "degenerate: " << point_text(p) << '\n';
    if (!r.condition.empty())
        out << "condition:  " << r.condition << '\n';
    out << "verdict:    " << to_string(r.verdict);
    if (r.stable)
        out << (*r.stable ? " (stable under doubled bounds)" : " (NOT stable under doubled bounds)");
    out << '\n';
    return exit_ok;
}

int cmd_jet(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    JetProbeSpec spec;
    if (c.chart) {
        const auto it = charts().find(*c.chart);
        if (it == charts().end())
            throw InvalidInput("unknown chart '" + *c.chart + "'");
        spec = it->second();
    } else if (c.spec) {
        spec = jet_spec_from_json(read_json_file(*c.spec));
    } else {
        throw InvalidInput("jet needs a spec file or --chart");
    }
    if (c.k)
        spec.k = *c.k;
    if (c.seed)
        spec.seed = *c.seed;
    if (c.trials)
        spec.trials = *c.trials;
    const JetChart chart(spec);
    const JetRankReport r = generic_jet_rank(chart);
    print_warnings(r.warnings, err);
    std::optional<InflectionEquations> eq;
    if (c.minors)
        eq = inflection_equations(chart, static_cast<std::size_t>(*c.minors));
    if (structured(c)) {
        Json j = to_json(r);
        if (eq)
            j["equations"] = to_json(*eq);
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "rank:   " << r.rank << "  (k=" << r.k << ", " << r.trials << " trials, seed " << r.seed << ", "
        << r.confidence << ")\n";
    out << "trials:";
    for (auto t : r.per_trial)
        out << ' ' << t;
    out << '\n';
    if (eq) {
        out << "minors: " << eq->minor_count << " of size " << eq->target_rank << ", " << eq->minors.size()
            << " nonzero\n";
        out << "content: " << eq->content.to_string() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    VerifyOptions options;
    options.filter = c.filter;
    options.inject_fault = c.inject_fault;
    const auto rows = run_verify(options);
    std::size_t failed = 0;
    for (const auto& r : rows)
        failed += r.pass ? 0 : 1;
    if (structured(c)) {
        Json list = Json::array();
        for (const auto& r : rows)
            list.push_back({{"id", r.id}, {"group", r.group}, {"pass", r.pass}, {"expected", r.expected},
                            {"actual", r.actual}, {"note", r.note}});
        out << Json{{"rows", list}, {"passed", rows.size() - failed}, {"failed", failed}}.dump(2) << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& r : rows)
            width = std::max(width, r.id.size());
        for (const auto& r : rows) {
            out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id
                << std::right;
            if (!r.pass) {
                out << "  expected: " << r.expected << "  actual: " << r.actual;
                if (!r.note.empty())
                    out << "  (" << r.note << ")";
            }
            out << '\n';
        }
        out << rows.size() - failed << " passed, " << failed << " failed\n";
    }
    return failed ? exit_check_failed : exit_ok;
}

}  // namespace

Json to_json(const RunConfig& c)
{
    Json j{{"command", c.command}};
    put(j, "n", c.n);
    put(j, "m", c.m);
    put(j, "k", c.k);
    put(j, "N", c.N);
    put(j, "base", c.base);
    put(j, "data", c.data);
    if (!c.params.empty())
        j["params"] = c.params;
    j["format"] = c.format;
    put(j, "seed", c.seed);
    put(j, "trials", c.trials);
    if (!c.filter.empty())
        j["filter"] = c.filter;
    put(j, "family", c.family);
    put(j, "ell", c.ell);
    put(j, "spec", c.spec);
    put(j, "chart", c.chart);
    put(j, "minors", c.minors);
    put(j, "inject_fault", c.inject_fault);
    return j;
}

RunConfig run_config_from_json(const Json& j)
{
    try {
        RunConfig c;
        c.command = j.at("command").get<std::string>();
        get(j, "n", c.n);
        get(j, "m", c.m);
        get(j, "k", c.k);
        get(j, "N", c.N);
        get(j, "base", c.base);
        get(j, "data", c.data);
        if (j.contains("params"))
            c.params = j.at("params").get<std::map<std::string, std::string>>();
        c.format = j.value("format", c.format);
        get(j, "seed", c.seed);
        get(j, "trials", c.trials);
        c.filter = j.value("filter", c.filter);
        get(j, "family", c.family);
        get(j, "ell", c.ell);
        get(j, "spec", c.spec);
        get(j, "chart", c.chart);
        get(j, "minors", c.minors);
        get(j, "inject_fault", c.inject_fault);
        if (c.format != "pretty" && c.format != "structured")
            throw InvalidInput("format must be pretty or structured");
        if (c.base && c.data)
            throw InvalidInput("base and data are exclusive");
        return c;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed run config: ") + e.what());
    }
}

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out)
{
    RunConfig c;
    CLI::App app{"Inflectional loci of scrolls: classes, degrees, scans and jet probes"};
    app.require_subcommand(1, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "pretty or structured (JSON)")
            ->check(CLI::IsMember({"pretty", "structured"}));
    };
    auto add_setup = [&](CLI::App* sub, bool with_N) {
        sub->add_option("--n", c.n, "dimension of X")->required();
        sub->add_option("--m", c.m, "dimension of the base Y")->required();
        sub->add_option("--k", c.k, "osculation order")->required();
        if (with_N)
            sub->add_option("--N", c.N, "dimension of the ambient projective space")->required();
    };

    auto* rank = app.add_subcommand("rank", "maximal rank r_k of the k-th jet map, by derivative order");
    add_setup(rank, false);
    add_format(rank);

    auto* klass = app.add_subcommand("class", "class of the k-th inflectional locus");
    add_setup(klass, true);
    add_format(klass);

    auto* degree = app.add_subcommand("degree", "degree of the k-th inflectional locus");
    add_setup(degree, true);
    auto* base = degree->add_option("--base", c.base, "bundled base preset");
    auto* data = degree->add_option("--data", c.data,
                                    std::string("base data file (JSON); relative paths also tried under $") +
                                        data_dir_env);
    base->excludes(data);
    std::vector<std::string> params;
    degree->add_option("--param", params, "preset parameter value, name=value (repeatable)");
    add_format(degree);

    auto* scan = app.add_subcommand("scan", "exhaustive diophantine scan for a family (no family: list)");
    scan->add_option("family", c.family, "family name");
    scan->add_option("--ell", c.ell, "codimension, for the P3 and Q3 families");
    add_format(scan);

    auto* jet = app.add_subcommand("jet", "generic jet rank of a parameterized chart");
    auto* spec = jet->add_option("spec", c.spec, "probe spec file (JSON)");
    auto* chart = jet->add_option("--chart", c.chart, "bundled chart instead of a spec file");
    spec->excludes(chart);
    jet->add_option("--k", c.k, "osculation order (overrides the spec)");
    jet->add_option("--seed", c.seed, "random seed (overrides the spec)");
    jet->add_option("--trials", c.trials, "number of random points (overrides the spec)");
    jet->add_option("--minors", c.minors, "also compute the minors of this size and their content");
    add_format(jet);

    auto* verify = app.add_subcommand("verify", "regression table of every bundled check");
    verify->add_option("--filter", c.filter, "run checks whose id contains TEXT or whose group is TEXT");
    verify->add_option("--inject-fault", c.inject_fault, "corrupt the named check");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        std::ostringstream ignored;
        app.exit(e, out, ignored);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(e.what());
    }
    c.command = app.get_subcommands().front()->get_name();
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidInput("--param expects name=value, got '" + p + "'");
        if (!c.params.emplace(p.substr(0, eq), p.substr(eq + 1)).second)
            throw InvalidInput("--param " + p.substr(0, eq) + " given twice");
    }
    if (!c.params.empty() && !c.base && !c.data)
        throw InvalidInput("--param needs --base or --data");
    return c;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.command == "rank")
            return cmd_rank(c, out);
        if (c.command == "class")
            return cmd_class(c, out, err);
        if (c.command == "degree")
            return cmd_degree(c, out, err);
        if (c.command == "scan")
            return cmd_scan(c, out);
        if (c.command == "jet")
            return cmd_jet(c, out, err);
        if (c.command == "verify")
            return cmd_verify(c, out);
        throw InvalidInput("unknown command '" + c.command + "'");
    } catch (const IncompleteData& e) {
        err << "error: " << e.what() << '\n';
        return exit_incomplete;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_internal;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::optional<RunConfig> c;
    try {
        c = parse_arguments(argc, argv, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return exit_usage;
    }
    return c ? execute(*c, out, err) : exit_ok;
}

std::vector<std::string> bundled_charts()
{
    std::vector<std::string> names;
    for (const auto& [name, make] : charts())
        names.push_back(name);
    return names;
}

}  // namespace inflect::cli
