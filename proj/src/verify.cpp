#include "inflect/verify.hpp"

#include "inflect/closed_forms.hpp"
#include "inflect/errors.hpp"
#include "inflect/jet_probe.hpp"
#include "inflect/poly_gcd.hpp"
#include "inflect/uninflected_search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <thread>

namespace inflect {

namespace {

struct Check {
    std::string id;
    std::string group;
    std::function<VerifyRow(bool corrupt)> run;
};

// Bumps the first digit of a template, e.g. "19d + ..." -> "29d + ...".
std::string corrupt_text(std::string text)
{
    for (char& c : text)
        if (std::isdigit(static_cast<unsigned char>(c))) {
            c = c == '9' ? '1' : static_cast<char>(c + 1);
            return text;
        }
    return text + " + 1";
}

VerifyRow row(const std::string& id, const std::string& group, bool pass, std::string expected, std::string actual)
{
    return {id, group, pass, std::move(expected), std::move(actual), {}};
}

std::string point_text(const ScanPoint& p)
{
    std::string out = "(";
    for (const auto& [k, v] : p)
        out += (out.size() > 1 ? ", " : "") + k + "=" + to_string(v);
    return out + ")";
}

std::string survivors_text(const ScanReport& r)
{
    std::string out = "{";
    for (const auto& s : r.survivors)
        out += (out.size() > 1 ? " " : "") + point_text(s.point);
    return out + "}";
}

void add_scan(std::vector<Check>& out, const std::string& family, int ell, ScanVerdict verdict,
              std::vector<ScanPoint> survivors, bool symbolic)
{
    const std::string id = "scan." + family + (ell ? ".ell" + std::to_string(ell) : std::string());
    out.push_back({id, "scan", [=](bool corrupt) {
                       std::optional<std::string> override;
                       if (corrupt)
                           override = corrupt_text(scan_problem(family, ell).equation.to_string());
                       const ScanProblem p = scan_problem(family, ell, override);
                       const ScanReport r = run_scan(p);
                       std::string expected = to_string(verdict), actual = to_string(r.verdict);
                       bool pass = r.verdict == verdict && r.stable == true;
                       if (!survivors.empty()) {
                           std::vector<ScanPoint> got;
                           for (const auto& s : r.survivors)
                               got.push_back(s.point);
                           pass = pass && got == survivors;
                           std::string want = "{";
                           for (const auto& s : survivors)
                               want += (want.size() > 1 ? " " : "") + point_text(s);
                           expected += " " + want + "}";
                           actual += " " + survivors_text(r);
                       }
                       if (symbolic) {
                           const bool ok = exceptional_condition_holds(p);
                           pass = pass && ok;
                           expected += ", condition verified";
                           actual += ok ? ", condition verified" : ", condition fails";
                       }
                       if (!r.stable.value_or(false))
                           actual += ", unstable under doubled bounds";
                       return row(id, "scan", pass, expected, actual);
                   }});
}

void add_rank(std::vector<Check>& out, const std::string& name, JetProbeSpec spec, std::size_t expected)
{
    const std::string id = "jet." + name;
    out.push_back({id, "jet", [=](bool corrupt) {
                       const std::size_t want = expected + (corrupt ? 1 : 0);
                       const auto r = generic_jet_rank(spec);
                       return row(id, "jet", r.rank == want, "rank " + std::to_string(want),
                                  "rank " + std::to_string(r.rank));
                   }});
}

void add_content(std::vector<Check>& out, const std::string& name, JetProbeSpec spec, std::size_t r,
                 std::string content)
{
    const std::string id = "jet." + name;
    out.push_back({id, "jet", [=](bool corrupt) {
                       const JetChart chart(spec);
                       const auto eq = inflection_equations(chart, r);
                       const std::string want = corrupt ? corrupt_text(content) : content;
                       const bool pass = eq.content == Polynomial::parse(chart.ring(), want);
                       return row(id, "jet", pass, "content " + want, "content " + eq.content.to_string());
                   }});
}

void add_product(std::vector<Check>& out, const std::string& name, JetProbeSpec spec)
{
    const std::string id = "jet.product." + name;
    out.push_back({id, "jet", [=](bool corrupt) {
                       const auto p = product_rank_identity(spec, 1);
                       const std::size_t want = p.predicted + (corrupt ? 1 : 0);
                       return row(id, "jet", p.direct == want, "predicted " + std::to_string(want),
                                  "direct " + std::to_string(p.direct));
                   }});
}

std::vector<Check> all_checks()
{
    std::vector<Check> out;
    for (const auto& record : formula_registry())
        out.push_back({record.id, record.group, [&record](bool corrupt) {
                           FormulaRecord r = record;
                           if (corrupt)
                               r.template_text = corrupt_text(r.template_text);
                           const CheckOutcome o = r.run();
                           return VerifyRow{r.id, r.group, o.pass, o.expected, o.actual, o.note};
                       }});

    add_scan(out, "P2_N10", 0, ScanVerdict::empty, {}, false);
    add_scan(out, "P2_N9", 0, ScanVerdict::empty_after_exclusions, {{{"c2", 6}, {"d", 10}, {"v", 4}}}, false);
    add_scan(out, "P3", 2, ScanVerdict::empty_after_exclusions, {{{"d", 24}, {"x", 4}, {"y", 5}}}, false);
    add_scan(out, "P3", 3, ScanVerdict::empty, {}, false);
    add_scan(out, "P3", 4, ScanVerdict::empty, {}, false);
    for (int ell = 2; ell <= 4; ++ell)
        add_scan(out, "Q3", ell, ScanVerdict::empty, {}, false);
    add_scan(out, "Fe", 0, ScanVerdict::exceptional_condition, {}, true);
    add_scan(out, "ProductsBxP1", 0, ScanVerdict::exceptional_condition, {}, true);

    add_rank(out, "segre.1x1", segre_chart(1, 1), 4);
    add_rank(out, "segre.2x1", segre_chart(2, 1), 6);
    add_rank(out, "segre.2x2", segre_chart(2, 2), 9);
    add_rank(out, "segre.3x1", segre_chart(3, 1), 8);
    for (int n = 3; n <= 5; ++n)
        add_rank(out, "p1_power." + std::to_string(n), p1_power_chart(n),
                 static_cast<std::size_t>(binomial(n + 2, 2).get_si() - n));
    add_rank(out, "flag", flag_chart(), 8);
    add_rank(out, "bordiga", bordiga_chart(), 9);
    add_rank(out, "split_plane_scroll", split_plane_scroll_chart(), 9);
    add_content(out, "split_plane_scroll.content", split_plane_scroll_chart(), 9, "v^3");
    add_content(out, "cubic_scroll.content", cubic_scroll_chart(), 5, "v");
    out.push_back({"jet.bordiga.content", "jet", [](bool corrupt) {
                       const JetChart chart(bordiga_chart());
                       const auto eq = inflection_equations(chart, 9);
                       const Polynomial factor = Polynomial::parse(chart.ring(), corrupt ? "x" : "y");
                       const bool pass = divide_exact(eq.content, factor).has_value();
                       return row("jet.bordiga.content", "jet", pass,
                                  "every 9x9 minor divisible by " + factor.to_string(),
                                  "content " + eq.content.to_string());
                   }});
    add_product(out, "veronese", veronese_chart());
    add_product(out, "cubic_scroll", cubic_scroll_chart());
    for (int degree = 2; degree <= 4; ++degree)
        add_product(out, "rnc" + std::to_string(degree), rational_normal_curve(degree, degree));

    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return out;
}

}  // namespace

std::vector<std::string> verify_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : all_checks())
        ids.push_back(c.id);
    return ids;
}

std::vector<VerifyRow> run_verify(const VerifyOptions& options)
{
    std::vector<Check> selected;
    bool fault_found = false;
    for (auto& c : all_checks()) {
        fault_found = fault_found || (options.inject_fault && c.id == *options.inject_fault);
        if (options.filter.empty() || c.id.find(options.filter) != std::string::npos || c.group == options.filter)
            selected.push_back(std::move(c));
    }
    if (selected.empty())
        throw InvalidInput("filter '" + options.filter + "' selects no checks");
    if (options.inject_fault && !fault_found)
        throw InvalidInput("no check named '" + *options.inject_fault + "'");

    std::vector<VerifyRow> rows(selected.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::clamp<unsigned>(
        options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency()), 1u,
        static_cast<unsigned>(selected.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < selected.size(); i = next++) {
                const Check& c = selected[i];
                const bool corrupt = options.inject_fault && c.id == *options.inject_fault;
                try {
                    rows[i] = c.run(corrupt);
                } catch (const std::exception& e) {
                    rows[i] = {c.id, c.group, false, {}, {}, e.what()};
                }
            }
        });
    for (auto& t : pool)
        t.join();
    return rows;
}

}  // namespace inflect
