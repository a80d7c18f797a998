#include "inflect/uninflected_search.hpp"

#include "inflect/base_data.hpp"
#include "inflect/closed_forms.hpp"
#include "inflect/errors.hpp"
#include "inflect/presets.hpp"
#include "inflect/scroll_model.hpp"

#include <algorithm>
#include <thread>

namespace inflect {

std::string to_string(ScanVerdict v)
{
    switch (v) {
    case ScanVerdict::empty:
        return "empty";
    case ScanVerdict::empty_after_exclusions:
        return "empty_after_exclusions";
    case ScanVerdict::exceptional_condition:
        return "exceptional_condition";
    case ScanVerdict::survivors_listed:
        return "survivors_listed";
    }
    return "unknown";
}

ScanVerdict verdict_from_string(std::string_view text)
{
    for (auto v : {ScanVerdict::empty, ScanVerdict::empty_after_exclusions, ScanVerdict::exceptional_condition,
                   ScanVerdict::survivors_listed})
        if (to_string(v) == text)
            return v;
    throw InvalidInput("unknown scan verdict '" + std::string(text) + "'");
}

bool operator==(const BoundRecord& a, const BoundRecord& b)
{
    return a.variable == b.variable && a.lo == b.lo && a.hi == b.hi && a.reason == b.reason &&
           a.witness == b.witness && a.cauchy == b.cauchy && a.last_feasible == b.last_feasible;
}

bool operator==(const Survivor& a, const Survivor& b)
{
    return a.point == b.point && a.annotation == b.annotation && a.excluded == b.excluded &&
           a.exceptional == b.exceptional;
}

bool ScanReport::operator==(const ScanReport& o) const
{
    return family == o.family && equation == o.equation && solved == o.solved && bounds == o.bounds &&
           candidates == o.candidates && survivors == o.survivors && degenerate == o.degenerate &&
           rejections == o.rejections && verdict == o.verdict && condition == o.condition && stable == o.stable;
}

namespace {

Rational evaluate_at(const Polynomial& p, const ScanPoint& point)
{
    std::vector<Rational> values;
    for (const auto& v : p.ring()->variables()) {
        auto it = point.find(v.name);
        values.push_back(it == point.end() ? Rational(0) : it->second);
    }
    return p.evaluate(values);
}

long ceil_long(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

}  // namespace

BoundRecord derive_bound(const ScanVariable& var)
{
    BoundRecord rec{var.name, var.lo, 0, var.reason, {}, 0, var.lo};
    if (var.hi) {
        rec.hi = *var.hi;
        rec.last_feasible = *var.hi;
        return rec;
    }
    if (!var.bound_witness)
        throw InvalidInput("variable " + var.name + " has neither an upper bound nor a witness");
    const Polynomial& w = *var.bound_witness;
    const std::size_t idx = w.ring()->index(var.name);
    std::vector<Rational> coeff(static_cast<std::size_t>(w.degree_in(idx)) + 1);
    for (const auto& [e, c] : w.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx && e[i] != 0)
                throw InvalidInput("bound witness for " + var.name + " involves other variables");
        coeff[static_cast<std::size_t>(e[idx])] += c;
    }
    const Rational lead = coeff.back();
    if (coeff.size() < 2 || lead <= 0)
        throw InvalidInput("bound witness for " + var.name + " must have positive leading coefficient");
    Rational worst = 0;
    for (std::size_t i = 0; i + 1 < coeff.size(); ++i)
        worst = std::max(worst, Rational(abs(coeff[i] / lead)));
    rec.witness = w.to_string();
    rec.cauchy = ceil_long(1 + worst);
    rec.last_feasible = var.lo;
    for (long x = rec.cauchy; x >= var.lo; --x)
        if (evaluate_at(w, {{var.name, x}}) <= 0) {
            rec.last_feasible = x;
            break;
        }
    rec.hi = rec.last_feasible + 5;
    return rec;
}

namespace {

struct Partial {
    long candidates = 0;
    std::vector<Survivor> survivors;
    std::vector<ScanPoint> degenerate;
    std::map<std::string, long> rejections;
};

struct Linear {
    Polynomial slope, rest;
};

Linear split_linear(const ScanProblem& p)
{
    const std::size_t s = p.ring->index(p.solved);
    if (p.equation.degree_in(s) > 1)
        throw InvalidInput("scan equation is not linear in " + p.solved);
    Linear out{Polynomial(p.ring), Polynomial(p.ring)};
    for (const auto& [e, c] : p.equation.terms()) {
        Exponents f = e;
        f[s] = 0;
        (e[s] == 1 ? out.slope : out.rest).add_term(f, c);
    }
    return out;
}

void scan_point(const ScanProblem& p, const Linear& lin, ScanPoint point, Partial& out)
{
    ++out.candidates;
    const Rational a = evaluate_at(lin.slope, point);
    const Rational b = evaluate_at(lin.rest, point);
    if (a == 0) {
        if (b == 0)
            out.degenerate.push_back(point);
        else
            ++out.rejections["no_solution"];
        return;
    }
    const Rational value = -b / a;
    if (!is_integer(value)) {
        ++out.rejections["integrality"];
        return;
    }
    point[p.solved] = value;
    for (const auto& [name, expr] : p.derived)
        point[name] = evaluate_at(expr, point);
    for (const auto& c : p.constraints)
        if (!c.holds(point)) {
            ++out.rejections[c.name];
            return;
        }
    Survivor s{point, {}, false, false};
    if (p.annotate) {
        const Annotation note = p.annotate(point);
        s.annotation = note.text;
        s.excluded = note.excluded;
    }
    s.exceptional = p.exceptional && p.exceptional->holds(point);
    out.survivors.push_back(std::move(s));
}

void scan_range(const ScanProblem& p, const Linear& lin, const std::vector<BoundRecord>& bounds, long first_lo,
                long first_hi, Partial& out)
{
    ScanPoint point;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == bounds.size()) {
            scan_point(p, lin, point, out);
            return;
        }
        const long lo = i == 0 ? first_lo : bounds[i].lo;
        const long hi = i == 0 ? first_hi : bounds[i].hi;
        for (long x = lo; x <= hi; ++x) {
            point[bounds[i].variable] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Survivor> plain_survivors(const ScanReport& r)
{
    std::vector<Survivor> out;
    for (const auto& s : r.survivors)
        if (!s.exceptional)
            out.push_back(s);
    return out;
}

}  // namespace

ScanReport run_scan(const ScanProblem& problem, const ScanOptions& options)
{
    if (problem.enumerated.empty())
        throw InvalidInput("scan needs at least one enumerated variable");
    const Linear lin = split_linear(problem);

    ScanReport report;
    report.family = problem.family;
    report.equation = problem.equation.to_string();
    report.solved = problem.solved;
    for (const auto& v : problem.enumerated) {
        BoundRecord b = derive_bound(v);
        b.hi = b.lo + (b.hi - b.lo + 1) * options.bound_scale - 1;
        report.bounds.push_back(b);
    }

    const long lo = report.bounds[0].lo, hi = report.bounds[0].hi;
    const long span = std::max(0L, hi - lo + 1);
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::clamp<long>(threads, 1, std::max(1L, span)));
    std::vector<Partial> parts(threads);
    std::vector<std::thread> pool;
    const long chunk = (span + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const long a = lo + t * chunk, b = std::min(hi, a + chunk - 1);
        pool.emplace_back([&, t, a, b] {
            if (a <= b)
                scan_range(problem, lin, report.bounds, a, b, parts[t]);
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& part : parts) {
        report.candidates += part.candidates;
        for (auto& s : part.survivors)
            report.survivors.push_back(std::move(s));
        for (auto& d : part.degenerate)
            report.degenerate.push_back(std::move(d));
        for (const auto& [k, v] : part.rejections)
            report.rejections[k] += v;
    }
    auto by_point = [](const auto& a, const auto& b) { return a.point < b.point; };
    std::sort(report.survivors.begin(), report.survivors.end(), by_point);
    std::sort(report.degenerate.begin(), report.degenerate.end());

    bool any_exceptional = false, all_excluded = true, excluded = false;
    for (const auto& s : report.survivors) {
        any_exceptional = any_exceptional || s.exceptional;
        all_excluded = all_excluded && (s.excluded || s.exceptional);
        excluded = excluded || s.excluded;
    }
    for (const auto& c : problem.constraints)
        if (c.exclusion && report.rejections.count(c.name))
            excluded = true;
    if (!report.degenerate.empty() || !all_excluded) {
        report.verdict = ScanVerdict::survivors_listed;
    } else if (any_exceptional) {
        report.verdict = ScanVerdict::exceptional_condition;
        report.condition = problem.exceptional->text;
    } else {
        report.verdict = excluded ? ScanVerdict::empty_after_exclusions : ScanVerdict::empty;
    }

    if (options.check_stability) {
        ScanOptions wider = options;
        wider.bound_scale *= 2;
        wider.check_stability = false;
        const ScanReport w = run_scan(problem, wider);
        report.stable = w.verdict == report.verdict && plain_survivors(w) == plain_survivors(report);
    }
    return report;
}

bool exceptional_condition_holds(const ScanProblem& problem)
{
    if (!problem.exceptional)
        return false;
    const auto& ex = *problem.exceptional;
    std::vector<Polynomial> images;
    for (const auto& v : problem.ring->variables()) {
        auto it = ex.fixed.find(v.name);
        images.push_back(it == ex.fixed.end() ? Polynomial::variable(problem.ring, v.name)
                                              : Polynomial(problem.ring, it->second));
    }
    const Polynomial restricted = problem.equation.substitute(images, problem.ring);
    if (restricted.is_zero() || ex.condition.is_zero())
        return false;
    const auto& [e, c] = *ex.condition.terms().begin();
    const Rational ratio = restricted.coefficient(e) / c;
    return ratio != 0 && restricted == ex.condition * ratio;
}

// ---------------------------------------------------------------------------
// Families

namespace {

Rational value(const ScanPoint& p, const char* name)
{
    return p.at(name);
}

// Rewrites a polynomial in the preset parameters into the scan ring; parameters
// missing from `images` map to the scan variable of the same name.
Polynomial to_scan(const Polynomial& p, const RingPtr& scan, const std::map<std::string, std::string>& images = {})
{
    std::vector<Polynomial> img;
    for (const auto& v : p.ring()->variables()) {
        auto it = images.find(v.name);
        if (it != images.end())
            img.push_back(Polynomial::parse(scan, it->second));
        else if (scan->find(v.name))
            img.push_back(Polynomial::variable(scan, v.name));
        else
            img.push_back(Polynomial(scan));
    }
    return p.substitute(img, scan);
}

Polynomial engine_degree(const ScrollSetup& s, const char* base)
{
    return degree_of_inflection(s, preset(base)).value;
}

// The closed form evaluated on the preset, with d and the base symbols expanded.
Polynomial closed_form_degree(const ScrollSetup& s, const char* base, std::string_view text)
{
    const ScrollGeometry geo(s.n, s.m);
    return preset(base).evaluate(base_template(geo, text));
}

std::string registry_text(const std::string& id)
{
    for (const auto& r : formula_registry())
        if (r.id == id)
            return r.template_text;
    throw ConsistencyError("formula " + id + " missing from the registry");
}

void require_agreement(const std::string& family, const Polynomial& engine, const Polynomial& closed,
                       const Polynomial& stored)
{
    if (engine == closed && engine == stored)
        return;
    throw ConsistencyError(family + ": scan equation disagreement; engine " + engine.to_string() +
                           ", closed form " + closed.to_string() + ", stored " + stored.to_string());
}

ScanConstraint at_least(const char* var, long bound, std::string name, std::string description,
                        bool exclusion = false)
{
    return {std::move(name), std::move(description),
            [var, bound](const ScanPoint& p) { return value(p, var) >= bound; }, exclusion};
}

ScrollSetup threefold(int N)
{
    return {3, 2, 2, N};
}

ScrollSetup fourfold(int ell)
{
    return {4, 3, 2, 12 + ell};
}

ScanProblem plane_n10(const std::optional<std::string>& stored_text)
{
    ScanProblem p;
    p.family = "P2_N10";
    p.description = "threefold scrolls over P2 in P10, V with c1 = x, c2 = y";
    p.ring = make_plain_ring({"x", "y"});
    const Polynomial engine = to_scan(engine_degree(threefold(10), "P2"), p.ring);
    const Polynomial closed = to_scan(closed_form_degree(threefold(10), "P2", registry_text("threefold.degree.P10")), p.ring);
    const Polynomial stored =
        Polynomial::parse(p.ring, stored_text.value_or("46x^2 - 297x + 534 - 19y"));
    require_agreement(p.family, engine, closed, stored);
    p.equation = stored;
    p.solved = "y";
    p.enumerated.push_back(
        {"x", 1, std::nullopt, Polynomial::parse(p.ring, "27x^2 - 297x + 686"), "degree x^2 - y >= 8 with y solved"});
    p.derived.push_back({"d", Polynomial::parse(p.ring, "x^2 - y")});
    p.constraints.push_back(at_least("d", 8, "minimal_degree", "a nondegenerate threefold in P10 has degree >= 8"));
    return p;
}

ScanProblem plane_n9(const std::optional<std::string>& stored_text)
{
    ScanProblem p;
    p.family = "P2_N9";
    p.description = "threefold scrolls over P2 in P9, V with c1 = v, degree d, c2 = v^2 - d";
    p.ring = make_plain_ring({"v", "d", "c2"});
    const std::map<std::string, std::string> images{{"x", "v"}, {"y", "v^2 - d"}};
    const Polynomial engine = to_scan(engine_degree(threefold(9), "P2"), p.ring, images);
    const Polynomial closed = to_scan(Polynomial::parse(make_plain_ring({"d", "v"}),
                                                        registry_text("threefold.degree.P9.plane")),
                                      p.ring);
    const Polynomial stored = Polynomial::parse(p.ring, stored_text.value_or("9d + 12v^2 - 102v + 126"));
    require_agreement(p.family, engine, closed, stored);
    p.equation = stored;
    p.solved = "d";
    p.enumerated.push_back(
        {"v", 1, std::nullopt, Polynomial::parse(p.ring, "12v^2 - 102v + 189"), "d >= 7 with d solved"});
    p.derived.push_back({"c2", Polynomial::parse(p.ring, "v^2 - d")});
    p.constraints.push_back(at_least("d", 7, "minimal_degree", "a nondegenerate threefold in P9 has degree >= 7"));
    p.constraints.push_back({"c2_one", "c2(V) = 1 forces V = O(1) + O(1), so c1(V) = 2",
                             [](const ScanPoint& q) { return value(q, "c2") != 1 || value(q, "v") == 2; }, true});
    p.annotate = [](const ScanPoint& q) {
        if (value(q, "v") == 4 && value(q, "d") == 10 && value(q, "c2") == 6)
            return Annotation{"Bordiga scroll; excluded, violates the general assumptions", true};
        return Annotation{};
    };
    return p;
}

ScanProblem space_form(const char* base, int ell, const std::optional<std::string>& stored_text)
{
    const bool quadric = std::string(base) == "Q3";
    ScanProblem p;
    p.family = std::string(base) + " ell=" + std::to_string(ell);
    p.description = std::string("fourfold scrolls over ") + (quadric ? "the quadric threefold" : "P3") +
                    ", V with c1 = x h, c2 = y h^2, codimension " + std::to_string(ell);
    p.ring = make_plain_ring({"x", "y"});
    const ScrollSetup s = fourfold(ell);
    const Polynomial engine = to_scan(engine_degree(s, base), p.ring);
    const std::string degree_text = registry_text("fourfold.degree.ell" + std::to_string(ell));
    const Polynomial closed = to_scan(closed_form_degree(s, base, degree_text), p.ring);

    static const std::map<std::string, std::string> expansions{
        {"P3_ell2", "55x^3 - 260x^2 + 310x + (160 - 70x)y"},
        {"P3_ell3", "220x^3 - 1540x^2 + 3620x - 2860 + (720 - 240x)y"},
        {"P3_ell4", "680x^3 - 6060x^2 + 19380x - 23060 + (2480 - 680x)y"},
        {"Q3_ell2", "110x^3 - 390x^2 + 340x + (120 - 70x)y"},
        {"Q3_ell3", "440x^3 - 2310x^2 + 3970x - 2220 + (540 - 240x)y"},
        {"Q3_ell4", "1360x^3 - 9090x^2 + 21250x - 17880 + (1860 - 680x)y"},
    };
    const std::string key = std::string(base) + "_ell" + std::to_string(ell);
    const Polynomial stored = Polynomial::parse(p.ring, stored_text.value_or(expansions.at(key)));
    require_agreement(p.family, engine, closed, stored);
    p.equation = stored;
    p.solved = "y";

    // The closed form reads c_d d + b y + g(x) = 0 with c_d, b > 0 constants, so
    // d, y > 0 needs g(x) < 0.
    const Polynomial d = Polynomial::parse(p.ring, quadric ? "2x^3 - 2x*y" : "x^3 - 2x*y");
    const auto symbols = make_plain_ring({"d", "c1", "c2", "c3", "v1", "v2", "v3"});
    const Rational c_d = Polynomial::parse(symbols, degree_text).coefficient({1, 0, 0, 0, 0, 0, 0});
    const Polynomial rest = stored - d * c_d;
    const std::size_t iy = p.ring->index("y");
    Polynomial witness(p.ring), slope(p.ring);
    for (const auto& [e, c] : rest.terms()) {
        Exponents f = e;
        f[iy] = 0;
        (e[iy] == 0 ? witness : slope).add_term(f, c);
    }
    if (rest.degree_in(iy) > 1)
        throw ConsistencyError(p.family + ": closed form is not linear in y");
    if (c_d <= 0 || !slope.is_constant() || slope.constant_term() <= 0)
        throw ConsistencyError(p.family + ": closed form is not of the shape c d + b y + g(x) with c, b > 0");
    p.enumerated.push_back({"x", 2, std::nullopt, witness,
                            "positivity of " + to_string(c_d) + "d + " + slope.to_string() + "y"});
    p.derived.push_back({"d", d});
    p.constraints.push_back(at_least("y", 1, "positive_c2", "c2(V) > 0 for an ample rank 2 bundle"));
    p.constraints.push_back({"positive_degree", "d > 0", [](const ScanPoint& q) { return value(q, "d") > 0; }});
    if (!quadric && ell == 2)
        p.annotate = [](const ScanPoint& q) {
            if (value(q, "x") == 4 && value(q, "y") == 5)
                return Annotation{"null-correlation twist V = N(2); excluded by the projection argument", true};
            return Annotation{};
        };
    return p;
}

ScanProblem hirzebruch(const std::optional<std::string>& stored_text)
{
    ScanProblem p;
    p.family = "Fe";
    p.description = "threefold scrolls over F_e in P9, V with c1 = a s + b f and degree d";
    p.ring = make_plain_ring({"e", "d", "a", "b"});
    const ScrollSetup s = threefold(9);
    const Polynomial engine = to_scan(engine_degree(s, "Fe"), p.ring);
    const Polynomial closed =
        Polynomial::parse(p.ring, "9d + 12(2b - a*e)a + 34(a*e - 2a - 2b) + 104");
    const Polynomial stored =
        Polynomial::parse(p.ring, stored_text.value_or("104 - 68a - 68b + 9d + 34a*e + 24a*b - 12a^2*e"));
    require_agreement(p.family, engine, closed, stored);
    p.equation = stored;
    p.solved = "b";
    p.enumerated.push_back({"e", 0, 4, std::nullopt, "Hirzebruch index e in 0..4"});
    p.enumerated.push_back({"d", 7, 100, std::nullopt, "degree from the minimum 7 for P9 up to 100"});
    p.enumerated.push_back({"a", 2, 60, std::nullopt, "a >= 2 since V restricted to a fiber is ample of rank 2"});
    p.constraints.push_back({"ample", "b >= e a + 2",
                             [](const ScanPoint& q) { return value(q, "b") >= value(q, "e") * value(q, "a") + 2; }});
    p.constraints.push_back(at_least("d", 10, "low_degree", "degree at least 10", true));
    p.exceptional = ExceptionalCondition{
        "a = 2 and 9d - 32 = 20(b - e) (for e = 0 also the ruling swap b = 2)",
        {{"a", 2}},
        Polynomial::parse(p.ring, "9d - 32 - 20(b - e)"),
        [](const ScanPoint& q) {
            return value(q, "a") == 2 || (value(q, "e") == 0 && value(q, "b") == 2);
        }};
    p.annotate = [](const ScanPoint& q) {
        if (value(q, "e") == 0 && value(q, "b") == 2 && value(q, "a") != 2)
            return Annotation{"rulings swapped: a <-> b", false};
        return Annotation{};
    };
    return p;
}

ScanProblem curve_product(const std::optional<std::string>& stored_text)
{
    ScanProblem p;
    p.family = "ProductsBxP1";
    p.description = "threefold scrolls over B x P1, B of genus q, in P9";
    p.ring = make_plain_ring({"q", "d", "a", "b"});
    const ScrollSetup s = threefold(9);
    const Polynomial engine = to_scan(engine_degree(s, "BxP1"), p.ring);
    const Polynomial closed = Polynomial::parse(p.ring, "9d + 24a*b + 68(q - 1)a - 68b - 104(q - 1)");
    const Polynomial stored =
        Polynomial::parse(p.ring, stored_text.value_or("104 - 104q - 68a - 68b + 9d + 68q*a + 24a*b"));
    require_agreement(p.family, engine, closed, stored);
    p.equation = stored;
    p.solved = "b";
    p.enumerated.push_back({"q", 1, 4, std::nullopt, "genus of B in 1..4"});
    p.enumerated.push_back({"d", 7, 100, std::nullopt, "degree from the minimum 7 for P9 up to 100"});
    p.enumerated.push_back({"a", 2, 60, std::nullopt, "a >= 2 on the P1 factor"});
    p.constraints.push_back(at_least("b", 5, "ample", "b >= 5"));
    p.exceptional = ExceptionalCondition{"a = 2 and 9d + 32(q - 1) = 20b",
                                         {{"a", 2}},
                                         Polynomial::parse(p.ring, "9d + 32(q - 1) - 20b"),
                                         [](const ScanPoint& q) { return value(q, "a") == 2; }};
    return p;
}

}  // namespace

std::vector<ScanFamilyInfo> scan_families()
{
    std::vector<ScanFamilyInfo> out{
        {"P2_N10", 0, "threefold scrolls over P2 in P10"},
        {"P2_N9", 0, "threefold scrolls over P2 in P9"},
        {"Fe", 0, "threefold scrolls over Hirzebruch surfaces in P9"},
        {"ProductsBxP1", 0, "threefold scrolls over B x P1 in P9"},
    };
    for (const char* base : {"P3", "Q3"})
        for (int ell = 2; ell <= 4; ++ell)
            out.push_back({base, ell, std::string("fourfold scrolls over ") + base + " with codimension " +
                                          std::to_string(ell)});
    return out;
}

ScanProblem scan_problem(const std::string& family, int ell, const std::optional<std::string>& equation_override)
{
    if (family == "P3" || family == "Q3") {
        if (ell < 2 || ell > 4)
            throw InvalidInput(family + " scans need ell in 2..4");
        return space_form(family.c_str(), ell, equation_override);
    }
    if (ell != 0)
        throw InvalidInput("family " + family + " takes no codimension parameter");
    if (family == "P2_N10")
        return plane_n10(equation_override);
    if (family == "P2_N9")
        return plane_n9(equation_override);
    if (family == "Fe")
        return hirzebruch(equation_override);
    if (family == "ProductsBxP1")
        return curve_product(equation_override);
    throw InvalidInput("unknown scan family '" + family + "'");
}

ExceptionalSummary exceptional_condition(const std::string& family, const ScanPoint& params)
{
    if (family != "Fe" && family != "ProductsBxP1")
        throw InvalidInput("no exceptional condition for family " + family);
    const ScanProblem p = scan_problem(family);
    ExceptionalSummary out{p.exceptional->fixed, p.exceptional->condition, p.exceptional->text,
                           exceptional_condition_holds(p)};
    std::vector<Polynomial> images;
    for (const auto& v : p.ring->variables()) {
        auto it = params.find(v.name);
        images.push_back(it == params.end() ? Polynomial::variable(p.ring, v.name) : Polynomial(p.ring, it->second));
    }
    out.condition = out.condition.substitute(images, p.ring);
    return out;
}

ScanReport q3_scan(int ell, const ScanOptions& options)
{
    return run_scan(scan_problem("Q3", ell), options);
}

}  // namespace inflect
