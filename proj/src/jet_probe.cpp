#include "inflect/jet_probe.hpp"

#include "inflect/errors.hpp"
#include "inflect/poly_gcd.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

namespace inflect {

JetChart::JetChart(const JetProbeSpec& spec) : spec_(spec)
{
    if (spec.k < 0)
        throw InvalidInput("jet order k must be >= 0");
    if (spec.trials < 1)
        throw InvalidInput("jet probe needs at least one trial");
    if (spec.height < 1)
        throw InvalidInput("sampling height must be positive");
    if (spec.coordinates.empty())
        throw InvalidInput("jet probe needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& v : spec.variables)
        if (!seen.insert(v).second)
            throw InvalidInput("variable " + v + " declared twice");
    ring_ = make_plain_ring(spec.variables);
    bool normalized = false;
    for (const auto& text : spec.coordinates) {
        coords_.push_back(Polynomial::parse(ring_, text));
        normalized = normalized || coords_.back() == Polynomial(ring_, 1);
    }
    if (!normalized)
        warnings_.push_back("no coordinate is the constant 1; the chart is not affine-normalized");
}

std::vector<Exponents> JetChart::multi_indices(int k) const
{
    const std::size_t n = ring_->size();
    std::vector<Exponents> out;
    Exponents e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 >= n) {
            if (n > 0)
                e[n - 1] = left;
            if (n > 0 || left == 0)
                out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
        e[i] = 0;
    };
    for (int order = 0; order <= k; ++order)
        rec(rec, 0, order);
    return out;
}

PolynomialMatrix JetChart::symbolic_jet_matrix(int k) const
{
    PolynomialMatrix m;
    for (const auto& alpha : multi_indices(k)) {
        std::vector<Polynomial> row;
        for (const auto& f : coords_) {
            Polynomial d = f;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                for (int t = 0; t < alpha[i]; ++t)
                    d = d.derivative(i);
            row.push_back(std::move(d));
        }
        m.push_back(std::move(row));
    }
    return m;
}

RationalMatrix JetChart::jet_matrix(const std::vector<Rational>& point, int k) const
{
    if (point.size() != ring_->size())
        throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, chart has " +
                           std::to_string(ring_->size()) + " variables");
    RationalMatrix out;
    for (const auto& row : symbolic_jet_matrix(k)) {
        std::vector<Rational> values;
        for (const auto& p : row)
            values.push_back(p.evaluate(point));
        out.push_back(std::move(values));
    }
    return out;
}

std::size_t rank(RationalMatrix m)
{
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t symbolic_rank(PolynomialMatrix m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (rows == 0 || cols == 0)
        return 0;
    Polynomial prev(m[0][0].ring(), 1);
    std::size_t r = 0;
    for (; r < std::min(rows, cols); ++r) {
        // full pivoting on the remaining block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (!m[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows)
            break;
        std::swap(m[pi], m[r]);
        for (auto& row : m)
            std::swap(row[pj], row[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                const Polynomial num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw ConsistencyError("fraction-free elimination produced an inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][r] = Polynomial(prev.ring());
        }
        prev = m[r][r];
    }
    return r;
}

namespace {

bool all_zero(const RationalMatrix& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

struct TrialResult {
    std::size_t rank = 0;
    int resamples = 0;
};

TrialResult run_trial(const JetChart& chart, const PolynomialMatrix& symbolic, int trial)
{
    const auto& spec = chart.spec();
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> num(-spec.height, spec.height), den(1, spec.height);
    TrialResult out;
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Rational> point;
        for (std::size_t i = 0; i < chart.ring()->size(); ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            point.push_back(q);
        }
        RationalMatrix m;
        for (const auto& row : symbolic) {
            std::vector<Rational> values;
            for (const auto& p : row)
                values.push_back(p.evaluate(point));
            m.push_back(std::move(values));
        }
        if (all_zero(m)) {
            ++out.resamples;
            continue;
        }
        out.rank = rank(std::move(m));
        return out;
    }
    return out;
}

}  // namespace

JetRankReport generic_jet_rank(const JetChart& chart)
{
    const auto& spec = chart.spec();
    const PolynomialMatrix symbolic = chart.symbolic_jet_matrix(spec.k);
    std::vector<TrialResult> results(static_cast<std::size_t>(spec.trials));
    const unsigned workers =
        std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(spec.trials));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int t = static_cast<int>(w); t < spec.trials; t += static_cast<int>(workers))
                results[static_cast<std::size_t>(t)] = run_trial(chart, symbolic, t);
        });
    for (auto& th : pool)
        th.join();

    JetRankReport report;
    report.seed = spec.seed;
    report.trials = spec.trials;
    report.k = spec.k;
    report.height = spec.height;
    report.warnings = chart.warnings();
    for (std::size_t t = 0; t < results.size(); ++t) {
        report.per_trial.push_back(results[t].rank);
        report.rank = std::max(report.rank, results[t].rank);
        if (results[t].resamples > 0)
            report.warnings.push_back("trial " + std::to_string(t) + ": jet matrix vanished, resampled " +
                                      std::to_string(results[t].resamples) + " time(s)");
    }
    return report;
}

JetRankReport generic_jet_rank(const JetProbeSpec& spec)
{
    return generic_jet_rank(JetChart(spec));
}

// ---------------------------------------------------------------------------

namespace {

Integer choose(std::size_t n, std::size_t k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

void row_subsets(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == r) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = from; i + (r - pick.size()) <= n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

// All r x r minors on the given rows, by Laplace expansion over column subsets.
void minors_on_rows(const PolynomialMatrix& m, const std::vector<std::size_t>& rows, std::vector<Polynomial>& out)
{
    const std::size_t cols = m[0].size();
    const RingPtr& ring = m[0][0].ring();
    std::unordered_map<std::uint64_t, Polynomial> level{{0, Polynomial(ring, 1)}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = m[rows[i]];
        std::unordered_map<std::uint64_t, Polynomial> next;
        for (const auto& [mask, det] : level) {
            if (det.is_zero())
                continue;
            for (std::size_t c = 0; c < cols; ++c) {
                const std::uint64_t bit = std::uint64_t{1} << c;
                if ((mask & bit) || row[c].is_zero())
                    continue;
                // columns of the new set above c shift the sign
                const int above = std::popcount(mask & ~((bit << 1) - 1));
                Polynomial term = det * row[c];
                if (above % 2)
                    term = -term;
                auto [it, inserted] = next.try_emplace(mask | bit, ring);
                it->second += term;
            }
        }
        level = std::move(next);
    }
    std::vector<std::pair<std::uint64_t, Polynomial>> sorted(level.begin(), level.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [mask, det] : sorted)
        if (!det.is_zero())
            out.push_back(std::move(det));
}

}  // namespace

InflectionEquations inflection_equations(const JetChart& chart, std::size_t r)
{
    const PolynomialMatrix m = chart.symbolic_jet_matrix(chart.spec().k);
    const std::size_t rows = m.size(), cols = m[0].size();
    if (r < 1 || r > std::min(rows, cols))
        throw InvalidInput("target rank " + std::to_string(r) + " outside 1.." + std::to_string(std::min(rows, cols)));
    if (cols > 63)
        throw ResourceLimit("minor enumeration supports at most 63 coordinates");
    const Integer count = choose(rows, r) * choose(cols, r);
    if (count > 100000)
        throw ResourceLimit("inflection equations need " + count.get_str() + " minors, more than 100000");

    InflectionEquations out;
    out.target_rank = r;
    out.minor_count = count.get_ui();
    std::vector<std::vector<std::size_t>> subsets;
    row_subsets(rows, r, subsets);
    std::vector<Polynomial> minors;
    for (const auto& s : subsets)
        minors_on_rows(m, s, minors);

    const RingPtr& ring = chart.ring();
    out.content = minors.empty() ? Polynomial(ring) : gcd(minors);
    out.residual = Polynomial(ring, 1);
    if (out.content.is_zero())
        return out;
    for (const auto& p : minors)
        out.minors.push_back(*divide_exact(p, out.content));
    const Polynomial mono = monomial_content(out.content);
    const Exponents& e = mono.terms().begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0)
            out.monomial_factors.emplace_back((*ring)[i].name, e[i]);
    out.residual = *divide_exact(out.content, mono);
    return out;
}

// ---------------------------------------------------------------------------

JetProbeSpec segre_product(const JetProbeSpec& base, int fiber_dim)
{
    if (fiber_dim < 1)
        throw InvalidInput("fiber dimension must be positive");
    JetProbeSpec out = base;
    std::vector<std::string> fiber;
    for (int i = 1; i <= fiber_dim; ++i) {
        std::string name = "s" + std::to_string(i);
        while (std::find(base.variables.begin(), base.variables.end(), name) != base.variables.end())
            name = "s" + name;
        fiber.push_back(name);
        out.variables.push_back(name);
    }
    for (const auto& c : base.coordinates)
        for (const auto& s : fiber)
            out.coordinates.push_back("(" + c + ")*" + s);
    return out;
}

ProductRankIdentity product_rank_identity(const JetProbeSpec& base, int fiber_dim)
{
    if (base.k < 1)
        throw InvalidInput("product identity needs k >= 1");
    ProductRankIdentity out;
    out.base_rank_k = generic_jet_rank(base).rank;
    JetProbeSpec lower = base;
    lower.k = base.k - 1;
    out.base_rank_k_minus_1 = generic_jet_rank(lower).rank;
    out.predicted = static_cast<std::size_t>(fiber_dim) * out.base_rank_k_minus_1 + out.base_rank_k;
    out.direct = generic_jet_rank(segre_product(base, fiber_dim)).rank;
    out.holds = out.predicted == out.direct;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

JetProbeSpec make_spec(std::vector<std::string> vars, std::vector<std::string> coords, int k)
{
    JetProbeSpec s;
    s.variables = std::move(vars);
    s.coordinates = std::move(coords);
    s.k = k;
    return s;
}

}  // namespace

JetProbeSpec segre_chart(int a, int b, int k)
{
    if (a < 1 || b < 1)
        throw InvalidInput("Segre factors need positive dimension");
    std::vector<std::string> vars, left{"1"}, right{"1"};
    for (int i = 1; i <= a; ++i) {
        vars.push_back("u" + std::to_string(i));
        left.push_back(vars.back());
    }
    for (int j = 1; j <= b; ++j) {
        vars.push_back("v" + std::to_string(j));
        right.push_back(vars.back());
    }
    std::vector<std::string> coords;
    for (const auto& y : right)
        for (const auto& x : left)
            coords.push_back(x + "*" + y);
    return make_spec(std::move(vars), std::move(coords), k);
}

JetProbeSpec p1_power_chart(int n, int k)
{
    if (n < 1 || n > 16)
        throw InvalidInput("(P1)^n chart needs 1 <= n <= 16");
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i)
        vars.push_back("t" + std::to_string(i));
    std::vector<std::string> coords;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::string mono = "1";
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                mono += "*" + vars[static_cast<std::size_t>(i)];
        coords.push_back(mono);
    }
    return make_spec(std::move(vars), std::move(coords), k);
}

JetProbeSpec flag_chart(int k)
{
    // x = (1, a, b), y = (c, d, 1) with c = -a d - b; x3 y3 = b is dependent on the other diagonals
    const std::string c = "(-a*d - b)";
    return make_spec({"a", "b", "d"}, {c, "d", "1", "a*" + c, "a*d", "a", "b*" + c, "b*d"}, k);
}

JetProbeSpec bordiga_chart(int k)
{
    return make_spec({"x", "y", "w"},
                     {"x^2 - y", "x^3 - x*y", "x^2*y - y^2", "x*y - y*w", "x*y^2 - y^2*w", "x*y^2*w - y^2*w^2",
                      "x*y*w - y^2", "x^2*y*w - x*y^2", "x*y^2*w - y^3", "x*y^2*w^2 - y^3*w"},
                     k);
}

JetProbeSpec split_plane_scroll_chart(int k)
{
    return make_spec({"u1", "u2", "v"},
                     {"1", "u1", "u2", "v", "v*u1", "v*u2", "v*u1^2", "v*u1*u2", "v*u2^2"}, k);
}

JetProbeSpec cubic_scroll_chart(int k)
{
    return make_spec({"u", "v"}, {"1", "u", "v", "v*u", "v*u^2"}, k);
}

JetProbeSpec veronese_chart(int k)
{
    return make_spec({"u", "v"}, {"1", "u", "v", "u^2", "u*v", "v^2"}, k);
}

JetProbeSpec rational_normal_curve(int degree, int k)
{
    if (degree < 1)
        throw InvalidInput("rational normal curve needs degree >= 1");
    std::vector<std::string> coords{"1"};
    for (int i = 1; i <= degree; ++i)
        coords.push_back("t^" + std::to_string(i));
    return make_spec({"t"}, std::move(coords), k);
}

}  // namespace inflect
