#include "inflect/closed_forms.hpp"

#include "inflect/base_data.hpp"
#include "inflect/bundle.hpp"
#include "inflect/errors.hpp"
#include "inflect/presets.hpp"

#include <algorithm>

namespace inflect {

namespace {

std::string str(long v)
{
    return std::to_string(v);
}

std::string str(const Integer& v)
{
    return v.get_str();
}

// Ring with the base symbols followed by d, g, K, H.
RingPtr template_ring(const ScrollGeometry& geo)
{
    std::vector<Variable> vars = geo.base_ring()->variables();
    vars.push_back({"d", geo.m()});
    vars.push_back({"g", 1});
    vars.push_back({"K", 1});
    vars.push_back({"H", 1});
    return make_ring(std::move(vars));
}

// Sets every C_i (or c_i) to zero: the tangent bundle of an abelian variety is trivial.
Polynomial kill_tangent(const Polynomial& p)
{
    const RingPtr& ring = p.ring();
    std::vector<Polynomial> images;
    for (const auto& v : ring->variables()) {
        const bool tangent = (v.name[0] == 'c' || v.name[0] == 'C') && v.name.size() > 1 && std::isdigit(v.name[1]);
        images.push_back(tangent ? Polynomial(ring) : Polynomial::variable(ring, v.name));
    }
    return p.substitute(images, ring);
}

ScrollSetup setup_for(int n, int m, int k, long ell)
{
    return {n, m, k, static_cast<int>(ell + max_rank(n, m, k).get_si() - 2)};
}

CheckOutcome compare(const Polynomial& expected, const Polynomial& actual)
{
    return {expected == actual, expected.to_string(), actual.to_string(), {}};
}

CheckOutcome compare(const GradedClass& expected, const GradedClass& actual)
{
    return {expected == actual, expected.to_string(), actual.to_string(), {}};
}

// --- record builders -------------------------------------------------------

FormulaRecord class_record(std::string id, std::string group, ScrollSetup s, std::string text, std::string source)
{
    std::string params = "n=" + str(s.n) + " m=" + str(s.m) + " k=" + str(s.k) + " N=" + str(s.N);
    return {std::move(id), std::move(group), std::move(params), std::move(text), std::move(source),
            [s](const FormulaRecord& r) {
                const ScrollGeometry geo(s.n, s.m);
                return compare(class_template(geo, r.template_text), inflection_class(s).unreduced);
            }};
}

FormulaRecord degree_record(std::string id, std::string group, ScrollSetup s, std::string text, std::string source)
{
    std::string params = "n=" + str(s.n) + " m=" + str(s.m) + " k=" + str(s.k) + " N=" + str(s.N);
    return {std::move(id), std::move(group), std::move(params), std::move(text), std::move(source),
            [s](const FormulaRecord& r) {
                const ScrollGeometry geo(s.n, s.m);
                return compare(base_template(geo, r.template_text), degree_polynomial(s).polynomial());
            }};
}

FormulaRecord custom_record(std::string id, std::string group, std::string params, std::string text,
                            std::string source, std::function<CheckOutcome(const FormulaRecord&)> fn)
{
    return {std::move(id), std::move(group), std::move(params), std::move(text), std::move(source), std::move(fn)};
}

RingPtr weighted(const std::vector<std::pair<std::string, int>>& vars, std::vector<WeightCap> caps = {})
{
    std::vector<Variable> v;
    for (const auto& [name, w] : vars)
        v.push_back({name, w});
    return make_ring(std::move(v), std::move(caps));
}

// Ring c1..cm, v1..vr (weights i) truncated at m, as on a base of dimension m.
RingPtr surface_like_ring(int m, int r)
{
    std::vector<std::pair<std::string, int>> vars;
    for (int i = 1; i <= m; ++i)
        vars.emplace_back("c" + str(i), i);
    for (int i = 1; i <= r; ++i)
        vars.emplace_back("v" + str(i), i);
    return weighted(vars);
}

FormalBundle generic_bundle(const RingPtr& ring, int trunc, const char* stem, int rank)
{
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i)
        names.push_back(stem + str(i));
    return FormalBundle::generic(rank, ring, trunc, names);
}

// --- kernel level records --------------------------------------------------

void add_kernel_records(std::vector<FormulaRecord>& out)
{
    out.push_back(custom_record(
        "kernel.binomial_inverse", "kernel", "mu=3", "1 + 3L + 6L^2 + 10L^3 + 15L^4",
        "general binomial formula for (1 - L)^(-mu) in the abelian computation", [](const FormulaRecord& r) {
            auto ring = weighted({{"L", 1}});
            auto x = GradedClass::parse(ring, 4, "(1 - L)^3");
            return compare(GradedClass::parse(ring, 4, r.template_text), series_inverse(x));
        }));
    out.push_back(custom_record(
        "kernel.inverse_rank3", "kernel", "rank 3, truncation 3", "1 - b1 + (b1^2 - b2) + (-b1^3 + 2b1*b2 - b3)",
        "inverse of the total Chern class of a rank 3 bundle, used for threefold scrolls", [](const FormulaRecord& r) {
            auto ring = weighted({{"b1", 1}, {"b2", 2}, {"b3", 3}});
            auto x = GradedClass::parse(ring, 3, "1 + b1 + b2 + b3");
            return compare(GradedClass::parse(ring, 3, r.template_text), series_inverse(x));
        }));
    out.push_back(custom_record(
        "kernel.inverse_fourfold", "kernel", "truncation 4",
        "1 - b1 + (b1^2 - b2) + (-b1^3 + 2b1*b2 - b3) + (b1^4 - 3b1^2*b2 + 2b1*b3 + b2^2 - b4)",
        "inverse of a total Chern class on a fourfold, used for fourfold scrolls", [](const FormulaRecord& r) {
            auto ring = weighted({{"b1", 1}, {"b2", 2}, {"b3", 3}, {"b4", 4}});
            auto x = GradedClass::parse(ring, 4, "1 + b1 + b2 + b3 + b4");
            return compare(GradedClass::parse(ring, 4, r.template_text), series_inverse(x));
        }));
    out.push_back(custom_record(
        "kernel.vdual_inverse.m2", "kernel", "rank 2 over a surface", "1 + v1 + (v1^2 - v2)",
        "inverse of c(V dual) over a surface, used for threefold scrolls", [](const FormulaRecord& r) {
            auto ring = surface_like_ring(2, 2);
            auto v = generic_bundle(ring, 2, "v", 2);
            return compare(GradedClass::parse(ring, 2, r.template_text), series_inverse(dual(v).total_chern()));
        }));
    out.push_back(custom_record(
        "kernel.vdual_inverse.m3", "kernel", "rank 2 over a threefold", "1 + v1 + (v1^2 - v2) + (v1^3 - 2v1*v2)",
        "inverse of c(V dual) over a threefold, used for fourfold scrolls", [](const FormulaRecord& r) {
            auto ring = surface_like_ring(3, 2);
            auto v = generic_bundle(ring, 3, "v", 2);
            return compare(GradedClass::parse(ring, 3, r.template_text), series_inverse(dual(v).total_chern()));
        }));

    for (int n = 3; n <= 6; ++n) {
        const std::string c1 = "(-2v1 + " + str(n - 1) + "c1)";
        const std::string c2 = "(v1^2 + 2v2 - " + str(2 * n - 3) + "v1*c1 + " + str(binomial(n - 1, 2)) + "c1^2 + " +
                               str(n - 1) + "c2)";
        auto with_ranks = [n](const FormulaRecord&) {
            auto ring = surface_like_ring(2, 2);
            auto t = generic_bundle(ring, 2, "c", 2);
            auto v = FormalBundle(n - 1, GradedClass::parse(ring, 2, "1 + v1 + v2"));
            return tensor(dual(v), t);
        };
        out.push_back(custom_record("kernel.vdual_t.m2.n" + str(n), "kernel", "n=" + str(n) + " m=2",
                                    "1 + " + c1 + " + " + c2,
                                    "Chern classes of V dual tensor T_Y over a surface",
                                    [with_ranks](const FormulaRecord& r) {
                                        auto e = with_ranks(r);
                                        auto ring = e.total_chern().ring();
                                        return compare(GradedClass::parse(ring, 2, r.template_text), e.total_chern());
                                    }));
        const std::string inv = "1 + (2v1 - " + str(n - 1) + "c1) + (3v1^2 - 2v2 - " + str(2 * n - 1) + "v1*c1 + " +
                                str(binomial(n, 2)) + "c1^2 - " + str(n - 1) + "c2)";
        out.push_back(custom_record("kernel.vdual_t_inverse.m2.n" + str(n), "kernel", "n=" + str(n) + " m=2", inv,
                                    "inverse of c(V dual tensor T_Y) over a surface",
                                    [with_ranks](const FormulaRecord& r) {
                                        auto e = with_ranks(r);
                                        auto ring = e.total_chern().ring();
                                        return compare(GradedClass::parse(ring, 2, r.template_text),
                                                       series_inverse(e.total_chern()));
                                    }));
    }

    auto vdual_t_m3 = [] {
        auto ring = surface_like_ring(3, 2);
        return tensor(dual(generic_bundle(ring, 3, "v", 2)), generic_bundle(ring, 3, "c", 3));
    };
    out.push_back(custom_record(
        "kernel.vdual_t.m3", "kernel", "n=4 m=3",
        "1 + (-3v1 + 2c1) + (3v1^2 + 3v2 - 5c1*v1 + c1^2 + 2c2) + "
        "(-v1^3 - 6v1*v2 + 4c1(v1^2 + v2) - (2c1^2 + 4c2)v1 + 2c1*c2 + 2c3)",
        "Chern classes of V dual tensor T_Y over a threefold", [vdual_t_m3](const FormulaRecord& r) {
            auto e = vdual_t_m3();
            return compare(GradedClass::parse(e.total_chern().ring(), 3, r.template_text), e.total_chern());
        }));
    out.push_back(custom_record(
        "kernel.vdual_t_inverse.m3", "kernel", "n=4 m=3",
        "1 + (3v1 - 2c1) + (6v1^2 - 3v2 - 7c1*v1 + 3c1^2 - 2c2) + "
        "(10v1^3 - 12v1*v2 - 16c1*v1^2 + 8c1*v2 + 12c1^2*v1 - 8c2*v1 - 4c1^3 + 6c1*c2 - 2c3)",
        "inverse of c(V dual tensor T_Y) over a threefold", [vdual_t_m3](const FormulaRecord& r) {
            auto e = vdual_t_m3();
            return compare(GradedClass::parse(e.total_chern().ring(), 3, r.template_text),
                           series_inverse(e.total_chern()));
        }));

    out.push_back(custom_record("kernel.sym2.rank2", "kernel", "rank 2", "1 + 3c1 + (2c1^2 + 4c2)",
                                "total Chern class of S^2 T_Y for a surface", [](const FormulaRecord& r) {
                                    auto ring = surface_like_ring(2, 0);
                                    auto s = sym_power(generic_bundle(ring, 2, "c", 2), 2);
                                    return compare(GradedClass::parse(ring, 2, r.template_text), s.total_chern());
                                }));
    out.push_back(custom_record("kernel.sym2.rank3", "kernel", "rank 3", "1 + 4c1 + 5(c1^2 + c2) + 2c1^3 + 11c1*c2 + 7c3",
                                "total Chern class of S^2 T_Y for a threefold", [](const FormulaRecord& r) {
                                    auto ring = surface_like_ring(3, 0);
                                    auto s = sym_power(generic_bundle(ring, 3, "c", 3), 2);
                                    return compare(GradedClass::parse(ring, 3, r.template_text), s.total_chern());
                                }));

    auto twisted = [](int n, int m) {
        const ScrollGeometry geo(n, m);
        return tensor_line(sym_power(geo.tangent_base(), 2), geo.tautological(), -1).total_chern();
    };
    out.push_back(custom_record(
        "kernel.sym2_twist.m2", "kernel", "n=3 m=2",
        "1 + (3C1 - 3L) + (2C1^2 + 4C2 - 6C1*L + 3L^2) - ((2C1^2 + 4C2)L - 3C1*L^2 + L^3)",
        "c(pi^* S^2 T_Y tensor L^-1) over a surface", [twisted](const FormulaRecord& r) {
            return compare(class_template(ScrollGeometry(3, 2), r.template_text), twisted(3, 2));
        }));
    out.push_back(custom_record(
        "kernel.sym2_twist_inverse.m2", "kernel", "n=3 m=2",
        "1 + 3(L - C1) + (6L^2 + 7C1^2 - 12C1*L - 4C2) + 5(2L^3 + 7C1^2*L - 4C2*L - 6C1*L^2)",
        "inverse of c(pi^* S^2 T_Y tensor L^-1) for threefold scrolls", [twisted](const FormulaRecord& r) {
            return compare(class_template(ScrollGeometry(3, 2), r.template_text), series_inverse(twisted(3, 2)));
        }));
    out.push_back(custom_record(
        "kernel.sym2_twist.m3", "kernel", "n=4 m=3",
        "1 + (4C1 - 6L) + (5(C1^2 + C2) - 20C1*L + 15L^2) + "
        "(2C1^3 + 11C1*C2 + 7C3 - 20(C1^2 + C2)L + 40C1*L^2 - 20L^3) + "
        "(-3(2C1^3 + 11C1*C2 + 7C3)L + 30(C1^2 + C2)L^2 - 40C1*L^3 + 15L^4)",
        "c(pi^* S^2 T_Y tensor L^-1) over a threefold", [twisted](const FormulaRecord& r) {
            return compare(class_template(ScrollGeometry(4, 3), r.template_text), twisted(4, 3));
        }));
    out.push_back(custom_record(
        "kernel.sym2_twist_inverse.m3", "kernel", "n=4 m=3",
        "1 + (6L - 4C1) + (21L^2 - 28C1*L + 11C1^2 - 5C2) + "
        "(56L^3 - 112C1*L^2 + 88C1^2*L - 40C2*L - 26C1^3 + 29C1*C2 - 7C3) + "
        "(126L^4 - 336C1*L^3 + 396C1^2*L^2 - 180C2*L^2 - 234C1^3*L + 261C1*C2*L - 63C3*L)",
        "inverse of c(pi^* S^2 T_Y tensor L^-1) for fourfold scrolls", [twisted](const FormulaRecord& r) {
            return compare(class_template(ScrollGeometry(4, 3), r.template_text), series_inverse(twisted(4, 3)));
        }));
}

// --- threefold scrolls over surfaces ------------------------------------------

CheckOutcome preset_degree_check(const ScrollSetup& s, const NumericalBaseData& data, const Polynomial& expected)
{
    const Polynomial actual = degree_of_inflection(s, data).value;
    return compare(expected, actual);
}

void add_threefold_records(std::vector<FormulaRecord>& out)
{
    const char* cls_src = "inverse of c(E_2) for threefold scrolls over surfaces, graded part";
    out.push_back(class_record("threefold.class.ell1", "threefold", setup_for(3, 2, 2, 1), "3L + 3V1 - 5C1", cls_src));
    out.push_back(class_record("threefold.class.ell2", "threefold", setup_for(3, 2, 2, 2),
                               "6L^2 + 9V1*L - 18C1*L + 6V1^2 - 3V2 - 16C1*V1 + 16C1^2 - 6C2", cls_src));
    out.push_back(class_record("threefold.class.ell3", "threefold", setup_for(3, 2, 2, 3),
                               "10L^3 - 42C1*L^2 + 18V1*L^2 + 68C1^2*L - 26C2*L - 57C1*V1*L + 18V1^2*L - 9V2*L",
                               cls_src));
    out.push_back(degree_record("threefold.degree.P10", "threefold", setup_for(3, 2, 2, 3),
                                "19d + 68c1^2 - 26c2 - 99c1*v1 + 27v1^2",
                                "number of flexes of a threefold scroll over a surface"));
    out.push_back(degree_record("threefold.degree.P9", "threefold", setup_for(3, 2, 2, 2),
                                "9d + 12v1^2 + 34K*v1 + 16K^2 - 6c2",
                                "degree of the inflectional curve of a threefold scroll in P^9"));
    out.push_back(degree_record("threefold.degree.P8", "threefold", setup_for(3, 2, 2, 1), "10(g - 1) + v1^2 - 3v2",
                                "degree of the inflectional divisor in P^8 via the sectional genus"));
    out.push_back(class_record("threefold.divisor", "threefold", setup_for(3, 2, 2, 1), "5K + 3V1 + 3L",
                               "inflectional divisor of a threefold scroll in P^8"));

    out.push_back(custom_record(
        "threefold.degree.P9.plane", "threefold", "Y=P2, v = c1(V)", "9d + 6v(2v - 17) + 126",
        "degree in P^9 specialized to the projective plane", [](const FormulaRecord& r) {
            auto data = preset("P2");
            auto params = data.parameter_ring();
            auto ring = make_plain_ring({"d", "v"});
            auto t = Polynomial::parse(ring, r.template_text);
            auto expected = t.substitute({Polynomial::parse(params, "x^2 - y"), Polynomial::variable(params, "x")},
                                         params);
            return preset_degree_check(setup_for(3, 2, 2, 2), data, expected);
        }));
    out.push_back(custom_record(
        "threefold.degree.P9.K3", "threefold", "Y=K3", "3(3d + 4(2g - 2) - 48)", "degree in P^9 over a K3 surface",
        [](const FormulaRecord& r) {
            auto data = preset("K3");
            auto expected = Polynomial::parse(data.parameter_ring(), r.template_text);
            return preset_degree_check(setup_for(3, 2, 2, 2), data, expected);
        }));
    out.push_back(custom_record(
        "threefold.degree.P9.abelian", "abelian", "Y abelian surface", "9d + 12(2g - 2)",
        "degree in P^9 over an abelian surface", [](const FormulaRecord& r) {
            auto data = preset("abelian_surface");
            auto expected = Polynomial::parse(data.parameter_ring(), r.template_text);
            return preset_degree_check(setup_for(3, 2, 2, 2), data, expected);
        }));
    out.push_back(custom_record(
        "threefold.veronese_projection", "threefold", "Y=P2, V=O(2)+O(2), N=10", "6",
        "osculating spaces of the Veronese surface times a line through a general point", [](const FormulaRecord& r) {
            auto data = preset("P2").specialize({{"x", 4}, {"y", 4}});
            auto expected = Polynomial::parse(data.parameter_ring(), r.template_text);
            return preset_degree_check(setup_for(3, 2, 2, 3), data, expected);
        }));
    out.push_back(custom_record(
        "threefold.projection_remark", "threefold", "V = H + H, class 3L + K", "3d + 2H*K",
        "degree of the residual component 3L + pi^*K_Y of a projected product scroll", [](const FormulaRecord& r) {
            const ScrollGeometry geo(3, 2);
            auto residual = geo.total_class("3L - C1");
            auto actual = geo.pushforward(residual * geo.total_class("L^2"));
            return compare(base_template(geo, r.template_text), actual.polynomial());
        }));

    auto [first, second] = divisor_degree_m2(3);
    out.push_back(degree_record("threefold.two_expressions.first", "threefold", setup_for(3, 2, 2, 1), first,
                                "degree of the inflectional divisor, first expression"));
    out.push_back(degree_record("threefold.two_expressions.second", "threefold", setup_for(3, 2, 2, 1), second,
                                "degree of the inflectional divisor, second expression"));

    out.push_back(custom_record(
        "threefold.split_plane_scroll", "threefold", "Y=P2, V=O(1)+O(2), L = Y0 + 2h", "3Y0",
        "inflectional divisor of P(O(1)+O(2)) over the plane as a multiple of the negative section",
        [](const FormulaRecord& r) {
            const ScrollGeometry geo(3, 2);
            auto cls = inflection_class(setup_for(3, 2, 2, 1)).unreduced.polynomial();
            auto ring = make_plain_ring({"Y0", "h"});
            std::vector<Polynomial> images;
            for (const auto& v : geo.total_ring()->variables()) {
                if (v.name == "L")
                    images.push_back(Polynomial::parse(ring, "Y0 + 2h"));
                else if (v.name == "C1" || v.name == "V1")
                    images.push_back(Polynomial::parse(ring, "3h"));
                else
                    images.push_back(Polynomial(ring));  // degree 2 classes do not enter a divisor
            }
            return compare(Polynomial::parse(ring, r.template_text), cls.substitute(images, ring));
        }));
}

// --- divisors ---------------------------------------------------------------

void add_divisor_records(std::vector<FormulaRecord>& out)
{
    for (int n = 3; n <= 6; ++n)
        for (int m = 2; m < n; ++m) {
            const std::string text = str(n + 2) + "K + " + str(m + 1) + "V1 + " + str(binomial(m + 1, 2)) + "L";
            out.push_back(class_record("divisor.class.n" + str(n) + ".m" + str(m), "divisor", setup_for(n, m, 2, 1),
                                       text, "class of the inflectional divisor for k = 2"));
        }
    for (int n = 3; n <= 6; ++n) {
        auto [first, second] = divisor_degree_m2(n);
        out.push_back(degree_record("divisor.degree.n" + str(n) + ".first", "divisor", setup_for(n, 2, 2, 1), first,
                                    "degree of the inflectional divisor over a surface, first expression"));
        out.push_back(degree_record("divisor.degree.n" + str(n) + ".second", "divisor", setup_for(n, 2, 2, 1), second,
                                    "degree of the inflectional divisor over a surface, second expression"));
    }
    out.push_back(class_record("divisor.fourfold_over_surface", "divisor", setup_for(4, 2, 2, 1), "6K + 3V1 + 3L",
                               "inflectional divisor of fourfold scrolls over surfaces"));
}

// --- fourfold scrolls over threefolds ----------------------------------------

void add_fourfold_records(std::vector<FormulaRecord>& out)
{
    const char* cls_src = "class of Phi_2 for fourfold scrolls over threefolds";
    out.push_back(class_record("fourfold.class.ell2", "fourfold", setup_for(4, 3, 2, 2),
                               "21L^2 + 24V1*L - 40C1*L + 10V1^2 - 4V2 - 25C1*V1 + 22C1^2 - 7C2", cls_src));
    out.push_back(class_record("fourfold.class.ell3", "fourfold", setup_for(4, 3, 2, 3),
                               "56L^3 - 154C1*L^2 + 84V1*L^2 + 162C1^2*L - 52C2*L - 166C1*V1*L + 60V1^2*L - 24V2*L"
                               " + 20V1^3 - 20V1*V2 - 65C1*V1^2 + 26C1*V2 + 95C1^2*V1 - 30C2*V1 - 64C1^3"
                               " + 53C1*C2 - 9C3",
                               cls_src));
    out.push_back(class_record("fourfold.class.ell4", "fourfold", setup_for(4, 3, 2, 4),
                               "126L^4 + 224V1*L^3 - 448C1*L^3 - 84V2*L^2 + 210V1^2*L^2 - 637C1*V1*L^2"
                               " + 683C1^2*L^2 - 222C2*L^2 + 694C1^2*V1*L - 220C2*V1*L + 120V1^3*L"
                               " - 120V1*V2*L - 430C1*V1^2*L + 172C1*V2*L - 518C1^3*L + 433C1*C2*L - 75C3*L",
                               cls_src));
    const char* deg_src = "degree of Phi_2 for fourfold scrolls over threefolds";
    out.push_back(degree_record("fourfold.degree.ell1", "fourfold", setup_for(4, 3, 2, 1),
                                "8d + 2v1^3 - 6c1*v1^2 + 6c1*v2", deg_src));
    out.push_back(degree_record("fourfold.degree.ell2", "fourfold", setup_for(4, 3, 2, 2),
                                "35d + 20v1^3 - 65c1*v1^2 + 40c1*v2 + 22c1^2*v1 - 7c2*v1", deg_src));
    out.push_back(degree_record("fourfold.degree.ell3", "fourfold", setup_for(4, 3, 2, 3),
                                "120d + 100v1^3 - 385c1*v1^2 + 180c1*v2 + 257c1^2*v1 - 82c2*v1"
                                " - 64c1^3 + 53c1*c2 - 9c3",
                                deg_src));
    out.push_back(degree_record("fourfold.degree.ell4", "fourfold", setup_for(4, 3, 2, 4),
                                "340d + 340v1^3 - 1515c1*v1^2 + 620c1*v2 + 1377c1^2*v1 - 442c2*v1"
                                " - 518c1^3 + 433c1*c2 - 75c3",
                                deg_src));
    out.push_back(custom_record(
        "fourfold.degree.ell4.abelian", "fourfold", "c = 0", "340d + 340v1^3",
        "flex count of a fourfold scroll over an abelian threefold", [](const FormulaRecord& r) {
            const ScrollGeometry geo(4, 3);
            auto actual = kill_tangent(degree_polynomial(setup_for(4, 3, 2, 4)).polynomial());
            auto expected = kill_tangent(base_template(geo, r.template_text));
            return compare(expected, actual);
        }));
    out.push_back(custom_record(
        "fourfold.plane_forms.P3", "fourfold", "Y=P3, x = v1, y = v2",
        "5(7d + 4x^3 - 52x^2 + 32y + 62x); 20(6d + 5x^3 - 77x^2 + 36y + 181x - 143); "
        "20(17d + 17x^3 - 303x^2 + 124y + 969x - 1153)",
        "degrees over P^3 for ell = 2, 3, 4", [](const FormulaRecord& r) {
            auto data = preset("P3");
            auto params = data.parameter_ring();
            auto ring = make_plain_ring({"d", "x", "y"});
            CheckOutcome result{true, {}, {}, {}};
            std::string text = r.template_text;
            for (long ell = 2; ell <= 4; ++ell) {
                const auto cut = text.find(';');
                const std::string part = text.substr(0, cut);
                text = cut == std::string::npos ? std::string() : text.substr(cut + 1);
                auto t = Polynomial::parse(ring, part);
                auto expected = t.substitute({Polynomial::parse(params, "x^3 - 2x*y"), Polynomial::variable(params, "x"),
                                              Polynomial::variable(params, "y")},
                                             params);
                auto actual = degree_of_inflection(setup_for(4, 3, 2, ell), data).value;
                // rank 2: v3 does not occur
                auto one = compare(expected, actual);
                result.pass = result.pass && one.pass;
                result.expected += (ell > 2 ? "; " : "") + one.expected;
                result.actual += (ell > 2 ? "; " : "") + one.actual;
            }
            return result;
        }));
}

// --- abelian bases -----------------------------------------------------------

void add_abelian_records(std::vector<FormulaRecord>& out)
{
    for (int m = 2; m <= 3; ++m)
        for (int n = m + 1; n <= m + 2; ++n)
            for (int k = 1; k <= 3; ++k)
                for (int ell = 1; ell <= n; ++ell) {
                    const ScrollGeometry geo(n, m);
                    const auto cls = abelian_class(n, m, k, ell);
                    const auto s = setup_for(n, m, k, ell);
                    std::string id = "abelian.class.m" + str(m) + ".n" + str(n) + ".k" + str(k) + ".ell" + str(ell);
                    out.push_back(custom_record(
                        id, "abelian", "n=" + str(n) + " m=" + str(m) + " k=" + str(k) + " ell=" + str(ell),
                        cls.value.to_string(), "class of Phi_k over an abelian base",
                        [s](const FormulaRecord& r) {
                            const ScrollGeometry geo(s.n, s.m);
                            auto actual = kill_tangent(inflection_class(s).unreduced.polynomial());
                            return compare(class_template(geo, r.template_text).polynomial(), actual);
                        }));
                    if (m == 2) {
                        out.push_back(custom_record(
                            "abelian.degree.n" + str(n) + ".k" + str(k) + ".ell" + str(ell), "abelian",
                            "n=" + str(n) + " k=" + str(k) + " ell=" + str(ell), abelian_degree(k, ell).to_string(),
                            "degree of Phi_k over an abelian surface", [s](const FormulaRecord& r) {
                                const ScrollGeometry geo(s.n, s.m);
                                auto actual = kill_tangent(degree_polynomial(s).polynomial());
                                return compare(kill_tangent(base_template(geo, r.template_text)), actual);
                            }));
                    }
                }

    out.push_back(custom_record(
        "abelian.flexes.n3.k2", "abelian", "n=3 k=2 ell=3", "19d + 27(2g - 2)",
        "flex count of a threefold scroll over an abelian surface", [](const FormulaRecord& r) {
            auto data = preset("abelian_surface");
            return preset_degree_check(setup_for(3, 2, 2, 3), data,
                                       Polynomial::parse(data.parameter_ring(), r.template_text));
        }));
    out.push_back(custom_record(
        "abelian.flexes.vanishing_tangent", "abelian", "n=3 k=2, c = 0", "19d + 27v1^2",
        "threefold flex count over a surface with vanishing tangent classes", [](const FormulaRecord& r) {
            const ScrollGeometry geo(3, 2);
            auto general = base_template(geo, "19d + 68c1^2 - 26c2 - 99c1*v1 + 27v1^2");
            auto abelian = abelian_degree(2, 3);
            auto ring = make_plain_ring({"d", "g"});
            // 2g - 2 = v1^2 on an abelian surface
            auto via_abelian = abelian.substitute(
                {geo.degree_class().polynomial(), Polynomial::parse(geo.base_ring(), "1 + v1^2/2")}, geo.base_ring());
            auto expected = kill_tangent(base_template(geo, r.template_text));
            auto ok1 = compare(expected, kill_tangent(general));
            auto ok2 = compare(expected, via_abelian);
            return CheckOutcome{ok1.pass && ok2.pass, expected.to_string(),
                                ok1.actual + " | " + ok2.actual, {}};
        }));
    for (int k = 2; k <= 3; ++k) {
        const Integer p = secant_scroll_p(k);
        out.push_back(custom_record(
            "abelian.secant_scroll.k" + str(k), "abelian", "n=3 k=" + str(k) + " p=" + str(p),
            "p/2*(k^5 + 5k^4 + 13k^3 + 19k^2 + 16k + 6)",
            "flex count of the secant scroll of a (1,p)-polarized abelian surface", [k, p](const FormulaRecord& r) {
                auto ring = make_plain_ring({"p", "k"});
                auto t = Polynomial::parse(ring, r.template_text);
                const Rational expected = t.evaluate(std::vector<Rational>{Rational(p), Rational(k)});
                auto data = preset("abelian_surface").specialize({{"d", Rational(3 * p)}, {"g", Rational(2 * p + 1)}});
                auto actual = degree_of_inflection(setup_for(3, 2, k, 3), data).value;
                return CheckOutcome{actual == Polynomial(actual.ring(), expected), to_string(expected),
                                    actual.to_string(), {}};
            }));
    }
    out.push_back(custom_record(
        "abelian.secant_scroll.consistency", "abelian", "k=2..6", "p/2*(k^5 + 5k^4 + 13k^3 + 19k^2 + 16k + 6)",
        "secant scroll flex count against the general abelian flex formula with d = 3p, 2g - 2 = 4p",
        [](const FormulaRecord& r) {
            auto ring = make_plain_ring({"p", "k"});
            auto t = Polynomial::parse(ring, r.template_text);
            std::string exp, act;
            bool pass = true;
            for (int k = 2; k <= 6; ++k) {
                const Integer p = secant_scroll_p(k);
                const Rational closed = t.evaluate(std::vector<Rational>{Rational(p), Rational(k)});
                const Rational general = abelian_degree(k, 3).evaluate(
                    std::vector<Rational>{Rational(3 * p), Rational(2 * p + 1)});
                pass = pass && closed == general;
                exp += (k > 2 ? " " : "") + to_string(closed);
                act += (k > 2 ? " " : "") + to_string(general);
            }
            return CheckOutcome{pass, exp, act, {}};
        }));
}

// --- exceptional cases in P^8 -------------------------------------------------

NumericalBaseData ruled_surface(int which)
{
    IntersectionModel model(2, {"xi", "f"}, which == 3 ? std::vector<std::string>{"q", "F", "G"}
                                                       : std::vector<std::string>{"q", "F", "A", "M"});
    model.integral("xi^2", "F").integral("xi*f", "1").integral("f^2", "0");
    model.chern("c1", "2xi - (2q - 2 + F)f").chern("c2", "4(1 - q)xi*f");
    if (which == 3)
        model.chern("v1", "2xi + G*f").chern("v2", "(F + G)xi*f");
    else
        model.chern("v1", "3xi + (A + M)f").chern("v2", "(2F + A + 2M)xi*f");
    return model.build();
}

void add_details_records(std::vector<FormulaRecord>& out)
{
    const auto s = setup_for(3, 2, 2, 1);
    out.push_back(custom_record("details.case1", "details", "Y=P2, V=O(2)+O(1)", "(7, 3)",
                                thm_details_case(1).description, [s](const FormulaRecord& r) {
                                    auto data = preset("P2").specialize({{"x", 3}, {"y", 2}});
                                    auto d = data.evaluate(ScrollGeometry(3, 2).degree_class());
                                    auto deg = degree_of_inflection(s, data).value;
                                    const std::string actual = "(" + d.to_string() + ", " + deg.to_string() + ")";
                                    return CheckOutcome{actual == r.template_text, r.template_text, actual, {}};
                                }));
    out.push_back(custom_record("details.case2", "details", "Y=P2, det V=O(4)", thm_details_case(2).degree,
                                thm_details_case(2).description, [s](const FormulaRecord& r) {
                                    auto data = preset("P2").specialize({{"x", 4}});
                                    auto params = data.parameter_ring();
                                    auto t = Polynomial::parse(make_plain_ring({"d"}), r.template_text);
                                    auto expected = t.substitute({Polynomial::parse(params, "16 - y")}, params);
                                    return preset_degree_check(s, data, expected);
                                }));
    out.push_back(custom_record("details.equality", "details", "Y=P2, det V=O(5)", "3d",
                                "equality case of the lower bound deg >= 3d", [s](const FormulaRecord& r) {
                                    auto data = preset("P2").specialize({{"x", 5}});
                                    auto params = data.parameter_ring();
                                    auto t = Polynomial::parse(make_plain_ring({"d"}), r.template_text);
                                    auto expected = t.substitute({Polynomial::parse(params, "25 - y")}, params);
                                    return preset_degree_check(s, data, expected);
                                }));
    for (int which = 3; which <= 4; ++which) {
        out.push_back(custom_record(
            "details.case" + str(which), "details", which == 3 ? "V = xi (x) G" : "0 -> 2xi + A -> V -> xi + M -> 0",
            thm_details_case(which).degree, thm_details_case(which).description, [s, which](const FormulaRecord& r) {
                auto data = ruled_surface(which);
                auto params = data.parameter_ring();
                std::vector<std::string> names{"d"};
                for (const auto& v : params->variables())
                    names.push_back(v.name);
                auto ring = make_plain_ring(names);
                std::vector<Polynomial> images{data.evaluate(ScrollGeometry(3, 2).degree_class())};
                for (const auto& v : params->variables())
                    images.push_back(Polynomial::variable(params, v.name));
                auto expected = Polynomial::parse(ring, r.template_text).substitute(images, params);
                return preset_degree_check(s, data, expected);
            }));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

GradedClass class_template(const ScrollGeometry& geo, std::string_view text)
{
    std::vector<Variable> vars = geo.total_ring()->variables();
    vars.push_back({"K", 1});
    auto ring = make_ring(std::move(vars));
    const Polynomial p = Polynomial::parse(ring, text);
    std::vector<Polynomial> images;
    for (const auto& v : geo.total_ring()->variables())
        images.push_back(Polynomial::variable(geo.total_ring(), v.name));
    images.push_back(-Polynomial::variable(geo.total_ring(), "C1"));
    return GradedClass(p.substitute(images, geo.total_ring()), geo.n());
}

Polynomial base_template(const ScrollGeometry& geo, std::string_view text)
{
    const RingPtr ring = template_ring(geo);
    const RingPtr& base = geo.base_ring();
    const Polynomial p = Polynomial::parse(ring, text);
    std::vector<Polynomial> images;
    for (const auto& v : base->variables())
        images.push_back(Polynomial::variable(base, v.name));
    images.push_back(geo.degree_class().polynomial());
    if (p.degree_in(ring->index("g")) > 0 && geo.m() != 2)
        throw InvalidInput("the sectional genus symbol g is only available over surfaces");
    images.push_back(geo.m() == 2 ? Polynomial::parse(base, "1 + (v1^2 - c1*v1)/2") : Polynomial(base));
    images.push_back(-Polynomial::variable(base, "c1"));
    images.push_back(Polynomial::variable(base, "v1") * Rational(1, 2));
    return p.substitute(images, base);
}

AbelianClass abelian_class(int n, int m, int k, int ell)
{
    if (m != 2 && m != 3)
        throw InvalidInput("abelian closed forms exist for m = 2 and m = 3 only");
    if (ell < 1 || ell > n)
        throw InvalidInput("codimension must lie in 1..n");
    const ScrollGeometry geo(n, m);
    const long mu = binomial(m - 1 + k, m - 1).get_si();
    const long nu = binomial(m - 1 + k, m).get_si();
    const int r = geo.fiber_rank();
    // coefficient of L^{ell-j}: binom(ell - j + mu - 1, mu - 1)
    std::vector<std::string> blocks;
    blocks.push_back("1");
    blocks.push_back(str(nu) + "V1");
    blocks.push_back("(" + str(binomial(nu + 1, 2)) + "V1^2 - " + str(nu) + "V2)");
    if (m == 3)
        blocks.push_back("(" + str(binomial(nu + 2, 3)) + "V1^3 - " + str(nu * (nu + 1)) + "V1*V2" +
                         (r >= 3 ? " + " + str(nu) + "V3" : std::string()) + ")");
    AbelianClass out{geo.total_zero(), false};
    std::string text;
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
        if (ell - j < 0) {
            out.dropped_terms = true;
            continue;
        }
        const Integer c = binomial(ell - j + mu - 1, mu - 1);
        if (!text.empty())
            text += " + ";
        text += str(c) + "*" + blocks[j] + "*L^" + str(ell - j);
    }
    out.value = geo.total_class(text);
    return out;
}

Polynomial abelian_degree(int k, int ell)
{
    if (ell < 1)
        throw InvalidInput("codimension must be positive");
    const Integer nu = binomial(k + 1, 2);
    const Integer a = binomial(ell + k, k) + nu * binomial(ell - 2 + k, k);
    const Integer b = nu * binomial(ell - 1 + k, k) + binomial(nu.get_si(), 2) * binomial(ell - 2 + k, k);
    return Polynomial::parse(make_plain_ring({"d", "g"}), str(a) + "d + " + str(b) + "(2g - 2)");
}

Integer secant_scroll_p(int k)
{
    return Integer((k + 1) * (k + 1) + 2);
}

Integer secant_scroll_flexes(int k, const Integer& p)
{
    const Integer K = k;
    const Integer twice = p * (K * K * K * K * K + 5 * K * K * K * K + 13 * K * K * K + 19 * K * K + 16 * K + 6);
    if (twice % 2 != 0)
        throw InvalidInput("p (k^5 + ... + 6) is odd, the count would not be an integer");
    return twice / 2;
}

GradedClass divisor_class(int n, int m)
{
    const ScrollGeometry geo(n, m);
    return class_template(geo, str(n + 2) + "K + " + str(m + 1) + "V1 + " + str(binomial(m + 1, 2)) + "L");
}

std::pair<std::string, std::string> divisor_degree_m2(int n)
{
    const std::string genus = str(n + 2) + "(2g - 2)";
    return {str(4 - n) + "d + " + genus + " - " + str(n - 1) + "v2",
            str(4 - n) + "v1^2 + " + genus + " - 3v2"};
}

DetailsCase thm_details_case(int which)
{
    switch (which) {
    case 1:
        return {"Y = P2, V = O(2) + O(1): (d, deg) = (7, 3)", "3"};
    case 2:
        return {"Y = P2, det V = O(4)", "3d - 12"};
    case 3:
        return {"Y = P(F) over a genus q curve, V = xi (x) p^*G", "3d + 20(q - 1) + 2(F + G)"};
    case 4:
        return {"Y = P(F) over a genus q curve, V an extension of xi + p^*M by 2xi + p^*A",
                "3d + 30(q - 1) + 12F + 8(A + M)"};
    default:
        throw InvalidInput("exceptional cases are numbered 1..4");
    }
}

Polynomial thm_details_degree(int which, const std::map<std::string, Rational>& values)
{
    const auto ring = make_plain_ring({"d", "q", "F", "G", "A", "M"});
    const Polynomial p = Polynomial::parse(ring, thm_details_case(which).degree);
    std::vector<Polynomial> images;
    for (const auto& v : ring->variables()) {
        auto it = values.find(v.name);
        images.push_back(it == values.end() ? Polynomial::variable(ring, v.name) : Polynomial(ring, it->second));
    }
    return p.substitute(images, ring);
}

const std::vector<FormulaRecord>& formula_registry()
{
    static const std::vector<FormulaRecord> registry = [] {
        std::vector<FormulaRecord> out;
        add_kernel_records(out);
        add_threefold_records(out);
        add_divisor_records(out);
        add_fourfold_records(out);
        add_abelian_records(out);
        add_details_records(out);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        return out;
    }();
    return registry;
}

}  // namespace inflect
