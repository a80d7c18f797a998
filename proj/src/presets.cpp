#include "inflect/presets.hpp"

#include "inflect/errors.hpp"

namespace inflect {

std::vector<PresetInfo> presets()
{
    return {
        {"P2", 2, {"x", "y"}, "projective plane, c(T) = 1 + 3h + 3h^2"},
        {"P3", 3, {"x", "y", "z"}, "projective space, c(T) = (1 + h)^4"},
        {"Q3", 3, {"x", "y", "z"}, "smooth quadric threefold, c(T) = 1 + 3h + 4h^2 + 2h^3"},
        {"Fe", 2, {"e", "a", "b", "d"}, "Hirzebruch surface, s^2 = -e, K = -2s - (2+e)f"},
        {"BxP1", 2, {"q", "a", "b", "d"}, "genus q curve times P^1, K = (2q-2)f - 2s"},
        {"abelian_surface", 2, {"g", "d"}, "abelian surface, trivial tangent bundle"},
        {"abelian_threefold", 3, {"x", "y", "z"}, "abelian threefold, trivial tangent bundle"},
        {"K3", 2, {"g", "d"}, "K3 surface, c1 = 0, c2 = 24"},
    };
}

const PresetInfo& preset_info(std::string_view name)
{
    static const std::vector<PresetInfo> all = presets();
    for (const auto& p : all)
        if (p.name == name)
            return p;
    throw InvalidInput("unknown base preset '" + std::string(name) + "'");
}

NumericalBaseData preset(std::string_view name)
{
    const PresetInfo& info = preset_info(name);
    if (name == "P2")
        return IntersectionModel(2, {"h"}, info.parameters)
            .integral("h^2", "1")
            .chern("c1", "3h")
            .chern("c2", "3h^2")
            .chern("v1", "x*h")
            .chern("v2", "y*h^2")
            .build();
    if (name == "P3")
        return IntersectionModel(3, {"h"}, info.parameters)
            .integral("h^3", "1")
            .chern("c1", "4h")
            .chern("c2", "6h^2")
            .chern("c3", "4h^3")
            .chern("v1", "x*h")
            .chern("v2", "y*h^2")
            .chern("v3", "z*h^3")
            .build();
    if (name == "Q3")
        return IntersectionModel(3, {"h"}, info.parameters)
            .integral("h^3", "2")
            .chern("c1", "3h")
            .chern("c2", "4h^2")
            .chern("c3", "2h^3")
            .chern("v1", "x*h")
            .chern("v2", "y*h^2/2")
            .chern("v3", "z*h^3/2")
            .build();
    if (name == "Fe")
        return IntersectionModel(2, {"s", "f"}, info.parameters)
            .integral("s^2", "-e")
            .integral("s*f", "1")
            .integral("f^2", "0")
            .chern("c1", "2s + (2+e)f")
            .chern("c2", "4s*f")
            .chern("v1", "a*s + b*f")
            .chern("v2", "(2a*b - a^2*e - d)s*f")
            .build();
    if (name == "BxP1")
        return IntersectionModel(2, {"s", "f"}, info.parameters)
            .integral("s^2", "0")
            .integral("s*f", "1")
            .integral("f^2", "0")
            .chern("c1", "2s - (2q-2)f")
            .chern("c2", "4(1-q)s*f")
            .chern("v1", "a*s + b*f")
            .chern("v2", "(2a*b - d)s*f")
            .build();

    NumericalBaseData data(info.dimension, info.parameters);
    for (const auto& key : data.all_keys())
        data.set(key, Rational(0));
    if (name == "abelian_surface" || name == "K3") {
        data.set("v1^2", "2g - 2");
        data.set("v2", "2g - 2 - d");
        if (name == "K3")
            data.set("c2", Rational(24));
    } else {
        data.set("v1^3", "x");
        data.set("v1*v2", "y");
        data.set("v3", "z");
    }
    return data;
}

}  // namespace inflect
