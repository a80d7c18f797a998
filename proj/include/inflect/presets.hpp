#pragma once

#include "inflect/base_data.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace inflect {

struct PresetInfo {
    std::string name;
    int dimension = 0;
    std::vector<std::string> parameters;
    std::string description;
};

/// Bundled bases. Chern data of V is symbolic in the listed parameters:
///   P2                 v1 = x h, v2 = y h^2
///   P3                 v1 = x h, v2 = y h^2, v3 = z h^3
///   Q3                 smooth quadric, h^3 = 2, v1 = x h, v2 = y h^2/2, v3 = z h^3/2
///   Fe                 Hirzebruch surface (parameter e), det V = a s + b f, d = deg X
///   BxP1               curve of genus q times P^1, det V = a s + b f, d = deg X
///   abelian_surface    v1^2 = 2g - 2, d = deg X
///   abelian_threefold  v1^3 = x, v1 v2 = y, v3 = z
///   K3                 c2 = 24, v1^2 = 2g - 2, d = deg X
std::vector<PresetInfo> presets();
const PresetInfo& preset_info(std::string_view name);
/// Throws InvalidInput for an unknown name.
NumericalBaseData preset(std::string_view name);

}  // namespace inflect
