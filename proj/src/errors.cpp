#include "inflect/errors.hpp"

namespace inflect {

namespace {

std::string describe_missing(const std::vector<std::string>& missing)
{
    std::string out = "base data is missing intersection numbers for:";
    for (const auto& m : missing)
        out += " " + m;
    return out;
}

}  // namespace

IncompleteData::IncompleteData(std::vector<std::string> missing)
    : Error(describe_missing(missing)), missing_(std::move(missing))
{
}

}  // namespace inflect
