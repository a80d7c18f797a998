#pragma once

#include "inflect/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inflect::cli {

/// Exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,  // verify found a failing row
    exit_usage = 2,         // bad flags or invalid input
    exit_incomplete = 3,    // base data lacks needed numbers
    exit_resource = 4,      // a size guard tripped
    exit_internal = 5,      // consistency error or anything unexpected
};

/// Environment variable naming the directory searched for relative --data paths.
inline constexpr const char* data_dir_env = "INFLECT_DATA_DIR";

/// One parsed invocation.
struct RunConfig {
    std::string command;  // rank, class, degree, scan, jet, verify
    std::optional<int> n, m, k, N;
    std::optional<std::string> base;  // preset name
    std::optional<std::string> data;  // base data file
    std::map<std::string, std::string> params;  // preset parameter values, name -> rational text
    std::string format = "pretty";  // pretty | structured
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::string filter;
    std::optional<std::string> family;
    std::optional<int> ell;
    std::optional<std::string> spec;   // jet spec file
    std::optional<std::string> chart;  // bundled jet chart
    std::optional<int> minors;         // target rank for inflection equations
    std::optional<std::string> inject_fault;

    bool operator==(const RunConfig&) const = default;
};

Json to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

/// Parses arguments (argv[0] is the program name). Throws InvalidInput on
/// usage errors, including conflicting flags. Returns nullopt after printing
/// help to `out`.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

/// Executes a config; returns an exit code. Errors go to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments followed by execute, with errors mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Names accepted by `jet --chart`.
std::vector<std::string> bundled_charts();

}  // namespace inflect::cli
