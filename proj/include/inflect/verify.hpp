#pragma once

#include <optional>
#include <string>
#include <vector>

namespace inflect {

struct VerifyRow {
    std::string id;
    std::string group;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string note;
};

struct VerifyOptions {
    /// Keeps checks whose id contains the text or whose group equals it; empty keeps all.
    std::string filter;
    /// Corrupts one check (a coefficient of its template, or its expected value) to exercise failure reporting.
    std::optional<std::string> inject_fault;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Ids of every check, sorted: closed-form records, scans (scan.*) and jet probes (jet.*).
std::vector<std::string> verify_ids();

/// Runs the selected checks concurrently; rows come back sorted by id.
/// Throws InvalidInput when a filter or fault id selects nothing.
std::vector<VerifyRow> run_verify(const VerifyOptions& options = {});

}  // namespace inflect
