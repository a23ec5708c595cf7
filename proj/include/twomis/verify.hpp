#pragma once

#include <string>
#include <vector>

#include "twomis/report.hpp"

namespace twomis {

struct VerifyOptions {
    int nmax = -1;  // -1 keeps each suite's default scope
    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;
    int workers = 0;  // 0 = hardware concurrency
    std::string catalog_path = "data/graphs_upto8.g6";
    Limits limits;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;  // "<graph6>: what went wrong"
    std::vector<std::string> notes;     // informational, never failing
    bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& verify_suite_names();  // excludes "all"

/// Runs one named suite ("all" runs every suite). Throws std::invalid_argument
/// for unknown names, ParseError when the catalog file cannot be read.
std::vector<SuiteResult> run_verify(const std::string& name, const VerifyOptions& options);

Json verify_json(const std::vector<SuiteResult>& results, const VerifyOptions& options);

}  // namespace twomis
