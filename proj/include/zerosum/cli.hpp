#pragma once

#include "zerosum/sequence.hpp"
#include "zerosum/sums.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zerosum::cli {

enum ExitCode : int { confirmed = 0, violation = 1, usage = 2 };

struct RunConfig {
    std::string command;    // analyze | verify | families | davenport | bounds | lemmas
    std::string subcommand; // bounds: dgm | cd | prop21; lemmas: 31 | 32 | 33
    std::string group;      // group spec, or the prime p for `bounds cd`
    std::string sequence;   // analyze only

    std::uint64_t max_multisets = default_multiset_budget;
    std::size_t max_brute_terms = default_brute_force_terms;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool dedup = true;

    std::optional<std::string> json_path; // write the JSON report here
    bool json_stdout = false;             // print JSON instead of the human rendering

    std::uint64_t trials = 1000;
    bool exhaustive = false;
    std::uint32_t max_len = 0;
    std::size_t max_sets = 4;
};

/// Parses argv-style arguments (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Dispatches one command; report on `out`, diagnostics on `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping every usage or budget error to exit code 2.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zerosum::cli
