#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dmt {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

struct RunConfig {
    std::string command;
    /// A file path, or `corpus:<name>` for a built-in complex.
    std::optional<std::string> complex;
    std::optional<std::string> matching;
    std::optional<std::string> orderings;
    /// A previously written subdivided field to check instead of rebuilding it.
    std::optional<std::string> delta;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    bool fill_orderings = false;
    bool parallel = false;
    /// export-graph: "delta" or "base".
    std::string level = "delta";
};

/// Runs one CLI command. The main document goes to `config.out` when set,
/// otherwise to `out`; summaries and diagnostics go to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dmt
