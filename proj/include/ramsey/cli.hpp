#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ramsey::cli {

enum class Command {
    generate,
    analyze,
    find,
    canon,
    search_f,
    bipartite_find,
    bipartite_analyze,
    verify_trichotomy,
};

enum ExitCode : int {
    ok = 0,
    not_found = 1,
    input_error = 2,
};

struct RunConfig {
    Command command = Command::analyze;

    // exactly one of these input sources (search-F takes neither)
    std::optional<std::string> input;
    std::optional<std::string> gen;

    std::optional<std::size_t> n;
    std::optional<std::size_t> p;
    std::optional<std::size_t> q;
    std::optional<std::size_t> centre;
    std::optional<std::size_t> l;
    std::optional<std::size_t> k;
    std::uint64_t seed = 1;

    std::optional<std::size_t> m;
    std::optional<std::size_t> min_size;
    std::optional<std::size_t> max_size;
    std::optional<std::size_t> size;
    std::optional<std::size_t> budget_threshold;
    std::optional<std::size_t> fallback;
    unsigned threads = 1;

    bool json = false;
    bool explain = false;
};

/// Executes one command. Reports go to `out`, diagnostics to `err`. Returns 0
/// on success, 1 when nothing was found (or a counterexample is absent), 2 on
/// bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses a full command line (args[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramsey::cli
