#ifndef GRACEFUL_CLI_HPP
#define GRACEFUL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "graceful/oracle.hpp"

namespace graceful {

enum class Command {
    verify,
    propagate1,
    propagateK,
    propagate_tree,
    enum_graceful,
    enum_trees,
    filter_trees,
    check_conjecture,
    export_graph,
};

enum class Format { matrix, edgelist, dot, json };

// One fully resolved invocation. Flags beat environment beats defaults; the
// binary performs that resolution and hands the result here.
struct RunConfig {
    Command command = Command::verify;
    std::optional<int> n;
    std::optional<int> n_e;
    std::optional<int> i;
    std::optional<int> n_max;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    std::optional<Format> format;
    int jobs = 1;
    SearchLimits limits;
};

// Exit codes: 0 success, 1 internal or failed check, 2 input/range error,
// 3 file parse error, 4 resource-guard refusal.
constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_parse_error = 3;
constexpr int exit_limit_error = 4;

// Dispatches the command. Payload goes to the output file when set,
// otherwise to `out`; the run manifest goes to "<output>.manifest.json" or,
// without an output file, to `err`. Diagnostics always go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace graceful

#endif
