#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "graceful/cli.hpp"

namespace {

// GRACEFUL_MAX_N overrides every resource-guard ceiling at once.
graceful::SearchLimits limits_from_env() {
    graceful::SearchLimits limits;
    const char* raw = std::getenv("GRACEFUL_MAX_N");
    if (raw == nullptr || *raw == '\0')
        return limits;
    try {
        std::size_t used = 0;
        const int value = std::stoi(raw, &used);
        if (used != std::string(raw).size() || value < 1)
            throw std::invalid_argument(raw);
        limits.max_matrix_n = value;
        limits.max_tree_n = value;
        limits.max_conjecture_n = value;
    } catch (const std::exception&) {
        throw graceful::input_error(std::string("GRACEFUL_MAX_N must be a positive integer, got '") +
                                    raw + "'");
    }
    return limits;
}

struct SubcommandSpec {
    graceful::Command command;
    const char* name;
    const char* description;
    bool takes_n = false;
    bool takes_ne = false;
    bool takes_i = false;
    bool takes_n_max = false;
    bool takes_in = false;
    bool takes_format = false;
    bool takes_jobs = false;
};

constexpr SubcommandSpec subcommands[] = {
    {graceful::Command::verify, "verify", "Check whether an input graph or matrix is gracefully labeled",
     false, false, false, false, true, false, false},
    {graceful::Command::propagate1, "propagate1",
     "Append one vertex to a graceful matrix (all superdiagonal slots, or --i for one)", false, false,
     true, false, true, true, false},
    {graceful::Command::propagateK, "propagateK",
     "Append --ne vertices to a graceful matrix, one output per diagonal selection", false, true,
     false, false, true, true, false},
    {graceful::Command::propagate_tree, "propagate-tree",
     "Attach a leaf to a tree (all attachment points, or --i for one)", false, false, true, false,
     true, true, false},
    {graceful::Command::enum_graceful, "enum-graceful",
     "Enumerate every gracefully labeled matrix of dimension --n", true, false, false, false, false,
     true, true},
    {graceful::Command::enum_trees, "enum-trees",
     "Enumerate all unlabeled trees on --n vertices (canonical codes by default)", true, false, false,
     false, false, true, false},
    {graceful::Command::filter_trees, "filter-trees",
     "Enumerate the gracefully labeled matrices of dimension --n whose graphs are trees", true, false,
     false, false, false, true, true},
    {graceful::Command::check_conjecture, "check-conjecture",
     "Search a graceful labeling for every tree with up to --n-max vertices", false, false, false,
     true, false, false, true},
    {graceful::Command::export_graph, "export",
     "Convert an input graph between matrix, edge-list and DOT formats", false, false, false, false,
     true, true, false},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graceful graph and tree propagation toolkit"};
    app.require_subcommand(1);

    graceful::RunConfig config;
    try {
        config.limits = limits_from_env();
    } catch (const graceful::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return graceful::exit_input_error;
    }

    const std::map<std::string, graceful::Format> format_names{
        {"matrix", graceful::Format::matrix},
        {"edgelist", graceful::Format::edgelist},
        {"dot", graceful::Format::dot},
        {"json", graceful::Format::json},
    };

    int n = 0, ne = 0, i = 0, n_max = 0, jobs = 1;
    std::string in_path, out_path;
    graceful::Format format = graceful::Format::matrix;

    for (const SubcommandSpec& spec : subcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        if (spec.takes_n)
            sub->add_option("--n", n, "vertex count")->required();
        if (spec.takes_ne)
            sub->add_option("--ne", ne, "number of appended vertices")->required();
        if (spec.takes_i)
            sub->add_option("--i", i, "single choice index (omit to produce all)");
        if (spec.takes_n_max)
            sub->add_option("--n-max", n_max, "largest vertex count to check")->required();
        if (spec.takes_in)
            sub->add_option("--in", in_path, "input file (matrix or edge-list, detected)")->required();
        sub->add_option("--out", out_path, "output file (stdout when omitted)");
        if (spec.takes_format)
            sub->add_option("--format", format, "output format")
                ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
        if (spec.takes_jobs)
            sub->add_option("--jobs", jobs, "worker count for enumeration")->check(CLI::PositiveNumber);

        sub->callback([&, spec, sub]() {
            config.command = spec.command;
            if (spec.takes_n)
                config.n = n;
            if (spec.takes_ne)
                config.n_e = ne;
            if (spec.takes_i && sub->count("--i") > 0)
                config.i = i;
            if (spec.takes_n_max)
                config.n_max = n_max;
            if (spec.takes_in)
                config.input_path = in_path;
            if (sub->count("--out") > 0)
                config.output_path = out_path;
            if (spec.takes_format && sub->count("--format") > 0)
                config.format = format;
            if (spec.takes_jobs)
                config.jobs = jobs;
        });
    }

    CLI11_PARSE(app, argc, argv);
    return graceful::run(config, std::cout, std::cerr);
}
