#include "graceful/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graceful/io.hpp"
#include "graceful/propagation.hpp"
#include "graceful/tree.hpp"

namespace graceful {

namespace {

class Stopwatch {
public:
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class InputKind { matrix, edgelist };

// Matrix blocks start with a lone vertex count; edge lists have two fields
// per line. An empty file is the empty edge list.
InputKind sniff(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string a, b, c;
        if (!(row >> a))
            continue;
        if (!(row >> b))
            return InputKind::matrix;
        if (row >> c)
            throw parse_error("unrecognized input format: a line has more than two fields");
        return InputKind::edgelist;
    }
    return InputKind::edgelist;
}

LabeledGraph load_graph(const std::string& path) {
    const std::string content = slurp(path);
    std::istringstream in(content);
    if (sniff(content) == InputKind::matrix)
        return to_graph(read_matrix(in));
    return read_edge_list(in);
}

AdjacencyMatrix load_matrix(const std::string& path) {
    const std::string content = slurp(path);
    std::istringstream in(content);
    if (sniff(content) == InputKind::matrix)
        return read_matrix(in);
    return to_matrix(read_edge_list(in));
}

int require(const std::optional<int>& value, const char* flag) {
    if (!value)
        throw input_error(std::string("missing required flag ") + flag);
    return *value;
}

const std::string& require_path(const std::optional<std::string>& value, const char* flag) {
    if (!value)
        throw input_error(std::string("missing required flag ") + flag);
    return *value;
}

void guard_matrix_n(int n, const SearchLimits& limits) {
    if (n > limits.max_matrix_n)
        throw resource_limit_error("n=" + std::to_string(n) +
                                   " exceeds the matrix enumeration limit " +
                                   std::to_string(limits.max_matrix_n) +
                                   " (set GRACEFUL_MAX_N to raise it)");
}

void guard_tree_n(int n, const SearchLimits& limits) {
    if (n > limits.max_tree_n)
        throw resource_limit_error("n=" + std::to_string(n) + " exceeds the tree enumeration limit " +
                                   std::to_string(limits.max_tree_n) +
                                   " (set GRACEFUL_MAX_N to raise it)");
}

bool edge_list_representable(const LabeledGraph& g) {
    if (g.edges.empty())
        return g.n == 1;
    int max_label = 0;
    for (const Edge& e : g.edges)
        max_label = std::max(max_label, e.v);
    return max_label == g.n;
}

std::string render_graph(const LabeledGraph& g, Format format) {
    switch (format) {
    case Format::matrix:
        return matrix_text(to_matrix(g));
    case Format::edgelist:
        if (!edge_list_representable(g))
            throw input_error("edge-list format cannot represent a trailing isolated vertex; "
                              "use the matrix format");
        return edge_list_text(g);
    case Format::dot:
        return export_dot(g);
    case Format::json:
        throw input_error("json format only applies to reports");
    }
    throw input_error("unknown format");
}

// Accumulates serialized objects plus their order-sensitive checksum.
class Payload {
public:
    explicit Payload(std::string separator) : separator_(std::move(separator)) {}

    void add(const std::string& object_text) {
        if (count_ > 0)
            text_ += separator_;
        text_ += object_text;
        checksum_.update(object_text);
        ++count_;
    }

    const std::string& text() const { return text_; }
    long long count() const { return count_; }
    std::string checksum_hex() const { return checksum_.hex(); }

private:
    std::string separator_;
    std::string text_;
    Fnv1a checksum_;
    long long count_ = 0;
};

void emit(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& payload,
          const std::optional<Manifest>& manifest) {
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file)
            throw input_error("cannot open output file: " + *config.output_path);
        file << payload;
        if (!file)
            throw input_error("failed to write output file: " + *config.output_path);
        if (manifest) {
            const std::string manifest_path = *config.output_path + ".manifest.json";
            std::ofstream mf(manifest_path, std::ios::binary);
            if (!mf)
                throw input_error("cannot open manifest file: " + manifest_path);
            mf << manifest_text(*manifest);
        }
    } else {
        out << payload;
        if (manifest)
            err << manifest_text(*manifest);
    }
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const std::string& path = require_path(config.input_path, "--in");
    const std::string content = slurp(path);
    std::istringstream in(content);
    bool ok = false;
    if (sniff(content) == InputKind::matrix)
        ok = is_graceful_matrix(read_matrix(in));
    else
        ok = is_graceful_graph(read_edge_list(in));
    out << "graceful: " << (ok ? "true" : "false") << '\n';
    return exit_ok;
}

int cmd_propagate_single(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const GracefulMatrix parent = GracefulMatrix::certify(load_matrix(require_path(config.input_path, "--in")));
    std::vector<GracefulMatrix> children;
    if (config.i)
        children.push_back(propagate_single(parent, SingleChoice{*config.i}));
    else
        children = propagate_single_all(parent);
    const Format format = config.format.value_or(Format::matrix);
    Payload payload("\n");
    for (const GracefulMatrix& child : children)
        payload.add(render_graph(to_graph(child.matrix()), format));
    Manifest manifest{"2.1", parent.size(), std::nullopt, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_propagate_multi(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const int appended = require(config.n_e, "--ne");
    if (appended > config.limits.max_matrix_n)
        throw resource_limit_error("ne=" + std::to_string(appended) +
                                   " exceeds the selection enumeration limit " +
                                   std::to_string(config.limits.max_matrix_n) +
                                   " (set GRACEFUL_MAX_N to raise it)");
    const GracefulMatrix parent = GracefulMatrix::certify(load_matrix(require_path(config.input_path, "--in")));
    const std::vector<GracefulMatrix> children = multi_propagate_all(parent, appended);
    const Format format = config.format.value_or(Format::matrix);
    Payload payload("\n");
    for (const GracefulMatrix& child : children)
        payload.add(render_graph(to_graph(child.matrix()), format));
    Manifest manifest{"2.3", parent.size(), appended, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_propagate_tree(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const LabeledTree parent = LabeledTree::validate(load_graph(require_path(config.input_path, "--in")));
    std::vector<LabeledTree> children;
    if (config.i)
        children.push_back(propagate_tree(parent, AttachChoice{*config.i}));
    else
        children = propagate_tree_all(parent);
    const Format format = config.format.value_or(Format::edgelist);
    Payload payload("\n");
    for (const LabeledTree& child : children)
        payload.add(render_graph(child.graph(), format));
    Manifest manifest{"3.1", parent.size(), std::nullopt, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_enum_graceful(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const int n = require(config.n, "--n");
    guard_matrix_n(n, config.limits);
    const std::vector<GracefulMatrix> matrices = enumerate_graceful(n, config.jobs);
    const Format format = config.format.value_or(Format::matrix);
    Payload payload("\n");
    for (const GracefulMatrix& m : matrices)
        payload.add(render_graph(to_graph(m.matrix()), format));
    Manifest manifest{"2.1", n, std::nullopt, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_enum_trees(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const int n = require(config.n, "--n");
    guard_tree_n(n, config.limits);
    Payload payload(config.format ? "\n" : "");
    if (!config.format) {
        // canonical code export: one code per line, sorted
        for (const TreeCode& code : enumerate_trees(n))
            payload.add(code.code + "\n");
    } else {
        for (const LabeledTree& rep : enumerate_tree_representatives(n))
            payload.add(render_graph(rep.graph(), *config.format));
    }
    Manifest manifest{"3.1", n, std::nullopt, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_filter_trees(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Stopwatch timer;
    const int n = require(config.n, "--n");
    guard_matrix_n(n, config.limits);
    const std::vector<GracefulMatrix> matrices = filter_graceful_trees(n, config.jobs);
    const Format format = config.format.value_or(Format::matrix);
    Payload payload("\n");
    for (const GracefulMatrix& m : matrices)
        payload.add(render_graph(to_graph(m.matrix()), format));
    Manifest manifest{"2.1", n, std::nullopt, payload.count(), payload.checksum_hex(),
                      timer.elapsed_ms()};
    emit(config, out, err, payload.text(), manifest);
    return exit_ok;
}

int cmd_check_conjecture(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const int n_max = require(config.n_max, "--n-max");
    const ConjectureReport report = check_conjecture(n_max, config.limits, config.jobs);
    emit(config, out, err, conjecture_report_text(report), std::nullopt);
    if (!report.failures.empty()) {
        err << "error: " << report.failures.size() << " trees have no graceful labeling\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const LabeledGraph g = load_graph(require_path(config.input_path, "--in"));
    const Format format = config.format.value_or(Format::dot);
    emit(config, out, err, render_graph(g, format), std::nullopt);
    return exit_ok;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.jobs < 1)
        throw input_error("jobs must be at least 1, got " + std::to_string(config.jobs));
    switch (config.command) {
    case Command::verify:
        return cmd_verify(config, out);
    case Command::propagate1:
        return cmd_propagate_single(config, out, err);
    case Command::propagateK:
        return cmd_propagate_multi(config, out, err);
    case Command::propagate_tree:
        return cmd_propagate_tree(config, out, err);
    case Command::enum_graceful:
        return cmd_enum_graceful(config, out, err);
    case Command::enum_trees:
        return cmd_enum_trees(config, out, err);
    case Command::filter_trees:
        return cmd_filter_trees(config, out, err);
    case Command::check_conjecture:
        return cmd_check_conjecture(config, out, err);
    case Command::export_graph:
        return cmd_export(config, out, err);
    }
    throw input_error("unknown command");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_limit_error;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace graceful
