#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "graceful/cli.hpp"
#include "graceful/io.hpp"
#include "graceful/propagation.hpp"
#include "graceful/tree.hpp"

using namespace graceful;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "graceful-io-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = temp_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult invoke(const RunConfig& config) {
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return RunResult{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("matrix text format round-trips") {
    const AdjacencyMatrix p2 = make_matrix(2, {{1, 2}});
    CHECK(matrix_text(p2) == "2\n0 1\n1 0\n");

    std::istringstream in(matrix_text(p2));
    CHECK(read_matrix(in) == p2);

    const AdjacencyMatrix m = make_matrix(4, {{2, 3}, {1, 3}, {1, 4}});
    std::ostringstream stream;
    write_matrix(stream, p2);
    stream << '\n';
    write_matrix(stream, m);
    std::istringstream back(stream.str());
    const auto list = read_matrix_stream(back);
    REQUIRE(list.size() == 2);
    CHECK(list[0] == p2);
    CHECK(list[1] == m);
}

TEST_CASE("read_matrix rejects malformed blocks") {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_matrix(in), parse_error);
    };
    fails("");
    fails("x");
    fails("0\n");
    fails("64\n");
    fails("2\n0 1\n1\n");
    fails("2\n0 2\n2 0\n");
    fails("2\n0 1\n0 0\n");  // asymmetric
    fails("2\n1 1\n1 0\n");  // nonzero diagonal
}

TEST_CASE("edge-list format round-trips") {
    const LabeledGraph star = make_graph(3, {{1, 2}, {1, 3}});
    CHECK(edge_list_text(star) == "1 2\n1 3\n");

    std::istringstream in(edge_list_text(star));
    CHECK(read_edge_list(in) == star);

    std::istringstream unsorted("3 1\n1 2\n");
    CHECK(read_edge_list(unsorted) == star);

    std::istringstream empty("");
    CHECK(read_edge_list(empty) == make_graph(1, {}));

    std::istringstream dup("1 2\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(dup), parse_error);
    std::istringstream loop("2 2\n");
    CHECK_THROWS_AS(read_edge_list(loop), parse_error);
    std::istringstream three("1 2 3\n");
    CHECK_THROWS_AS(read_edge_list(three), parse_error);
}

TEST_CASE("DOT export is deterministic with weight labels") {
    CHECK(export_dot(make_graph(2, {{1, 2}})) ==
          "graph G {\n  1;\n  2;\n  1 -- 2 [label=1];\n}\n");
    const std::string star = export_dot(make_graph(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(star == "graph G {\n  1;\n  2;\n  3;\n  4;\n"
                  "  1 -- 2 [label=1];\n  1 -- 3 [label=2];\n  1 -- 4 [label=3];\n}\n");
    CHECK(star == export_dot(make_graph(4, {{1, 4}, {1, 3}, {1, 2}})));
}

TEST_CASE("FNV-1a checksum matches the reference vectors") {
    Fnv1a empty;
    CHECK(empty.hex() == "cbf29ce484222325");
    Fnv1a a;
    a.update("a");
    CHECK(a.hex() == "af63dc4c8601ec8c");
    Fnv1a ab;
    ab.update("a");
    ab.update("b");
    Fnv1a ab2;
    ab2.update("ab");
    CHECK(ab.hex() == ab2.hex());
}

TEST_CASE("manifest serialization") {
    Manifest m{"2.3", 5, 2, 7, "00ff00ff00ff00ff", 12};
    const auto j = nlohmann::json::parse(manifest_text(m));
    CHECK(j["algorithm"] == "2.3");
    CHECK(j["n"] == 5);
    CHECK(j["n_e"] == 2);
    CHECK(j["count"] == 7);
    CHECK(j["checksum"] == "00ff00ff00ff00ff");
    CHECK(j.contains("elapsed_ms"));

    Manifest single{"2.1", 4, std::nullopt, 6, "deadbeefdeadbeef", 1};
    const auto j2 = nlohmann::json::parse(manifest_text(single));
    CHECK_FALSE(j2.contains("n_e"));
}

TEST_CASE("conjecture report serialization") {
    ConjectureReport r;
    r.n_max = 2;
    r.rows = {{1, 1, 1, 0}, {2, 1, 1, 0}};
    const auto j = nlohmann::json::parse(conjecture_report_text(r));
    CHECK(j["n_max"] == 2);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["trees"] == 1);
    CHECK(j["failures"].empty());
}

TEST_CASE("cli verify prints the verdict") {
    const fs::path good = write_file("p2.txt", "2\n0 1\n1 0\n");
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.input_path = good.string();
    RunResult r = invoke(cfg);
    CHECK(r.code == exit_ok);
    CHECK(r.out == "graceful: true\n");

    const fs::path bad = write_file("path3.txt", "1 2\n2 3\n");
    cfg.input_path = bad.string();
    r = invoke(cfg);
    CHECK(r.code == exit_ok);  // a false verdict is not an error
    CHECK(r.out == "graceful: false\n");
}

TEST_CASE("cli error classes map to distinct exit codes") {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.input_path = (temp_dir() / "missing.txt").string();
    CHECK(invoke(cfg).code == exit_parse_error);

    const fs::path mangled = write_file("mangled.txt", "2\n0 9\n9 0\n");
    cfg.input_path = mangled.string();
    CHECK(invoke(cfg).code == exit_parse_error);

    RunConfig enumeration;
    enumeration.command = Command::enum_graceful;
    enumeration.n = 9;
    enumeration.limits.max_matrix_n = 8;
    CHECK(invoke(enumeration).code == exit_limit_error);

    RunConfig bad_choice;
    bad_choice.command = Command::propagate1;
    bad_choice.input_path = write_file("p2b.txt", "2\n0 1\n1 0\n").string();
    bad_choice.i = 7;
    CHECK(invoke(bad_choice).code == exit_input_error);

    RunConfig not_graceful;
    not_graceful.command = Command::propagate1;
    not_graceful.input_path = write_file("path3b.txt", "1 2\n2 3\n").string();
    CHECK(invoke(not_graceful).code == exit_input_error);
}

TEST_CASE("cli enum-graceful writes the payload and manifest") {
    const fs::path out = temp_dir() / "enum5.txt";
    RunConfig cfg;
    cfg.command = Command::enum_graceful;
    cfg.n = 5;
    cfg.output_path = out.string();
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);

    std::istringstream payload(read_file(out));
    const auto matrices = read_matrix_stream(payload);
    CHECK(matrices.size() == 24);
    for (const auto& m : matrices)
        CHECK(is_graceful_matrix(m));

    const auto manifest = nlohmann::json::parse(read_file(out.string() + ".manifest.json"));
    CHECK(manifest["algorithm"] == "2.1");
    CHECK(manifest["n"] == 5);
    CHECK(manifest["count"] == 24);
    CHECK(manifest["checksum"].get<std::string>().size() == 16);
}

TEST_CASE("cli without --out streams payload to stdout and manifest to stderr") {
    RunConfig cfg;
    cfg.command = Command::enum_graceful;
    cfg.n = 3;
    RunResult r = invoke(cfg);
    CHECK(r.code == exit_ok);
    std::istringstream payload(r.out);
    CHECK(read_matrix_stream(payload).size() == 2);
    const auto manifest = nlohmann::json::parse(r.err);
    CHECK(manifest["count"] == 2);
}

TEST_CASE("cli propagate1 emits one or all children") {
    const fs::path parent = write_file("star3.txt", "3\n0 1 1\n1 0 0\n1 0 0\n");
    RunConfig cfg;
    cfg.command = Command::propagate1;
    cfg.input_path = parent.string();
    cfg.i = 3;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream one(r.out);
    const GracefulMatrix star = GracefulMatrix::certify(make_matrix(3, {{1, 2}, {1, 3}}));
    CHECK(read_matrix(one) == propagate_single(star, SingleChoice{3}).matrix());

    cfg.i.reset();
    r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream all(r.out);
    CHECK(read_matrix_stream(all).size() == 3);
    const auto manifest = nlohmann::json::parse(r.err);
    CHECK(manifest["algorithm"] == "2.1");
    CHECK(manifest["count"] == 3);
}

TEST_CASE("cli propagateK enumerates the selection space") {
    const fs::path parent = write_file("star3k.txt", "1 2\n1 3\n");  // edge-list input works too
    RunConfig cfg;
    cfg.command = Command::propagateK;
    cfg.input_path = parent.string();
    cfg.n_e = 2;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream payload(r.out);
    const auto children = read_matrix_stream(payload);
    CHECK(children.size() == 2);
    const auto manifest = nlohmann::json::parse(r.err);
    CHECK(manifest["algorithm"] == "2.3");
    CHECK(manifest["n_e"] == 2);
}

TEST_CASE("cli propagate-tree writes edge lists") {
    const fs::path parent = write_file("p2.edges", "1 2\n");
    RunConfig cfg;
    cfg.command = Command::propagate_tree;
    cfg.input_path = parent.string();
    cfg.i = 2;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    CHECK(r.out == "1 3\n2 3\n");
    const auto manifest = nlohmann::json::parse(r.err);
    CHECK(manifest["algorithm"] == "3.1");
}

TEST_CASE("cli enum-trees emits sorted codes or representatives") {
    RunConfig cfg;
    cfg.command = Command::enum_trees;
    cfg.n = 4;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream lines(r.out);
    std::string first, second;
    REQUIRE(std::getline(lines, first));
    REQUIRE(std::getline(lines, second));
    CHECK(first < second);
    CHECK(first == enumerate_trees(4)[0].code);

    cfg.format = Format::edgelist;
    r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream blocks(r.out);
    // two blank-line-separated edge lists of 3 edges each
    int edge_lines = 0, blank_lines = 0;
    std::string line;
    while (std::getline(blocks, line)) {
        if (line.empty())
            ++blank_lines;
        else
            ++edge_lines;
    }
    CHECK(edge_lines == 6);
    CHECK(blank_lines == 1);
}

TEST_CASE("cli filter-trees counts match the library") {
    RunConfig cfg;
    cfg.command = Command::filter_trees;
    cfg.n = 4;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    std::istringstream payload(r.out);
    CHECK(read_matrix_stream(payload).size() == filter_graceful_trees(4).size());
}

TEST_CASE("cli check-conjecture reports success") {
    RunConfig cfg;
    cfg.command = Command::check_conjecture;
    cfg.n_max = 5;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["n_max"] == 5);
    CHECK(report["failures"].empty());
    CHECK(report["rows"].size() == 5);
}

TEST_CASE("cli export converts between formats") {
    const fs::path in = write_file("p2c.txt", "2\n0 1\n1 0\n");
    RunConfig cfg;
    cfg.command = Command::export_graph;
    cfg.input_path = in.string();
    RunResult r = invoke(cfg);
    REQUIRE(r.code == exit_ok);
    CHECK(r.out == export_dot(make_graph(2, {{1, 2}})));

    cfg.format = Format::edgelist;
    CHECK(invoke(cfg).out == "1 2\n");

    cfg.format = Format::matrix;
    CHECK(invoke(cfg).out == "2\n0 1\n1 0\n");

    // a trailing isolated vertex cannot survive an edge-list round trip
    const fs::path lonely = write_file("lonely.txt", "3\n0 1 0\n1 0 0\n0 0 0\n");
    cfg.input_path = lonely.string();
    cfg.format = Format::edgelist;
    CHECK(invoke(cfg).code == exit_input_error);
}

TEST_CASE("cli runs are deterministic across parallelism levels") {
    RunConfig cfg;
    cfg.command = Command::enum_graceful;
    cfg.n = 6;
    cfg.jobs = 1;
    const RunResult serial = invoke(cfg);
    cfg.jobs = 4;
    const RunResult parallel = invoke(cfg);
    REQUIRE(serial.code == exit_ok);
    REQUIRE(parallel.code == exit_ok);
    CHECK(serial.out == parallel.out);
    const auto m1 = nlohmann::json::parse(serial.err);
    const auto m2 = nlohmann::json::parse(parallel.err);
    CHECK(m1["checksum"] == m2["checksum"]);
    CHECK(m1["count"] == m2["count"]);
}
