#include "graceful/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace graceful {

std::string matrix_text(const AdjacencyMatrix& m) {
    const int n = m.size();
    std::string out = std::to_string(n);
    out.push_back('\n');
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            out.push_back(m.at(i, j) ? '1' : '0');
            out.push_back(j < n ? ' ' : '\n');
        }
    }
    return out;
}

void write_matrix(std::ostream& out, const AdjacencyMatrix& m) {
    out << matrix_text(m);
}

AdjacencyMatrix read_matrix(std::istream& in) {
    long long n = 0;
    if (!(in >> n))
        throw parse_error("expected a vertex count at the start of the matrix block");
    if (n < 1 || n > AdjacencyMatrix::max_vertices)
        throw parse_error("vertex count " + std::to_string(n) + " out of range 1.." +
                          std::to_string(AdjacencyMatrix::max_vertices));
    const int dim = static_cast<int>(n);
    std::vector<std::vector<int>> bits(static_cast<std::size_t>(dim),
                                       std::vector<int>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            int b = 0;
            if (!(in >> b))
                throw parse_error("matrix block ended early at row " + std::to_string(i + 1));
            if (b != 0 && b != 1)
                throw parse_error("matrix entry must be 0 or 1, got " + std::to_string(b));
            bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b;
        }
    }
    for (int i = 0; i < dim; ++i) {
        if (bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw parse_error("main diagonal entry at row " + std::to_string(i + 1) + " must be 0");
        for (int j = i + 1; j < dim; ++j)
            if (bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                bits[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw parse_error("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
    }
    AdjacencyMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                m.set(i + 1, j + 1, true);
    return m;
}

std::vector<AdjacencyMatrix> read_matrix_stream(std::istream& in) {
    std::vector<AdjacencyMatrix> out;
    while (in >> std::ws, !in.eof())
        out.push_back(read_matrix(in));
    return out;
}

std::string edge_list_text(const LabeledGraph& g) {
    std::string out;
    for (const Edge& e : g.edges) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back('\n');
    }
    return out;
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
    out << edge_list_text(g);
}

LabeledGraph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    int max_label = 1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        long long a = 0, b = 0;
        if (!(row >> a)) {
            if (row.eof())
                continue;  // blank line
            throw parse_error("line " + std::to_string(line_no) + ": expected two endpoints");
        }
        if (!(row >> b))
            throw parse_error("line " + std::to_string(line_no) + ": expected two endpoints");
        std::string trailing;
        if (row >> trailing)
            throw parse_error("line " + std::to_string(line_no) + ": trailing content '" + trailing + "'");
        if (a < 1 || b < 1 || a > AdjacencyMatrix::max_vertices || b > AdjacencyMatrix::max_vertices)
            throw parse_error("line " + std::to_string(line_no) + ": endpoint out of range");
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        max_label = std::max({max_label, static_cast<int>(a), static_cast<int>(b)});
    }
    try {
        return make_graph(max_label, pairs);
    } catch (const input_error& e) {
        throw parse_error(e.what());
    }
}

std::string export_dot(const LabeledGraph& g) {
    std::string out = "graph G {\n";
    for (int v = 1; v <= g.n; ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const Edge& e : g.edges) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
               " [label=" + std::to_string(e.v - e.u) + "];\n";
    }
    out += "}\n";
    return out;
}

void Fnv1a::update(std::string_view bytes) {
    for (unsigned char ch : bytes) {
        state_ ^= ch;
        state_ *= 0x100000001b3ULL;
    }
}

std::string Fnv1a::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i)
        out[static_cast<std::size_t>(i)] = digits[(state_ >> (60 - 4 * i)) & 0xfULL];
    return out;
}

std::string manifest_text(const Manifest& m) {
    nlohmann::ordered_json j;
    j["algorithm"] = m.algorithm;
    j["n"] = m.n;
    if (m.n_e)
        j["n_e"] = *m.n_e;
    j["count"] = m.count;
    j["checksum"] = m.checksum;
    j["elapsed_ms"] = m.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string conjecture_report_text(const ConjectureReport& r) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ConjectureRow& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["n"] = row.n;
        jr["trees"] = row.trees;
        jr["graceful"] = row.graceful;
        jr["elapsed_ms"] = row.elapsed_ms;
        j["rows"].push_back(std::move(jr));
    }
    j["failures"] = nlohmann::ordered_json::array();
    for (const TreeCode& code : r.failures)
        j["failures"].push_back(code.code);
    return j.dump(2) + "\n";
}

} // namespace graceful
