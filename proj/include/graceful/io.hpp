#ifndef GRACEFUL_IO_HPP
#define GRACEFUL_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graceful/matrix.hpp"
#include "graceful/oracle.hpp"

namespace graceful {

// Matrix text format: line 1 is n, lines 2..n+1 hold n space-separated bits.
std::string matrix_text(const AdjacencyMatrix& m);
void write_matrix(std::ostream& out, const AdjacencyMatrix& m);
AdjacencyMatrix read_matrix(std::istream& in);

// Streams are blank-line-separated matrix blocks.
std::vector<AdjacencyMatrix> read_matrix_stream(std::istream& in);

// Edge-list format: one "u v" line per edge, u < v, sorted. The vertex count
// is recovered as the largest endpoint (an empty list reads as the
// single-vertex graph), so a trailing isolated vertex is not representable.
std::string edge_list_text(const LabeledGraph& g);
void write_edge_list(std::ostream& out, const LabeledGraph& g);
LabeledGraph read_edge_list(std::istream& in);

// Undirected DOT text with edge weights |u - v| as labels; byte-stable.
std::string export_dot(const LabeledGraph& g);

// Order-sensitive 64-bit FNV-1a over the serialized objects of a run.
class Fnv1a {
public:
    void update(std::string_view bytes);
    std::string hex() const;  // 16 lowercase hex digits

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

struct Manifest {
    std::string algorithm;  // "2.1", "2.3" or "3.1"
    int n = 0;
    std::optional<int> n_e;  // multi-vertex runs only
    long long count = 0;
    std::string checksum;
    long long elapsed_ms = 0;
};

std::string manifest_text(const Manifest& m);

std::string conjecture_report_text(const ConjectureReport& r);

} // namespace graceful

#endif
