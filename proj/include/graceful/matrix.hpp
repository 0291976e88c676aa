#ifndef GRACEFUL_MATRIX_HPP
#define GRACEFUL_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graceful/errors.hpp"

namespace graceful {

// Undirected edge with normalized endpoints (u < v), labels 1-indexed.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Normalizes endpoint order; rejects self-loops and labels below 1.
// The upper bound against a vertex count is checked by the graph factories.
Edge make_edge(int a, int b);

// Vertex-labeled simple graph: labels 1..n, sorted unique edge list.
struct LabeledGraph {
    int n = 0;
    std::vector<Edge> edges;
    bool operator==(const LabeledGraph&) const = default;
};

// Validates endpoints against n, normalizes, sorts, rejects duplicates.
LabeledGraph make_graph(int n, const std::vector<std::pair<int, int>>& pairs);

// Total order on graphs: vertex count, then lexicographic edge list.
bool graph_less(const LabeledGraph& a, const LabeledGraph& b);

// Symmetric 0/1 matrix with zero main diagonal, rows bit-packed.
// Entries are 1-indexed; bit j of row word i holds entry (i, j).
class AdjacencyMatrix {
public:
    static constexpr int max_vertices = 63;

    explicit AdjacencyMatrix(int n);

    int size() const { return n_; }
    bool at(int i, int j) const;            // bounds-checked
    void set(int i, int j, bool value);     // keeps (j, i) mirrored; rejects i == j
    std::uint64_t upper_row_bits(int i) const;  // columns i+1..n of row i
    int edge_count() const;
    std::size_t hash() const;

    bool operator==(const AdjacencyMatrix&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

// Canonical total order: vertex count first, then lexicographic over the
// upper-triangle bits read row-major ((1,2),(1,3),...,(n-1,n)); 0 sorts
// before 1. Returns <0, 0, >0.
int compare(const AdjacencyMatrix& a, const AdjacencyMatrix& b);
bool canonical_less(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// The positions (i, i+offset) above the main diagonal of an n-matrix.
struct Diagonal {
    int offset = 1;
    int length(int n) const { return n - offset; }
};

// Upper-triangle positions on the given diagonal holding 1, ascending rows.
std::vector<std::pair<int, int>> diagonal_ones(const AdjacencyMatrix& m, int offset);

// True iff every diagonal offset 1..n-1 carries exactly one 1.
bool is_graceful_matrix(const AdjacencyMatrix& m);

// Certificate wrapper around the diagonal condition. A certified matrix
// always has exactly n-1 edges (one per nonzero diagonal).
class GracefulMatrix {
public:
    static GracefulMatrix certify(AdjacencyMatrix m);  // throws input_error if the condition fails
    static std::optional<GracefulMatrix> try_certify(AdjacencyMatrix m);

    const AdjacencyMatrix& matrix() const { return inner_; }
    int size() const { return inner_.size(); }
    bool operator==(const GracefulMatrix&) const = default;

private:
    explicit GracefulMatrix(AdjacencyMatrix m) : inner_(std::move(m)) {}
    AdjacencyMatrix inner_;
};

bool graceful_less(const GracefulMatrix& a, const GracefulMatrix& b);

// Builds the symmetric matrix with 1 exactly at the given pairs.
AdjacencyMatrix make_matrix(int n, const std::vector<std::pair<int, int>>& pairs);

// Edge weights |u - v|, ascending.
using WeightMultiset = std::vector<int>;

WeightMultiset weights(const LabeledGraph& g);

// True iff the weight multiset is exactly {1, ..., m} with m = |edges|.
bool is_graceful_graph(const LabeledGraph& g);

LabeledGraph to_graph(const AdjacencyMatrix& m);
AdjacencyMatrix to_matrix(const LabeledGraph& g);

} // namespace graceful

#endif
