#include "graceful/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace graceful {

namespace {

std::string pair_text(int a, int b) {
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

Edge make_edge(int a, int b) {
    if (a == b)
        throw input_error("self-loop " + pair_text(a, b));
    if (a > b)
        std::swap(a, b);
    if (a < 1)
        throw input_error("endpoint out of range in edge " + pair_text(a, b));
    return Edge{a, b};
}

LabeledGraph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    LabeledGraph g;
    g.n = n;
    g.edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        Edge e = make_edge(a, b);
        if (e.v > n)
            throw input_error("endpoint out of range: edge " + pair_text(e.u, e.v) + " on " +
                              std::to_string(n) + " vertices");
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end());
    auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
    if (dup != g.edges.end())
        throw input_error("duplicate edge " + pair_text(dup->u, dup->v));
    return g;
}

bool graph_less(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.n != b.n)
        return a.n < b.n;
    return a.edges < b.edges;
}

AdjacencyMatrix::AdjacencyMatrix(int n) : n_(n) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    if (n > max_vertices)
        throw input_error("vertex count " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(max_vertices));
    rows_.assign(static_cast<std::size_t>(n) + 1, 0);
}

bool AdjacencyMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw input_error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for n=" + std::to_string(n_));
    return (rows_[static_cast<std::size_t>(i)] >> j) & 1ULL;
}

void AdjacencyMatrix::set(int i, int j, bool value) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw input_error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for n=" + std::to_string(n_));
    if (i == j)
        throw input_error("main diagonal entries are fixed at zero");
    if (value) {
        rows_[static_cast<std::size_t>(i)] |= 1ULL << j;
        rows_[static_cast<std::size_t>(j)] |= 1ULL << i;
    } else {
        rows_[static_cast<std::size_t>(i)] &= ~(1ULL << j);
        rows_[static_cast<std::size_t>(j)] &= ~(1ULL << i);
    }
}

std::uint64_t AdjacencyMatrix::upper_row_bits(int i) const {
    if (i < 1 || i > n_)
        throw input_error("row " + std::to_string(i) + " out of range for n=" + std::to_string(n_));
    // clears bits 0..i, leaving columns i+1..n
    return rows_[static_cast<std::size_t>(i)] & ~((2ULL << i) - 1ULL);
}

int AdjacencyMatrix::edge_count() const {
    int count = 0;
    for (int i = 1; i <= n_; ++i)
        count += std::popcount(upper_row_bits(i));
    return count;
}

std::size_t AdjacencyMatrix::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (word >> (8 * byte)) & 0xffULL;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (int i = 1; i <= n_; ++i)
        mix(rows_[static_cast<std::size_t>(i)]);
    return static_cast<std::size_t>(h);
}

int compare(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (int i = 1; i < a.size(); ++i) {
        std::uint64_t ra = a.upper_row_bits(i);
        std::uint64_t rb = b.upper_row_bits(i);
        std::uint64_t diff = ra ^ rb;
        if (diff) {
            // first differing position is the lowest differing column
            std::uint64_t low = diff & (~diff + 1ULL);
            return (ra & low) ? 1 : -1;
        }
    }
    return 0;
}

bool canonical_less(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return compare(a, b) < 0;
}

std::vector<std::pair<int, int>> diagonal_ones(const AdjacencyMatrix& m, int offset) {
    const int n = m.size();
    if (offset < 1 || offset > n - 1)
        throw input_error("diagonal offset " + std::to_string(offset) + " out of range 1.." +
                          std::to_string(n - 1));
    std::vector<std::pair<int, int>> ones;
    for (int i = 1; i <= n - offset; ++i)
        if ((m.upper_row_bits(i) >> (i + offset)) & 1ULL)
            ones.emplace_back(i, i + offset);
    return ones;
}

bool is_graceful_matrix(const AdjacencyMatrix& m) {
    const int n = m.size();
    for (int c = 1; c <= n - 1; ++c) {
        int count = 0;
        for (int i = 1; i <= n - c; ++i) {
            count += static_cast<int>((m.upper_row_bits(i) >> (i + c)) & 1ULL);
            if (count > 1)
                return false;
        }
        if (count != 1)
            return false;
    }
    return true;
}

GracefulMatrix GracefulMatrix::certify(AdjacencyMatrix m) {
    if (!is_graceful_matrix(m))
        throw input_error("matrix is not gracefully labeled: some diagonal does not carry exactly one 1");
    return GracefulMatrix(std::move(m));
}

std::optional<GracefulMatrix> GracefulMatrix::try_certify(AdjacencyMatrix m) {
    if (!is_graceful_matrix(m))
        return std::nullopt;
    return GracefulMatrix(std::move(m));
}

bool graceful_less(const GracefulMatrix& a, const GracefulMatrix& b) {
    return canonical_less(a.matrix(), b.matrix());
}

AdjacencyMatrix make_matrix(int n, const std::vector<std::pair<int, int>>& pairs) {
    return to_matrix(make_graph(n, pairs));
}

WeightMultiset weights(const LabeledGraph& g) {
    WeightMultiset w;
    w.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        w.push_back(e.v - e.u);
    std::sort(w.begin(), w.end());
    return w;
}

bool is_graceful_graph(const LabeledGraph& g) {
    const int m = static_cast<int>(g.edges.size());
    std::uint64_t seen = 0;
    for (const Edge& e : g.edges) {
        int w = e.v - e.u;
        if (w > m)
            return false;
        std::uint64_t bit = 1ULL << w;
        if (seen & bit)
            return false;
        seen |= bit;
    }
    // m distinct weights inside 1..m is exactly the multiset {1..m}
    return true;
}

LabeledGraph to_graph(const AdjacencyMatrix& m) {
    LabeledGraph g;
    g.n = m.size();
    g.edges.reserve(static_cast<std::size_t>(m.edge_count()));
    for (int i = 1; i <= m.size(); ++i) {
        std::uint64_t bits = m.upper_row_bits(i);
        while (bits) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            g.edges.push_back(Edge{i, j});
        }
    }
    return g;  // row-major upper-triangle scan emits edges already sorted
}

AdjacencyMatrix to_matrix(const LabeledGraph& g) {
    AdjacencyMatrix m(g.n);
    for (const Edge& e : g.edges)
        m.set(e.u, e.v, true);
    return m;
}

} // namespace graceful
