#ifndef GRACEFUL_ORACLE_HPP
#define GRACEFUL_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "graceful/matrix.hpp"
#include "graceful/tree.hpp"

namespace graceful {

// Resource guards for the search-style operations. Bounds are configuration,
// not constants; the CLI can override them from the environment.
struct SearchLimits {
    int max_matrix_n = 10;
    int max_tree_n = 12;
    int max_conjecture_n = 11;
};

// Direct construction of every gracefully labeled matrix of dimension n by
// independently choosing one of the n-c positions on each diagonal offset c.
// Canonical order; cardinality (n-1)!. Independent of the propagation path.
std::vector<GracefulMatrix> brute_force_graceful_matrices(int n);

// Streams every labeled tree on n vertices via the sequence-decoding
// bijection (n^(n-2) trees for n >= 2; n <= 2 special-cased). The graph
// reference passed to the callback is reused between calls.
void for_each_prufer_tree(int n, const std::function<void(const LabeledGraph&)>& fn);

std::vector<LabeledGraph> prufer_trees(int n);

// Deduplicated sorted canonical codes of all labeled trees on n vertices.
std::vector<TreeCode> prufer_tree_codes(int n);

// A bijection from tree vertices onto labels 1..n; assign[v] is the label of
// vertex v, slot 0 unused.
struct Labeling {
    std::vector<int> assign;
    bool operator==(const Labeling&) const = default;
};

// Relabels the graph's vertices through the bijection.
LabeledGraph apply_labeling(const LabeledGraph& g, const Labeling& labeling);

// Backtracking search for a labeling whose edge weights are exactly
// 1..n-1. Vertices are visited breadth-first from a maximum-degree root
// (descending degree within each layer) so every assignment after the first
// fixes one new weight; used-label and used-weight bitsets prune the rest.
// Returns the first labeling in this deterministic order, or nullopt.
std::optional<Labeling> find_graceful_labeling(const TreeCode& code, const SearchLimits& limits = {});

struct ConjectureRow {
    int n = 0;
    long long trees = 0;
    long long graceful = 0;
    long long elapsed_ms = 0;
};

struct ConjectureReport {
    int n_max = 0;
    std::vector<ConjectureRow> rows;       // one per n = 1..n_max
    std::vector<TreeCode> failures;        // codes with no labeling found
};

// Runs find_graceful_labeling over every unlabeled tree with up to n_max
// vertices. The searches are independent; jobs > 1 fans them out per code
// with an order-insensitive merge.
ConjectureReport check_conjecture(int n_max, const SearchLimits& limits = {}, int jobs = 1);

} // namespace graceful

#endif
