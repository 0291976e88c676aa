#ifndef GRACEFUL_TREE_HPP
#define GRACEFUL_TREE_HPP

#include <string>
#include <vector>

#include "graceful/matrix.hpp"
#include "graceful/propagation.hpp"

namespace graceful {

bool is_connected(const LabeledGraph& g);   // single vertex counts as connected
bool has_cycle(const LabeledGraph& g);      // true iff some edge closes a walk
std::vector<int> isolated_vertices(const LabeledGraph& g);  // degree-0 labels, ascending

// Connected and acyclic. Deliberately not the "no isolated vertex" shortcut:
// a disjoint graph can have no isolated vertex and still fail.
bool is_tree(const LabeledGraph& g);

// A LabeledGraph certified to be a tree (n-1 edges, connected, acyclic; all
// three checked).
class LabeledTree {
public:
    static LabeledTree validate(LabeledGraph g);  // throws input_error otherwise

    const LabeledGraph& graph() const { return g_; }
    int size() const { return g_.n; }
    bool operator==(const LabeledTree&) const = default;

private:
    explicit LabeledTree(LabeledGraph g) : g_(std::move(g)) {}
    LabeledGraph g_;
};

// The vertex label the new leaf is attached to.
struct AttachChoice {
    int i = 1;
};

// Attach a new vertex to the vertex labeled i, then relabel: the new vertex
// becomes n+2-i and every old label s >= n+2-i shifts to s+1. Deleting the
// vertex labeled n+2-i from the output and decrementing the labels above it
// recovers the input exactly.
LabeledTree propagate_tree(const LabeledTree& t, AttachChoice choice);

// All n children, for i = 1..n in order.
std::vector<LabeledTree> propagate_tree_all(const LabeledTree& t);

// Canonical encoding of the unlabeled tree: nested parentheses rooted at the
// tree center (the lexicographically smaller rooted code when there are two
// centers). Equal codes iff isomorphic.
struct TreeCode {
    std::string code;
    int vertex_count() const { return static_cast<int>(code.size()) / 2; }
    auto operator<=>(const TreeCode&) const = default;
};

TreeCode tree_code(const LabeledTree& t);
TreeCode tree_code(const LabeledGraph& g);  // g must be a tree

// Rebuilds a tree from a code: vertices numbered 1..n in preorder, root 1.
LabeledGraph parse_tree_code(const TreeCode& code);

// All unlabeled trees on n vertices, as sorted canonical codes, grown from
// the single-vertex seed with per-level deduplication.
std::vector<TreeCode> enumerate_trees(int n);

// One deterministic labeled representative per code, aligned with
// enumerate_trees(n) order.
std::vector<LabeledTree> enumerate_tree_representatives(int n);

// The gracefully labeled matrices of dimension n whose graphs are trees.
std::vector<GracefulMatrix> filter_graceful_trees(int n, int jobs = 1);

} // namespace graceful

#endif
