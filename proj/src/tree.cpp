#include "graceful/tree.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace graceful {

namespace {

std::vector<std::vector<int>> adjacency(const LabeledGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int from) {
    std::vector<std::string> parts;
    parts.reserve(adj[static_cast<std::size_t>(v)].size());
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != from)
            parts.push_back(rooted_code(adj, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out;
    out.reserve(2 + parts.size() * 2);
    out.push_back('(');
    for (const std::string& p : parts)
        out += p;
    out.push_back(')');
    return out;
}

// Strip leaf layers until one or two vertices remain.
std::vector<int> tree_centers(const LabeledGraph& g, const std::vector<std::vector<int>>& adj) {
    const int n = g.n;
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : g.edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> layer;
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] <= 1)
            layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        for (int v : layer)
            removed[static_cast<std::size_t>(v)] = 1;
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!removed[static_cast<std::size_t>(w)] && --degree[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    return layer;
}

using LevelMap = std::map<std::string, LabeledGraph>;  // code -> representative

LevelMap seed_level() {
    LabeledGraph k1 = make_graph(1, {});
    LevelMap level;
    level.emplace(tree_code(k1).code, std::move(k1));
    return level;
}

LevelMap next_level(const LevelMap& level) {
    LevelMap out;
    for (const auto& [code, rep] : level) {
        LabeledTree parent = LabeledTree::validate(rep);
        for (const LabeledTree& child : propagate_tree_all(parent)) {
            TreeCode child_code = tree_code(child);
            auto [it, inserted] = out.try_emplace(std::move(child_code.code), child.graph());
            // keep the smallest representative so dedup order never matters
            if (!inserted && graph_less(child.graph(), it->second))
                it->second = child.graph();
        }
    }
    return out;
}

LevelMap tree_level(int n) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    LevelMap level = seed_level();
    for (int dim = 1; dim < n; ++dim)
        level = next_level(level);
    return level;
}

} // namespace

bool is_connected(const LabeledGraph& g) {
    auto adj = adjacency(g);
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == g.n;
}

bool has_cycle(const LabeledGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : g.edges) {
        int ru = find_root(parent, e.u);
        int rv = find_root(parent, e.v);
        if (ru == rv)
            return true;
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return false;
}

std::vector<int> isolated_vertices(const LabeledGraph& g) {
    std::vector<char> touched(static_cast<std::size_t>(g.n) + 1, 0);
    for (const Edge& e : g.edges) {
        touched[static_cast<std::size_t>(e.u)] = 1;
        touched[static_cast<std::size_t>(e.v)] = 1;
    }
    std::vector<int> out;
    for (int v = 1; v <= g.n; ++v)
        if (!touched[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

bool is_tree(const LabeledGraph& g) {
    return is_connected(g) && !has_cycle(g);
}

LabeledTree LabeledTree::validate(LabeledGraph g) {
    if (static_cast<int>(g.edges.size()) != g.n - 1)
        throw input_error("tree on " + std::to_string(g.n) + " vertices must have exactly " +
                          std::to_string(g.n - 1) + " edges, got " + std::to_string(g.edges.size()));
    if (!is_connected(g))
        throw input_error("graph is not connected");
    if (has_cycle(g))
        throw input_error("graph contains a cycle");
    return LabeledTree(std::move(g));
}

LabeledTree propagate_tree(const LabeledTree& t, AttachChoice choice) {
    const int n = t.size();
    if (choice.i < 1 || choice.i > n)
        throw input_error("attachment label " + std::to_string(choice.i) + " out of range 1.." +
                          std::to_string(n));
    const int fresh = n + 2 - choice.i;  // final label of the added vertex
    auto shifted = [fresh](int s) { return s >= fresh ? s + 1 : s; };
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (const Edge& e : t.graph().edges)
        pairs.emplace_back(shifted(e.u), shifted(e.v));
    pairs.emplace_back(shifted(choice.i), fresh);
    return LabeledTree::validate(make_graph(n + 1, pairs));
}

std::vector<LabeledTree> propagate_tree_all(const LabeledTree& t) {
    std::vector<LabeledTree> out;
    out.reserve(static_cast<std::size_t>(t.size()));
    for (int i = 1; i <= t.size(); ++i)
        out.push_back(propagate_tree(t, AttachChoice{i}));
    return out;
}

TreeCode tree_code(const LabeledGraph& g) {
    assert(is_tree(g));
    auto adj = adjacency(g);
    std::vector<int> centers = tree_centers(g, adj);
    std::string best = rooted_code(adj, centers[0], 0);
    if (centers.size() == 2) {
        std::string other = rooted_code(adj, centers[1], 0);
        if (other < best)
            best = std::move(other);
    }
    return TreeCode{std::move(best)};
}

TreeCode tree_code(const LabeledTree& t) {
    return tree_code(t.graph());
}

LabeledGraph parse_tree_code(const TreeCode& code) {
    int next_id = 0;
    std::vector<int> stack;
    std::vector<std::pair<int, int>> pairs;
    for (char ch : code.code) {
        if (ch == '(') {
            if (stack.empty() && next_id > 0)
                throw input_error("tree code encodes more than one root");
            int id = ++next_id;
            if (!stack.empty())
                pairs.emplace_back(stack.back(), id);
            stack.push_back(id);
        } else if (ch == ')') {
            if (stack.empty())
                throw input_error("unbalanced tree code");
            stack.pop_back();
        } else {
            throw input_error("invalid character in tree code");
        }
    }
    if (!stack.empty() || next_id == 0)
        throw input_error("unbalanced tree code");
    return make_graph(next_id, pairs);
}

std::vector<TreeCode> enumerate_trees(int n) {
    LevelMap level = tree_level(n);
    std::vector<TreeCode> codes;
    codes.reserve(level.size());
    for (const auto& [code, rep] : level)
        codes.push_back(TreeCode{code});
    return codes;  // map keys are already sorted
}

std::vector<LabeledTree> enumerate_tree_representatives(int n) {
    LevelMap level = tree_level(n);
    std::vector<LabeledTree> reps;
    reps.reserve(level.size());
    for (const auto& [code, rep] : level)
        reps.push_back(LabeledTree::validate(rep));
    return reps;
}

std::vector<GracefulMatrix> filter_graceful_trees(int n, int jobs) {
    std::vector<GracefulMatrix> all = enumerate_graceful(n, jobs);
    std::vector<GracefulMatrix> out;
    for (GracefulMatrix& m : all)
        if (is_tree(to_graph(m.matrix())))
            out.push_back(std::move(m));
    return out;
}

} // namespace graceful
