#include "graceful/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <string>
#include <unordered_set>
#include <utility>

namespace graceful {

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

long long power(long long base, int exp) {
    long long p = 1;
    for (int i = 0; i < exp; ++i)
        p *= base;
    return p;
}

} // namespace

std::vector<GracefulMatrix> brute_force_graceful_matrices(int n) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    if (n == 1)
        return {GracefulMatrix::certify(AdjacencyMatrix(1))};
    std::vector<GracefulMatrix> out;
    out.reserve(static_cast<std::size_t>(factorial(n - 1)));
    std::vector<int> pos(static_cast<std::size_t>(n), 1);  // pos[c] in 1..n-c, slot 0 unused
    while (true) {
        AdjacencyMatrix m(n);
        for (int c = 1; c <= n - 1; ++c)
            m.set(pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(c)] + c, true);
        out.push_back(GracefulMatrix::certify(std::move(m)));
        int c = n - 1;
        for (; c >= 1; --c) {
            if (pos[static_cast<std::size_t>(c)] < n - c) {
                ++pos[static_cast<std::size_t>(c)];
                std::fill(pos.begin() + c + 1, pos.end(), 1);
                break;
            }
        }
        if (c < 1)
            break;
    }
    std::sort(out.begin(), out.end(), graceful_less);
    return out;
}

void for_each_prufer_tree(int n, const std::function<void(const LabeledGraph&)>& fn) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    LabeledGraph scratch;
    scratch.n = n;
    if (n == 1) {
        fn(scratch);
        return;
    }
    if (n == 2) {
        scratch.edges = {Edge{1, 2}};
        fn(scratch);
        return;
    }
    const int len = n - 2;
    std::vector<int> seq(static_cast<std::size_t>(len), 1);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1);
    auto emit = [&] {
        std::fill(degree.begin(), degree.end(), 1);
        for (int s : seq)
            ++degree[static_cast<std::size_t>(s)];
        scratch.edges.clear();
        int ptr = 1;
        while (degree[static_cast<std::size_t>(ptr)] != 1)
            ++ptr;
        int leaf = ptr;
        for (int s : seq) {
            scratch.edges.push_back(leaf < s ? Edge{leaf, s} : Edge{s, leaf});
            if (--degree[static_cast<std::size_t>(s)] == 1 && s < ptr) {
                leaf = s;
            } else {
                ++ptr;
                while (degree[static_cast<std::size_t>(ptr)] != 1)
                    ++ptr;
                leaf = ptr;
            }
        }
        scratch.edges.push_back(Edge{leaf, n});
        std::sort(scratch.edges.begin(), scratch.edges.end());
        fn(scratch);
    };
    while (true) {
        emit();
        int k = len - 1;
        while (k >= 0 && seq[static_cast<std::size_t>(k)] == n) {
            seq[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0)
            break;
        ++seq[static_cast<std::size_t>(k)];
    }
}

std::vector<LabeledGraph> prufer_trees(int n) {
    std::vector<LabeledGraph> out;
    if (n >= 2)
        out.reserve(static_cast<std::size_t>(power(n, n - 2)));
    for_each_prufer_tree(n, [&out](const LabeledGraph& t) { out.push_back(t); });
    return out;
}

std::vector<TreeCode> prufer_tree_codes(int n) {
    std::unordered_set<std::string> seen;
    for_each_prufer_tree(n, [&seen](const LabeledGraph& t) { seen.insert(tree_code(t).code); });
    std::vector<TreeCode> codes;
    codes.reserve(seen.size());
    for (const std::string& c : seen)
        codes.push_back(TreeCode{c});
    std::sort(codes.begin(), codes.end());
    return codes;
}

LabeledGraph apply_labeling(const LabeledGraph& g, const Labeling& labeling) {
    if (static_cast<int>(labeling.assign.size()) != g.n + 1)
        throw input_error("labeling size does not match the graph");
    std::uint64_t used = 0;
    for (int v = 1; v <= g.n; ++v) {
        int label = labeling.assign[static_cast<std::size_t>(v)];
        if (label < 1 || label > g.n)
            throw input_error("label " + std::to_string(label) + " out of range 1.." + std::to_string(g.n));
        std::uint64_t bit = 1ULL << label;
        if (used & bit)
            throw input_error("label " + std::to_string(label) + " assigned twice");
        used |= bit;
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        pairs.emplace_back(labeling.assign[static_cast<std::size_t>(e.u)],
                           labeling.assign[static_cast<std::size_t>(e.v)]);
    return make_graph(g.n, pairs);
}

std::optional<Labeling> find_graceful_labeling(const TreeCode& code, const SearchLimits& limits) {
    LabeledGraph tree = parse_tree_code(code);
    const int n = tree.n;
    if (n > limits.max_tree_n)
        throw resource_limit_error("tree has " + std::to_string(n) +
                                   " vertices; the labeling search is limited to " +
                                   std::to_string(limits.max_tree_n));
    Labeling out;
    out.assign.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 1) {
        out.assign[1] = 1;
        return out;
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : tree.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    auto degree = [&adj](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };
    for (auto& nbrs : adj)
        std::sort(nbrs.begin(), nbrs.end(), [&degree](int a, int b) {
            if (degree(a) != degree(b))
                return degree(a) > degree(b);
            return a < b;
        });

    int root = 1;
    for (int v = 2; v <= n; ++v)
        if (degree(v) > degree(root))
            root = v;

    // breadth-first visit order; parent[v] is always visited before v
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    order.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = v;
                order.push_back(w);
            }
        }
    }

    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t used_labels = 0;
    std::uint64_t used_weights = 0;
    auto search = [&](auto&& self, int k) -> bool {
        if (k == n)
            return true;
        const int v = order[static_cast<std::size_t>(k)];
        const int anchor = label[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        for (int l = 1; l <= n; ++l) {
            const std::uint64_t lbit = 1ULL << l;
            if (used_labels & lbit)
                continue;
            std::uint64_t wbit = 0;
            if (k > 0) {
                const int w = l > anchor ? l - anchor : anchor - l;
                wbit = 1ULL << w;
                if (used_weights & wbit)
                    continue;
            }
            label[static_cast<std::size_t>(v)] = l;
            used_labels |= lbit;
            used_weights |= wbit;
            if (self(self, k + 1))
                return true;
            used_labels &= ~lbit;
            used_weights &= ~wbit;
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    for (int v = 1; v <= n; ++v)
        out.assign[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(v)];
    return out;
}

namespace {

struct ChunkResult {
    long long graceful = 0;
    std::vector<TreeCode> failures;
};

ChunkResult check_codes(const std::vector<TreeCode>& codes, std::size_t begin, std::size_t end,
                        const SearchLimits& limits) {
    ChunkResult r;
    for (std::size_t k = begin; k < end; ++k) {
        if (find_graceful_labeling(codes[k], limits))
            ++r.graceful;
        else
            r.failures.push_back(codes[k]);
    }
    return r;
}

} // namespace

ConjectureReport check_conjecture(int n_max, const SearchLimits& limits, int jobs) {
    if (n_max < 1)
        throw input_error("n_max must be at least 1, got " + std::to_string(n_max));
    if (n_max > limits.max_conjecture_n)
        throw resource_limit_error("conjecture check up to " + std::to_string(n_max) +
                                   " vertices exceeds the configured limit " +
                                   std::to_string(limits.max_conjecture_n));
    ConjectureReport report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<TreeCode> codes = enumerate_trees(n);
        ChunkResult merged;
        if (jobs <= 1 || codes.size() < 16) {
            merged = check_codes(codes, 0, codes.size(), limits);
        } else {
            const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), codes.size());
            std::vector<std::future<ChunkResult>> parts;
            parts.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) {
                std::size_t begin = codes.size() * w / workers;
                std::size_t end = codes.size() * (w + 1) / workers;
                parts.push_back(std::async(std::launch::async, check_codes, std::cref(codes), begin,
                                           end, std::cref(limits)));
            }
            for (auto& part : parts) {
                ChunkResult chunk = part.get();
                merged.graceful += chunk.graceful;
                merged.failures.insert(merged.failures.end(), chunk.failures.begin(),
                                       chunk.failures.end());
            }
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        report.rows.push_back(ConjectureRow{n, static_cast<long long>(codes.size()), merged.graceful,
                                            elapsed.count()});
        report.failures.insert(report.failures.end(), merged.failures.begin(), merged.failures.end());
    }
    return report;
}

} // namespace graceful
