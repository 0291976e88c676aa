#include "graceful/propagation.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <string>

namespace graceful {

namespace {

std::vector<GracefulMatrix> expand_range(const std::vector<GracefulMatrix>& level,
                                         std::size_t begin, std::size_t end) {
    std::vector<GracefulMatrix> out;
    if (begin >= end)
        return out;
    out.reserve((end - begin) * static_cast<std::size_t>(level[begin].size()));
    for (std::size_t k = begin; k < end; ++k) {
        const int n = level[k].size();
        for (int i = 1; i <= n; ++i)
            out.push_back(propagate_single(level[k], SingleChoice{i}));
    }
    return out;
}

// Children of a whole level, sorted canonically. Parents are partitioned by
// index so the result is identical at any worker count.
std::vector<GracefulMatrix> expand_level(const std::vector<GracefulMatrix>& level, int jobs) {
    std::vector<GracefulMatrix> merged;
    const std::size_t total = level.size();
    if (jobs <= 1 || total < 64) {
        merged = expand_range(level, 0, total);
    } else {
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
        std::vector<std::future<std::vector<GracefulMatrix>>> parts;
        parts.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = total * w / workers;
            std::size_t end = total * (w + 1) / workers;
            parts.push_back(std::async(std::launch::async, expand_range, std::cref(level), begin, end));
        }
        for (auto& part : parts) {
            std::vector<GracefulMatrix> chunk = part.get();
            merged.insert(merged.end(), std::make_move_iterator(chunk.begin()),
                          std::make_move_iterator(chunk.end()));
        }
    }
    std::sort(merged.begin(), merged.end(), graceful_less);
    auto dup = std::adjacent_find(merged.begin(), merged.end());
    if (dup != merged.end())
        throw std::logic_error("single-vertex propagation produced duplicate matrices");
    return merged;
}

} // namespace

GracefulMatrix propagate_single(const GracefulMatrix& a, SingleChoice choice) {
    const int n = a.size();
    if (choice.i < 1 || choice.i > n)
        throw input_error("superdiagonal index " + std::to_string(choice.i) + " out of range 1.." +
                          std::to_string(n));
    AdjacencyMatrix child(n + 1);
    for (int r = 1; r <= n; ++r) {
        std::uint64_t bits = a.matrix().upper_row_bits(r);
        while (bits) {
            int s = std::countr_zero(bits);
            bits &= bits - 1;
            child.set(r, s + 1, true);
        }
    }
    child.set(choice.i, choice.i + 1, true);
    return GracefulMatrix::certify(std::move(child));
}

std::vector<GracefulMatrix> propagate_single_all(const GracefulMatrix& a) {
    std::vector<GracefulMatrix> out;
    out.reserve(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i)
        out.push_back(propagate_single(a, SingleChoice{i}));
    return out;
}

std::vector<GracefulMatrix> enumerate_graceful(int n, int jobs) {
    if (n < 1)
        throw input_error("vertex count must be at least 1, got " + std::to_string(n));
    if (n == 1)
        return {GracefulMatrix::certify(AdjacencyMatrix(1))};
    AdjacencyMatrix seed(2);
    seed.set(1, 2, true);
    std::vector<GracefulMatrix> level{GracefulMatrix::certify(std::move(seed))};
    for (int dim = 2; dim < n; ++dim)
        level = expand_level(level, jobs);
    return level;
}

std::vector<DiagonalSelection> selection_space(int n, int appended) {
    if (n < 2)
        throw input_error("parent dimension must be at least 2, got " + std::to_string(n));
    if (appended < 1)
        throw input_error("appended vertex count must be at least 1, got " + std::to_string(appended));
    std::vector<DiagonalSelection> out;
    std::vector<int> pick(static_cast<std::size_t>(appended), 1);
    while (true) {
        out.push_back(DiagonalSelection{pick});
        int d = appended - 1;
        for (; d >= 0; --d) {
            const int bound = std::min(n, appended - d);
            if (pick[static_cast<std::size_t>(d)] < bound) {
                ++pick[static_cast<std::size_t>(d)];
                std::fill(pick.begin() + d + 1, pick.end(), 1);
                break;
            }
        }
        if (d < 0)
            break;
    }
    return out;
}

GracefulMatrix propagate_multi(const GracefulMatrix& a, const DiagonalSelection& sel) {
    const int n = a.size();
    const int appended = sel.appended();
    if (appended < 1)
        throw input_error("selection must append at least one vertex");
    for (int d = 0; d < appended; ++d) {
        const int bound = std::min(n, appended - d);
        const int row = sel.pick[static_cast<std::size_t>(d)];
        if (row < 1 || row > bound)
            throw input_error("selection row " + std::to_string(row) + " for new diagonal offset " +
                              std::to_string(n + d) + " out of range 1.." + std::to_string(bound));
    }
    AdjacencyMatrix out(n + appended);
    for (int r = 1; r <= n; ++r) {
        std::uint64_t bits = a.matrix().upper_row_bits(r);
        while (bits) {
            int s = std::countr_zero(bits);
            bits &= bits - 1;
            out.set(r, s, true);
        }
    }
    for (int d = 0; d < appended; ++d) {
        const int row = sel.pick[static_cast<std::size_t>(d)];
        out.set(row, n + row + d, true);  // weight n + d
    }
    return GracefulMatrix::certify(std::move(out));
}

std::vector<GracefulMatrix> multi_propagate_all(const GracefulMatrix& a, int appended) {
    std::vector<DiagonalSelection> space = selection_space(a.size(), appended);
    std::vector<GracefulMatrix> out;
    out.reserve(space.size());
    for (const DiagonalSelection& sel : space)
        out.push_back(propagate_multi(a, sel));
    return out;
}

} // namespace graceful
