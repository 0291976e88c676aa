#ifndef GRACEFUL_PROPAGATION_HPP
#define GRACEFUL_PROPAGATION_HPP

#include <vector>

#include "graceful/matrix.hpp"

namespace graceful {

// Selects the superdiagonal slot (i, i+1) that receives the single 1 when
// one vertex is appended.
struct SingleChoice {
    int i = 1;
};

// One row index per brand-new diagonal when appending several vertices:
// pick[d] is the row of the single 1 at (pick[d], n + pick[d] + d), i.e.
// on diagonal offset n + d. Admissible rows are 1..min(n, appended - d).
struct DiagonalSelection {
    std::vector<int> pick;
    int appended() const { return static_cast<int>(pick.size()); }
    bool operator==(const DiagonalSelection&) const = default;
};

// Single-vertex propagation: every old upper-triangle entry (r, s) moves to
// (r, s+1) and the fresh superdiagonal gets its single 1 at (i, i+1). On the
// graph side each edge {u, v} with u < v becomes {u, v+1} plus the new edge
// {i, i+1}.
GracefulMatrix propagate_single(const GracefulMatrix& a, SingleChoice choice);

// All n children, for i = 1..n in order.
std::vector<GracefulMatrix> propagate_single_all(const GracefulMatrix& a);

// All gracefully labeled matrices of the given dimension, grown level by
// level from the unique 2x2 seed, in canonical order. Cardinality (n-1)!.
// n = 1 yields the single empty matrix. Duplicate outputs would indicate
// a broken index map and raise std::logic_error.
std::vector<GracefulMatrix> enumerate_graceful(int n, int jobs = 1);

// Every admissible DiagonalSelection for appending `appended` vertices to a
// parent of dimension n, in lexicographic pick order. Total count is the
// product of min(n, appended - d) over d.
std::vector<DiagonalSelection> selection_space(int n, int appended);

// Multi-vertex propagation: the parent occupies the leading n x n block
// unchanged, the trailing block is zero, and each new diagonal offset n+d
// carries its single 1 at (pick[d], n + pick[d] + d). New edge weights are
// exactly n, n+1, ..., n+appended-1.
GracefulMatrix propagate_multi(const GracefulMatrix& a, const DiagonalSelection& sel);

// One output per selection_space element, in selection order.
std::vector<GracefulMatrix> multi_propagate_all(const GracefulMatrix& a, int appended);

} // namespace graceful

#endif
