#ifndef EDIST_TREE_DISTANCE_HPP
#define EDIST_TREE_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "edist/tree.hpp"

namespace edist {

// The hierarchical block distance ("tree distance"): the string x is split
// recursively into b equal blocks; a block evaluated at a target position u
// in y scores the sum over its sub-blocks of the best achievable score over
// integer displacements r, paying |r| per displacement; a single character
// evaluated at u scores 0 iff u is in range and the characters match, else
// 1. The distance between x and y is the root block evaluated at position 0.
//
// It sandwiches edit distance: ed(x,y)/2 <= tree distance <= 3*h*b*ed(x,y).
//
// Computed exactly by a bottom-up DP over target positions in [-n, 2n);
// quadratic-ish work overall, intended for n up to a few thousand.
std::int64_t exact_tree_distance(const Text& x, const Text& y,
                                 const TreeParams& params);

// Same DP with every displacement clamped to |r| <= max_shift. max_shift 0
// degenerates to the Hamming distance; max_shift >= n equals the
// unrestricted distance.
std::int64_t exact_tree_distance_shift_limited(const Text& x, const Text& y,
                                               const TreeParams& params,
                                               std::int64_t max_shift);

// An explicit choice of target position for every block of the tree,
// 0-based; assignment[i][k] is the position for block k at level i. The
// root assignment is pinned to 0.
struct BlockAssignment {
    std::vector<std::vector<std::int64_t>> positions;

    static BlockAssignment identity(const TreeParams& params);
    void validate(const TreeParams& params) const;
};

// Displacement cost of the assignment plus the character mismatch term.
// Minimizing this over all assignments yields exact_tree_distance; any
// single assignment is an upper bound.
std::int64_t assignment_distance(const Text& x, const Text& y,
                                 const BlockAssignment& assignment,
                                 const TreeParams& params);

// Displacement cost alone (no mismatch term).
std::int64_t assignment_cost(const BlockAssignment& assignment,
                             const TreeParams& params);

}  // namespace edist

#endif
