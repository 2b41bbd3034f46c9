#ifndef EDIST_EXACT_HPP
#define EDIST_EXACT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "edist/text.hpp"

namespace edist {

// Exact reference oracles. All quadratic-time dynamic programs below use
// two-row rolling arrays, so memory stays O(min(|x|,|y|)); they are meant
// as ground truth up to n in the few-thousands range.

// Levenshtein distance: insertions, deletions, substitutions.
std::int64_t ed(const Text& x, const Text& y);

// Indel distance: insertions and deletions only.
// Always equals |x| + |y| - 2*lcs(x,y).
std::int64_t edd(const Text& x, const Text& y);

// Length of the longest common subsequence.
std::int64_t lcs(const Text& x, const Text& y);

// Hamming distance on the common prefix length; excess length counts as
// mismatches.
std::int64_t hamming(const Text& x, const Text& y);

// A set of matched index pairs, strictly increasing in both coordinates,
// with x[i] == y[j] for every pair. Corresponds to a common subsequence.
struct Alignment {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

    std::size_t size() const { return pairs.size(); }
    bool valid_for(const Text& x, const Text& y) const;
};

// Traceback of a maximum common subsequence. Ties broken deterministically:
// prefer match, then deletion from x, then insertion.
Alignment extract_alignment(const Text& x, const Text& y);

// Banded indel distance. Explores only DP cells with |i - j - skew| <= band
// and returns an upper bound on edd(x,y); the bound is exact iff the true
// distance fits in the band. edd_banded_certified doubles the band until the
// result certifies itself (result <= band), so it is exact, and fast when
// the distance is small relative to the lengths.
std::int64_t edd_banded(const Text& x, const Text& y, std::int64_t band);
std::int64_t edd_banded_certified(const Text& x, const Text& y,
                                  std::int64_t initial_band = 64);

}  // namespace edist

#endif
