#ifndef EDIST_TREE_HPP
#define EDIST_TREE_HPP

#include <cstdint>
#include <stdexcept>

#include "edist/text.hpp"

namespace edist {

// Tunables of the b-ary block decomposition. Positions are 0-based
// throughout the library; target positions for a string of length n live in
// [-n, 2n) and the root is evaluated at position 0.
struct TreeParams {
    std::int64_t n = 0;   // padded length, n == b^h exactly
    int b = 2;            // arity
    int h = 0;            // height, log_b n
    double beta = 2.0;    // distance threshold parameter (threshold n/beta)
    double eps = 0.0;     // per-level approximation; 0 means 1/log2(n)
    double c_p = 1.0;     // multiplier standing in for the hidden log^3 factor
    double zeta = 1.0;    // concentration constant
    std::uint64_t seed = 0;
    bool root_precision_x4 = false;  // give the root precision 4*beta

    std::int64_t level_len(int level) const {
        std::int64_t l = n;
        for (int i = 0; i < level; ++i) l /= b;
        return l;
    }
    std::int64_t blocks_at(int level) const { return n / level_len(level); }
    double log2n() const;
    double level_eps() const;  // eps, defaulted to 1/log2(n)

    void validate() const;
};

TreeParams make_tree_params(std::int64_t n, int b, double beta,
                            std::uint64_t seed, double c_p = 1.0,
                            double zeta = 1.0);

// Height such that b^h >= len, together with the exact padded length.
int padded_height(std::int64_t len, int b);

struct PaddedText {
    Text text;
    std::int64_t n = 0;
    int h = 0;
};

// Extends the text to the next power of b by appending a fresh sentinel
// code (== alphabet_size; the alphabet grows by one). Appending the same
// sentinel to both strings of a pair leaves all distances here unchanged.
PaddedText pad_to_power(const Text& x, int b);

struct PaddedPair {
    Text x;
    Text y;
    std::int64_t n = 0;
    int h = 0;
};

// Pads both strings of a pair to a common power of b over a unified
// alphabet, with the same sentinel code on both sides.
PaddedPair pad_pair(const Text& x, const Text& y, int b);

}  // namespace edist

#endif
