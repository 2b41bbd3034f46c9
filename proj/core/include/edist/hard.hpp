#ifndef EDIST_HARD_HPP
#define EDIST_HARD_HPP

#include <cstdint>
#include <vector>

#include "edist/rng.hpp"
#include "edist/text.hpp"

namespace edist {

// Maps each alphabet code to an image string; all images share one length.
struct SubstitutionMap {
    std::vector<Text> images;

    std::int64_t image_len() const;
    void validate() const;
};

// Left rotation by r positions (r taken mod |x|).
Text cyclic_shift(const Text& x, std::int64_t r);

// Random rotation: r uniform in [1, s].
Text sample_shift_dist(const Text& x, std::int64_t s, Rng& rng);

// Concatenation of the images of all symbols of x.
Text substitution_product(const Text& x, const SubstitutionMap& map);

// Maximum normalized LCS between distinct images; controls how much the
// substitution product can distort indel distance.
double image_overlap(const SubstitutionMap& map);

// Parameters of the two-family generator: sigma base strings of length
// block_len, recursively substituted `levels` times with random rotations
// of magnitude shift_mag at every level, then mapped to binary strings of
// length bin_len per symbol (bin_len 0 skips the binary step).
struct HardInstanceParams {
    Symbol sigma = 8;
    std::int64_t block_len = 64;   // B
    std::int64_t shift_mag = 4;    // s
    int levels = 2;                // recursion depth
    std::int64_t bin_len = 8;      // T
    std::uint64_t seed = 0;

    void validate() const;
    std::int64_t final_len() const;
};

enum class HardPairKind { kSame, kCross };

struct HardPair {
    Text first;
    Text second;
    std::vector<Text> base_strings;  // for replayable experiments
};

// Two draws from the recursive shift-of-base-strings construction; kSame
// draws both from the family of symbol 0, kCross draws one from symbol 0
// and one from symbol 1. Base strings and the binary code depend only on
// params.seed; the draw randomness comes from `rng`.
HardPair gen_hard_pair(const HardInstanceParams& params, HardPairKind which,
                       Rng& rng);

// Substitution by a binary code (all images over {0,1}, same length).
Text to_binary(const Text& x, const SubstitutionMap& code);

// Fresh uniformly random binary code with images of length t.
SubstitutionMap random_binary_code(Symbol sigma, std::int64_t t, Rng& rng);

// FNV-1a digest of the symbol sequence, for manifests.
std::uint64_t text_digest(const Text& t);

}  // namespace edist

#endif
