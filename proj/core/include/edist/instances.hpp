#ifndef EDIST_INSTANCES_HPP
#define EDIST_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "edist/rng.hpp"
#include "edist/text.hpp"

namespace edist {

Text random_text(std::int64_t n, Symbol sigma, Rng& rng);

// `count` substitutions at distinct positions, each to a different symbol.
Text with_substitutions(const Text& x, std::int64_t count, Rng& rng);

// `count` random edits (insert/delete/substitute, equal odds); length may
// drift.
Text with_random_edits(const Text& x, std::int64_t count, Rng& rng);

enum class InstanceFamily { kRandom, kRandomEdits, kRotations, kHardPairs };

InstanceFamily parse_family(const std::string& name);
std::string family_name(InstanceFamily f);

// A reproducible (x, y) pair of the given family: independent random
// strings, a random string with ~n/16 random edits, a random rotation by
// an offset in [1, n/8], or a same-family hard pair trimmed to length n.
std::pair<Text, Text> make_instance(InstanceFamily family, std::int64_t n,
                                    Symbol sigma, std::uint64_t seed);

}  // namespace edist

#endif
