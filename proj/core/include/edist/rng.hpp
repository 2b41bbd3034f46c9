#ifndef EDIST_RNG_HPP
#define EDIST_RNG_HPP

#include <cstdint>
#include <cmath>

namespace edist {

// Small, fast, reproducible generator (xoshiro256**). We do not use
// std::mt19937 because we hand out many independent streams derived from
// (seed, label, coordinates) and want cheap seeding.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed into the full state
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1)
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        // Lemire-style rejection-free enough for our purposes; exact
        // rejection keeps all streams unbiased.
        std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t r = (*this)();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Mixes a master seed with a label and up to three coordinates into a child
// seed. Streams for distinct (label, a, b, c) are independent regardless of
// the order in which they are created, which keeps tree construction and
// estimation deterministic under any traversal order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t label,
                                 std::uint64_t a = 0, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        std::uint64_t z = h * 0xff51afd7ed558ccdULL;
        z ^= z >> 33;
        return z;
    };
    std::uint64_t h = master;
    h = mix(h, label);
    h = mix(h, a);
    h = mix(h, b);
    h = mix(h, c);
    return h;
}

// Stream labels used across the library.
namespace stream {
inline constexpr std::uint64_t kTreeInclude = 0x01;
inline constexpr std::uint64_t kTreePrecision = 0x02;
inline constexpr std::uint64_t kReconstruct = 0x03;
inline constexpr std::uint64_t kInstance = 0x04;
inline constexpr std::uint64_t kHardBase = 0x05;
inline constexpr std::uint64_t kHardDraw = 0x06;
inline constexpr std::uint64_t kHardCode = 0x07;
inline constexpr std::uint64_t kBench = 0x08;
}  // namespace stream

}  // namespace edist

#endif
