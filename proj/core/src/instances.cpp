#include "edist/instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "edist/hard.hpp"

namespace edist {

Text random_text(std::int64_t n, Symbol sigma, Rng& rng) {
    if (n < 0 || sigma < 1)
        throw std::invalid_argument("random_text: bad parameters");
    std::vector<Symbol> syms(static_cast<std::size_t>(n));
    for (auto& s : syms) s = static_cast<Symbol>(rng.below(sigma));
    return Text(std::move(syms), sigma);
}

Text with_substitutions(const Text& x, std::int64_t count, Rng& rng) {
    if (x.alphabet_size < 2)
        throw std::invalid_argument("with_substitutions: alphabet too small");
    Text y = x;
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    count = std::min(count, n);
    // Floyd-style sample of distinct positions.
    std::vector<std::int64_t> chosen;
    for (std::int64_t i = n - count; i < n; ++i) {
        std::int64_t t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
        if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) t = i;
        chosen.push_back(t);
    }
    for (std::int64_t pos : chosen) {
        const Symbol old = y.symbols[static_cast<std::size_t>(pos)];
        Symbol s = static_cast<Symbol>(rng.below(y.alphabet_size - 1));
        if (s >= old) ++s;
        y.symbols[static_cast<std::size_t>(pos)] = s;
    }
    return y;
}

Text with_random_edits(const Text& x, std::int64_t count, Rng& rng) {
    Text y = x;
    for (std::int64_t e = 0; e < count; ++e) {
        const std::uint64_t kind = rng.below(3);
        const std::int64_t len = static_cast<std::int64_t>(y.size());
        if (kind == 0 && len > 0) {  // delete
            const std::size_t pos = rng.below(static_cast<std::uint64_t>(len));
            y.symbols.erase(y.symbols.begin() + static_cast<std::ptrdiff_t>(pos));
        } else if (kind == 1) {  // insert
            const std::size_t pos = rng.below(static_cast<std::uint64_t>(len + 1));
            y.symbols.insert(y.symbols.begin() + static_cast<std::ptrdiff_t>(pos),
                             static_cast<Symbol>(rng.below(y.alphabet_size)));
        } else if (len > 0) {  // substitute
            const std::size_t pos = rng.below(static_cast<std::uint64_t>(len));
            const Symbol old = y.symbols[pos];
            Symbol s = static_cast<Symbol>(rng.below(y.alphabet_size - 1));
            if (s >= old) ++s;
            y.symbols[pos] = s;
        }
    }
    return y;
}

InstanceFamily parse_family(const std::string& name) {
    if (name == "random") return InstanceFamily::kRandom;
    if (name == "random-edits") return InstanceFamily::kRandomEdits;
    if (name == "rotations") return InstanceFamily::kRotations;
    if (name == "hard-pairs") return InstanceFamily::kHardPairs;
    throw std::invalid_argument("unknown instance family: " + name);
}

std::string family_name(InstanceFamily f) {
    switch (f) {
        case InstanceFamily::kRandom: return "random";
        case InstanceFamily::kRandomEdits: return "random-edits";
        case InstanceFamily::kRotations: return "rotations";
        case InstanceFamily::kHardPairs: return "hard-pairs";
    }
    return "?";
}

std::pair<Text, Text> make_instance(InstanceFamily family, std::int64_t n,
                                    Symbol sigma, std::uint64_t seed) {
    Rng rng(derive_seed(seed, stream::kInstance));
    switch (family) {
        case InstanceFamily::kRandom:
            return {random_text(n, sigma, rng), random_text(n, sigma, rng)};
        case InstanceFamily::kRandomEdits: {
            Text x = random_text(n, sigma, rng);
            Text y = with_random_edits(x, std::max<std::int64_t>(1, n / 16), rng);
            return {std::move(x), std::move(y)};
        }
        case InstanceFamily::kRotations: {
            Text x = random_text(n, sigma, rng);
            const std::int64_t s = std::max<std::int64_t>(1, n / 8);
            Text y = sample_shift_dist(x, s, rng);
            return {std::move(x), std::move(y)};
        }
        case InstanceFamily::kHardPairs: {
            HardInstanceParams hp;
            hp.seed = seed;
            // Fit the recursion depth to the requested length.
            hp.levels = 1;
            while (hp.final_len() * hp.block_len <= n && hp.levels < 6)
                ++hp.levels;
            Rng draw(derive_seed(seed, stream::kHardDraw));
            HardPair pair = gen_hard_pair(hp, HardPairKind::kSame, draw);
            auto trim = [&](Text& t) {
                if (static_cast<std::int64_t>(t.size()) > n)
                    t.symbols.resize(static_cast<std::size_t>(n));
            };
            trim(pair.first);
            trim(pair.second);
            return {std::move(pair.first), std::move(pair.second)};
        }
    }
    throw std::logic_error("make_instance: unreachable");
}

}  // namespace edist
