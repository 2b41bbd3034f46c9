#include "edist/hard.hpp"

#include <stdexcept>

#include "edist/exact.hpp"

namespace edist {

std::int64_t SubstitutionMap::image_len() const {
    if (images.empty())
        throw std::invalid_argument("SubstitutionMap: no images");
    return static_cast<std::int64_t>(images.front().size());
}

void SubstitutionMap::validate() const {
    const std::int64_t len = image_len();
    for (const auto& img : images)
        if (static_cast<std::int64_t>(img.size()) != len)
            throw std::invalid_argument("SubstitutionMap: unequal image lengths");
}

Text cyclic_shift(const Text& x, std::int64_t r) {
    if (x.empty()) throw std::invalid_argument("cyclic_shift: empty text");
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    r %= n;
    if (r < 0) r += n;
    std::vector<Symbol> out(x.size());
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            x.symbols[static_cast<std::size_t>((i + r) % n)];
    return Text(std::move(out), x.alphabet_size);
}

Text sample_shift_dist(const Text& x, std::int64_t s, Rng& rng) {
    if (s < 1 || s > static_cast<std::int64_t>(x.size()))
        throw std::invalid_argument("sample_shift_dist: s out of range");
    const std::int64_t r =
        1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(s)));
    return cyclic_shift(x, r);
}

Text substitution_product(const Text& x, const SubstitutionMap& map) {
    map.validate();
    const std::int64_t len = map.image_len();
    std::vector<Symbol> out;
    out.reserve(x.size() * static_cast<std::size_t>(len));
    Symbol sigma = 0;
    for (Symbol c : x.symbols) {
        if (c >= map.images.size())
            throw std::invalid_argument("substitution_product: symbol without image");
        const Text& img = map.images[c];
        out.insert(out.end(), img.symbols.begin(), img.symbols.end());
        sigma = std::max(sigma, img.alphabet_size);
    }
    for (const auto& img : map.images) sigma = std::max(sigma, img.alphabet_size);
    return Text(std::move(out), sigma);
}

double image_overlap(const SubstitutionMap& map) {
    map.validate();
    if (map.images.size() < 2)
        throw std::invalid_argument("image_overlap: need at least two images");
    const double len = static_cast<double>(map.image_len());
    double best = 0;
    for (std::size_t a = 0; a < map.images.size(); ++a)
        for (std::size_t b = a + 1; b < map.images.size(); ++b) {
            const double v =
                static_cast<double>(lcs(map.images[a], map.images[b])) / len;
            if (v > best) best = v;
        }
    return best;
}

void HardInstanceParams::validate() const {
    if (sigma < 2) throw std::invalid_argument("HardInstanceParams: sigma < 2");
    if (shift_mag < 1 || shift_mag > block_len)
        throw std::invalid_argument("HardInstanceParams: shift_mag out of range");
    if (levels < 1) throw std::invalid_argument("HardInstanceParams: levels < 1");
    if (bin_len < 0) throw std::invalid_argument("HardInstanceParams: bin_len < 0");
}

std::int64_t HardInstanceParams::final_len() const {
    std::int64_t len = 1;
    for (int i = 0; i < levels; ++i) len *= block_len;
    return len * (bin_len > 0 ? bin_len : 1);
}

std::uint64_t text_digest(const Text& t) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto eat = [&h](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    eat(t.alphabet_size);
    for (Symbol s : t.symbols) eat(s);
    return h;
}

namespace {

std::vector<Text> make_base_strings(const HardInstanceParams& p) {
    std::vector<Text> base;
    base.reserve(p.sigma);
    for (Symbol a = 0; a < p.sigma; ++a) {
        Rng rng(derive_seed(p.seed, stream::kHardBase, a));
        std::vector<Symbol> syms(static_cast<std::size_t>(p.block_len));
        for (auto& s : syms)
            s = static_cast<Symbol>(rng.below(p.sigma));
        base.emplace_back(std::move(syms), p.sigma);
    }
    return base;
}

// One draw from the level-i family of symbol a: recursively draw the
// mother string, then substitute every symbol by an independent random
// rotation of its base string.
Text draw_family(const HardInstanceParams& p, const std::vector<Text>& base,
                 int level, Symbol a, Rng& rng) {
    if (level == 1) return sample_shift_dist(base[a], p.shift_mag, rng);
    Text mother = draw_family(p, base, level - 1, a, rng);
    std::vector<Symbol> out;
    out.reserve(mother.size() * static_cast<std::size_t>(p.block_len));
    for (Symbol c : mother.symbols) {
        Text block = sample_shift_dist(base[c], p.shift_mag, rng);
        out.insert(out.end(), block.symbols.begin(), block.symbols.end());
    }
    return Text(std::move(out), p.sigma);
}

}  // namespace

SubstitutionMap random_binary_code(Symbol sigma, std::int64_t t, Rng& rng) {
    SubstitutionMap code;
    code.images.reserve(sigma);
    for (Symbol a = 0; a < sigma; ++a) {
        std::vector<Symbol> bits(static_cast<std::size_t>(t));
        for (auto& b : bits) b = static_cast<Symbol>(rng.below(2));
        code.images.emplace_back(std::move(bits), 2);
    }
    return code;
}

Text to_binary(const Text& x, const SubstitutionMap& code) {
    code.validate();
    for (const auto& img : code.images)
        if (img.alphabet_size > 2)
            throw std::invalid_argument("to_binary: code images must be binary");
    return substitution_product(x, code);
}

HardPair gen_hard_pair(const HardInstanceParams& params, HardPairKind which,
                       Rng& rng) {
    params.validate();
    HardPair out;
    out.base_strings = make_base_strings(params);

    const Symbol first_sym = 0;
    const Symbol second_sym = which == HardPairKind::kSame ? 0 : 1;
    out.first =
        draw_family(params, out.base_strings, params.levels, first_sym, rng);
    out.second =
        draw_family(params, out.base_strings, params.levels, second_sym, rng);

    if (params.bin_len > 0) {
        Rng code_rng(derive_seed(params.seed, stream::kHardCode));
        SubstitutionMap code =
            random_binary_code(params.sigma, params.bin_len, code_rng);
        out.first = to_binary(out.first, code);
        out.second = to_binary(out.second, code);
    }
    return out;
}

}  // namespace edist
