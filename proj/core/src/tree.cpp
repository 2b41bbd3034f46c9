#include "edist/tree.hpp"

#include <algorithm>
#include <cmath>

namespace edist {

double TreeParams::log2n() const { return std::log2(static_cast<double>(n)); }

double TreeParams::level_eps() const {
    if (eps > 0) return eps;
    return 1.0 / std::max(1.0, log2n());
}

void TreeParams::validate() const {
    if (b < 2) throw std::invalid_argument("TreeParams: b must be >= 2");
    if (h < 0) throw std::invalid_argument("TreeParams: negative height");
    std::int64_t p = 1;
    for (int i = 0; i < h; ++i) {
        if (p > n / b) throw std::invalid_argument("TreeParams: b^h overflows n");
        p *= b;
    }
    if (p != n) throw std::invalid_argument("TreeParams: n must equal b^h");
    if (beta < 2) throw std::invalid_argument("TreeParams: beta must be >= 2");
    if (c_p <= 0 || zeta <= 0)
        throw std::invalid_argument("TreeParams: c_p and zeta must be positive");
    if (eps < 0) throw std::invalid_argument("TreeParams: eps must be >= 0");
}

TreeParams make_tree_params(std::int64_t n, int b, double beta,
                            std::uint64_t seed, double c_p, double zeta) {
    TreeParams p;
    p.n = n;
    p.b = b;
    p.h = padded_height(n, b);
    p.beta = beta;
    p.seed = seed;
    p.c_p = c_p;
    p.zeta = zeta;
    p.validate();
    return p;
}

int padded_height(std::int64_t len, int b) {
    if (len < 1) throw std::invalid_argument("padded_height: empty input");
    int h = 0;
    std::int64_t p = 1;
    while (p < len) {
        p *= b;
        ++h;
    }
    return h;
}

PaddedText pad_to_power(const Text& x, int b) {
    if (b < 2) throw std::invalid_argument("pad_to_power: b must be >= 2");
    if (x.empty()) throw std::invalid_argument("pad_to_power: empty input");
    PaddedText out;
    out.h = padded_height(static_cast<std::int64_t>(x.size()), b);
    out.n = 1;
    for (int i = 0; i < out.h; ++i) out.n *= b;
    out.text = x;
    const Symbol sentinel = x.alphabet_size;
    out.text.alphabet_size = x.alphabet_size + 1;
    out.text.symbols.resize(static_cast<std::size_t>(out.n), sentinel);
    return out;
}

PaddedPair pad_pair(const Text& x, const Text& y, int b) {
    Text ux = x, uy = y;
    unify_alphabet(ux, uy);
    const std::int64_t len = std::max<std::int64_t>(
        {1, static_cast<std::int64_t>(ux.size()),
         static_cast<std::int64_t>(uy.size())});
    const int h = padded_height(len, b);
    std::int64_t n = 1;
    for (int i = 0; i < h; ++i) n *= b;

    const Symbol sentinel = ux.alphabet_size;
    auto pad = [&](Text& t) {
        t.alphabet_size += 1;
        t.symbols.resize(static_cast<std::size_t>(n), sentinel);
    };
    pad(ux);
    pad(uy);
    return PaddedPair{std::move(ux), std::move(uy), n, h};
}

}  // namespace edist
