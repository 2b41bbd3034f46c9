#include "edist/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace edist {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

std::int64_t ed(const Text& x, const Text& y) {
    const auto& a = x.symbols;
    const auto& b = y.symbols;
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<std::int64_t>(m);
    if (m == 0) return static_cast<std::int64_t>(n);

    // Iterate over the longer string, keep rows over the shorter one.
    if (m > n) return ed(y, x);

    std::vector<std::int64_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<std::int64_t>(i);
        const Symbol ai = a[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            std::int64_t best = prev[j - 1] + (ai == b[j - 1] ? 0 : 1);
            best = std::min(best, prev[j] + 1);
            best = std::min(best, cur[j - 1] + 1);
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::int64_t lcs(const Text& x, const Text& y) {
    const auto& a = x.symbols;
    const auto& b = y.symbols;
    const std::size_t n = a.size(), m = b.size();
    if (n == 0 || m == 0) return 0;
    if (m > n) return lcs(y, x);

    std::vector<std::int64_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Symbol ai = a[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            if (ai == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::int64_t edd(const Text& x, const Text& y) {
    return static_cast<std::int64_t>(x.size()) +
           static_cast<std::int64_t>(y.size()) - 2 * lcs(x, y);
}

std::int64_t hamming(const Text& x, const Text& y) {
    const std::size_t n = std::min(x.size(), y.size());
    std::int64_t d = static_cast<std::int64_t>(std::max(x.size(), y.size()) - n);
    for (std::size_t i = 0; i < n; ++i)
        if (x.symbols[i] != y.symbols[i]) ++d;
    return d;
}

bool Alignment::valid_for(const Text& x, const Text& y) const {
    std::int64_t pi = -1, pj = -1;
    for (auto [i, j] : pairs) {
        if (i <= pi || j <= pj) return false;
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= x.size() ||
            static_cast<std::size_t>(j) >= y.size())
            return false;
        if (x.symbols[i] != y.symbols[j]) return false;
        pi = i;
        pj = j;
    }
    return true;
}

Alignment extract_alignment(const Text& x, const Text& y) {
    const auto& a = x.symbols;
    const auto& b = y.symbols;
    const std::size_t n = a.size(), m = b.size();
    if (n == 0 || m == 0) return {};
    if (n * m > (std::size_t{1} << 26))
        throw std::invalid_argument("extract_alignment: instance too large for full traceback");

    // Full LCS table for the traceback; values fit in 32 bits here.
    std::vector<std::int32_t> tab((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& {
        return tab[i * (m + 1) + j];
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[i - 1] == b[j - 1])
                at(i, j) = at(i - 1, j - 1) + 1;
            else
                at(i, j) = std::max(at(i - 1, j), at(i, j - 1));
        }

    Alignment out;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1] && at(i, j) == at(i - 1, j - 1) + 1) {
            out.pairs.emplace_back(static_cast<std::int64_t>(i - 1),
                                   static_cast<std::int64_t>(j - 1));
            --i;
            --j;
        } else if (at(i, j) == at(i - 1, j)) {
            --i;  // deletion from x
        } else {
            --j;  // insertion
        }
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

std::int64_t edd_banded(const Text& x, const Text& y, std::int64_t band) {
    const auto& a = x.symbols;
    const auto& b = y.symbols;
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t m = static_cast<std::int64_t>(b.size());
    if (n == 0) return m;
    if (m == 0) return n;

    // Diagonal window: i - j stays within [lo, hi] on any path of cost
    // <= band.
    const std::int64_t lo = std::min<std::int64_t>(0, n - m) - band;
    const std::int64_t hi = std::max<std::int64_t>(0, n - m) + band;
    const std::int64_t width = hi - lo + 1;

    std::vector<std::int64_t> prev(width, kInf), cur(width, kInf);
    // Row i = 0: D[0][j] = j for j with -j in [lo,hi].
    for (std::int64_t j = 0; j <= m; ++j) {
        std::int64_t d = -j;
        if (d < lo || d > hi) continue;
        prev[d - lo] = j;
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        std::fill(cur.begin(), cur.end(), kInf);
        const std::int64_t jlo = std::max<std::int64_t>(0, i - hi);
        const std::int64_t jhi = std::min<std::int64_t>(m, i - lo);
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            const std::int64_t d = i - j;
            std::int64_t best = kInf;
            if (j > 0 && a[i - 1] == b[j - 1]) {
                // diagonal keeps the same d
                if (prev[d - lo] < best) best = prev[d - lo];
            }
            if (d - 1 >= lo && prev[d - 1 - lo] < kInf)
                best = std::min(best, prev[d - 1 - lo] + 1);  // delete a[i-1]
            if (d + 1 <= hi && cur[d + 1 - lo] < kInf)
                best = std::min(best, cur[d + 1 - lo] + 1);  // insert b[j-1]
            if (j == 0) best = std::min(best, i);
            cur[d - lo] = best;
        }
        std::swap(prev, cur);
    }
    const std::int64_t d = n - m;
    return prev[d - lo];
}

std::int64_t edd_banded_certified(const Text& x, const Text& y,
                                  std::int64_t initial_band) {
    const std::int64_t full =
        static_cast<std::int64_t>(x.size() + y.size());
    std::int64_t band = std::max<std::int64_t>(1, initial_band);
    for (;;) {
        std::int64_t r = edd_banded(x, y, band);
        // r <= band certifies exactness: the optimal path fits the band.
        if (r <= band || band >= full) return r;
        band *= 2;
    }
}

}  // namespace edist
