#ifndef EDIST_TRANSFORM_HPP
#define EDIST_TRANSFORM_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace edist {

namespace detail {
template <typename T>
constexpr T transform_inf() {
    if constexpr (std::numeric_limits<T>::is_integer)
        return std::numeric_limits<T>::max() / 4;
    else
        return std::numeric_limits<T>::infinity();
}
}  // namespace detail

// Windowed min-plus transform: g[u] = min over |r| <= window of
// f[u + r] + |r|. Two linear passes (left-to-right, then right-to-left)
// using monotone deques. Positions outside [0, f.size()) are treated as
// holding `outside` (default +inf, i.e. they never win).
template <typename T>
std::vector<T> distance_transform(const std::vector<T>& f, std::int64_t window,
                                  T outside = detail::transform_inf<T>()) {
    const std::int64_t n = static_cast<std::int64_t>(f.size());
    const T inf = detail::transform_inf<T>();
    std::vector<T> g(f.size(), inf);
    if (n == 0) return g;
    if (window < 0) window = 0;

    // Left pass: g[u] <- u + min_{v in [u-window, u]} (f[v] - v).
    {
        std::deque<std::int64_t> dq;
        for (std::int64_t u = 0; u < n; ++u) {
            while (!dq.empty() && dq.front() < u - window) dq.pop_front();
            const T key = f[u] - static_cast<T>(u);
            while (!dq.empty() && f[dq.back()] - static_cast<T>(dq.back()) >= key)
                dq.pop_back();
            dq.push_back(u);
            g[u] = f[dq.front()] - static_cast<T>(dq.front()) + static_cast<T>(u);
        }
    }
    // Right pass: g[u] <- min(g[u], -u + min_{v in [u, u+window]} (f[v] + v)).
    {
        std::deque<std::int64_t> dq;
        for (std::int64_t u = n - 1; u >= 0; --u) {
            while (!dq.empty() && dq.front() > u + window) dq.pop_front();
            const T key = f[u] + static_cast<T>(u);
            while (!dq.empty() && f[dq.back()] + static_cast<T>(dq.back()) >= key)
                dq.pop_back();
            dq.push_back(u);
            const T cand =
                f[dq.front()] + static_cast<T>(dq.front()) - static_cast<T>(u);
            if (cand < g[u]) g[u] = cand;
        }
    }
    // Out-of-range contributions; the closest outside position dominates.
    if (outside < inf) {
        for (std::int64_t u = 0; u < n; ++u) {
            if (u + 1 <= window) {
                const T cand = outside + static_cast<T>(u + 1);
                if (cand < g[u]) g[u] = cand;
            }
            if (n - u <= window) {
                const T cand = outside + static_cast<T>(n - u);
                if (cand < g[u]) g[u] = cand;
            }
        }
    }
    return g;
}

// Reference implementation for property tests: brute-force min over all r.
template <typename T>
std::vector<T> distance_transform_naive(const std::vector<T>& f,
                                        std::int64_t window,
                                        T outside = detail::transform_inf<T>()) {
    const std::int64_t n = static_cast<std::int64_t>(f.size());
    const T inf = detail::transform_inf<T>();
    std::vector<T> g(f.size(), inf);
    for (std::int64_t u = 0; u < n; ++u) {
        T best = inf;
        for (std::int64_t r = -window; r <= window; ++r) {
            const std::int64_t v = u + r;
            T val;
            if (v < 0 || v >= n)
                val = outside;
            else
                val = f[v];
            if (val >= inf) continue;
            const T cand = val + static_cast<T>(r < 0 ? -r : r);
            if (cand < best) best = cand;
        }
        g[u] = best;
    }
    return g;
}

}  // namespace edist

#endif
