#include "edist/tree_distance.hpp"

#include <algorithm>
#include <stdexcept>

#include "edist/transform.hpp"

namespace edist {

namespace {

struct ExactCtx {
    const Text& x;
    const Text& y;
    const TreeParams& p;
    std::int64_t n;
    std::int64_t width;  // 3n, target positions [-n, 2n)
    std::int64_t max_shift;
    std::vector<std::vector<std::int32_t>> occ;  // y positions per symbol
};

// Score vector of the block starting at `start` on level `level`, indexed
// by target position u via idx = u + n. Out of [-n, 2n) the value is the
// block length exactly (nothing can be matched and shifting back never
// pays off), which is what callers substitute for out-of-range reads.
std::vector<std::int64_t> node_vector(ExactCtx& c, int level,
                                      std::int64_t start) {
    if (level == c.p.h) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(c.width), 1);
        const Symbol s = c.x[static_cast<std::size_t>(start)];
        for (std::int32_t pos : c.occ[s]) v[static_cast<std::size_t>(pos) + c.n] = 0;
        return v;
    }
    const std::int64_t child_len = c.p.level_len(level + 1);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(c.width), 0);
    for (int j = 0; j < c.p.b; ++j) {
        auto child = node_vector(c, level + 1, start + j * child_len);
        // Displacements beyond the child length never win (each position
        // costs at most 1), so clamping the window there keeps the result
        // exact while the transform stays linear.
        const std::int64_t window = std::min(c.max_shift, child_len);
        auto shifted =
            distance_transform(child, window, /*outside=*/child_len);
        const std::int64_t t = j * child_len;
        for (std::int64_t i = 0; i < c.width; ++i) {
            const std::int64_t idx = i + t;
            acc[static_cast<std::size_t>(i)] +=
                idx < c.width ? shifted[static_cast<std::size_t>(idx)] : child_len;
        }
    }
    return acc;
}

std::int64_t run_exact(const Text& x, const Text& y, const TreeParams& p,
                       std::int64_t max_shift) {
    p.validate();
    if (static_cast<std::int64_t>(x.size()) != p.n ||
        static_cast<std::int64_t>(y.size()) != p.n)
        throw std::invalid_argument(
            "exact_tree_distance: strings must have length n = b^h");

    ExactCtx c{x, y, p, p.n, 3 * p.n, max_shift, {}};
    c.occ.resize(std::max(x.alphabet_size, y.alphabet_size));
    for (std::size_t i = 0; i < y.size(); ++i)
        c.occ[y[i]].push_back(static_cast<std::int32_t>(i));

    auto root = node_vector(c, 0, 0);
    return root[static_cast<std::size_t>(c.n)];  // target position 0
}

}  // namespace

std::int64_t exact_tree_distance(const Text& x, const Text& y,
                                 const TreeParams& params) {
    return run_exact(x, y, params, params.n);
}

std::int64_t exact_tree_distance_shift_limited(const Text& x, const Text& y,
                                               const TreeParams& params,
                                               std::int64_t max_shift) {
    return run_exact(x, y, params, std::max<std::int64_t>(0, max_shift));
}

BlockAssignment BlockAssignment::identity(const TreeParams& params) {
    BlockAssignment a;
    a.positions.resize(static_cast<std::size_t>(params.h) + 1);
    for (int i = 0; i <= params.h; ++i) {
        const std::int64_t blocks = params.blocks_at(i);
        const std::int64_t len = params.level_len(i);
        a.positions[i].resize(static_cast<std::size_t>(blocks));
        for (std::int64_t k = 0; k < blocks; ++k) a.positions[i][k] = k * len;
    }
    return a;
}

void BlockAssignment::validate(const TreeParams& params) const {
    if (positions.size() != static_cast<std::size_t>(params.h) + 1)
        throw std::invalid_argument("BlockAssignment: wrong number of levels");
    for (int i = 0; i <= params.h; ++i)
        if (static_cast<std::int64_t>(positions[i].size()) != params.blocks_at(i))
            throw std::invalid_argument("BlockAssignment: incomplete level");
    if (positions[0][0] != 0)
        throw std::invalid_argument("BlockAssignment: root position must be 0");
}

std::int64_t assignment_cost(const BlockAssignment& assignment,
                             const TreeParams& params) {
    assignment.validate(params);
    std::int64_t cost = 0;
    for (int i = 0; i < params.h; ++i) {
        const std::int64_t child_len = params.level_len(i + 1);
        const std::int64_t blocks = params.blocks_at(i);
        for (std::int64_t k = 0; k < blocks; ++k) {
            const std::int64_t zi = assignment.positions[i][k];
            for (int j = 0; j < params.b; ++j) {
                const std::int64_t zc = assignment.positions[i + 1][k * params.b + j];
                cost += std::llabs(zi + j * child_len - zc);
            }
        }
    }
    return cost;
}

std::int64_t assignment_distance(const Text& x, const Text& y,
                                 const BlockAssignment& assignment,
                                 const TreeParams& params) {
    if (static_cast<std::int64_t>(x.size()) != params.n ||
        static_cast<std::int64_t>(y.size()) != params.n)
        throw std::invalid_argument(
            "assignment_distance: strings must have length n = b^h");
    std::int64_t total = assignment_cost(assignment, params);
    const auto& leaf = assignment.positions[static_cast<std::size_t>(params.h)];
    for (std::int64_t s = 0; s < params.n; ++s) {
        const std::int64_t z = leaf[static_cast<std::size_t>(s)];
        const bool match = z >= 0 && z < params.n &&
                           y[static_cast<std::size_t>(z)] == x[static_cast<std::size_t>(s)];
        if (!match) ++total;
    }
    return total;
}

}  // namespace edist
