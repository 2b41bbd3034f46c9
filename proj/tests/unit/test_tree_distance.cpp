#include "edist/tree_distance.hpp"

#include <map>

#include "doctest.h"
#include "edist/exact.hpp"
#include "edist/instances.hpp"
#include "edist/rng.hpp"

using namespace edist;

namespace {

Text T(const char* s) { return text_from_string(s); }

// Test oracle 1: direct evaluation of the recursive definition, minimum
// over a displacement range wide enough to be exhaustive, no analytic
// shortcuts. Exponential-ish; only for tiny n.
struct BruteTree {
    const Text& x;
    const Text& y;
    const TreeParams& p;
    std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> memo;

    std::int64_t eval(int level, std::int64_t start, std::int64_t u) {
        if (level == p.h) {
            const bool match = u >= 0 && u < p.n &&
                               x[static_cast<std::size_t>(start)] ==
                                   y[static_cast<std::size_t>(u)];
            return match ? 0 : 1;
        }
        const auto key = std::make_tuple(level, start, u);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const std::int64_t child_len = p.level_len(level + 1);
        const std::int64_t reach = 3 * p.n + child_len;
        std::int64_t total = 0;
        for (int j = 0; j < p.b; ++j) {
            const std::int64_t t = j * child_len;
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (std::int64_t r = -reach; r <= reach; ++r) {
                const std::int64_t u2 = u + t + r;
                // beyond this range every leaf below misses, independent of r
                std::int64_t val;
                if (u2 < -4 * p.n || u2 > 5 * p.n)
                    val = child_len;
                else
                    val = eval(level + 1, start + t, u2);
                best = std::min<std::int64_t>(best, val + std::llabs(r));
            }
            total += best;
        }
        memo[key] = total;
        return total;
    }
};

std::int64_t brute_tree_distance(const Text& x, const Text& y,
                                 const TreeParams& p) {
    BruteTree bt{x, y, p, {}};
    return bt.eval(0, 0, 0);
}

// Test oracle 2: exhaustive minimum of assignment_distance over all block
// assignments with positions in [-n, 2n), branch-and-bound pruned.
struct AssignmentSearch {
    const Text& x;
    const Text& y;
    const TreeParams& p;
    BlockAssignment a;
    std::int64_t best;

    std::int64_t leaf_cost(std::int64_t s, std::int64_t z) const {
        const bool match = z >= 0 && z < p.n &&
                           y[static_cast<std::size_t>(z)] ==
                               x[static_cast<std::size_t>(s)];
        return match ? 0 : 1;
    }

    void search(int level, std::int64_t block, std::int64_t partial) {
        if (partial >= best) return;
        if (level > p.h) {
            best = partial;
            return;
        }
        const std::int64_t blocks = p.blocks_at(level);
        if (block == blocks) {
            search(level + 1, 0, partial);
            return;
        }
        const std::int64_t child_len = p.level_len(level);
        const std::int64_t parent_z =
            a.positions[level - 1][block / p.b] + (block % p.b) * child_len;
        for (std::int64_t z = -p.n; z < 2 * p.n; ++z) {
            a.positions[level][block] = z;
            std::int64_t cost = std::llabs(parent_z - z);
            if (level == p.h) cost += leaf_cost(block, z);
            search(level, block + 1, partial + cost);
        }
    }
};

std::int64_t min_assignment_distance(const Text& x, const Text& y,
                                     const TreeParams& p) {
    AssignmentSearch s{x, y, p, BlockAssignment::identity(p), 0};
    // identity assignment = Hamming distance, a valid upper bound
    s.best = assignment_distance(x, y, s.a, p) + 1;
    s.a = BlockAssignment::identity(p);
    s.search(1, 0, 0);
    return s.best;
}

}  // namespace

TEST_CASE("tree distance basics") {
    auto p2 = make_tree_params(2, 2, 2.0, 0);
    CHECK(exact_tree_distance(T("ab"), T("ab"), p2) == 0);
    CHECK(exact_tree_distance(T("ab"), T("ba"), p2) == 2);

    auto p4 = make_tree_params(4, 2, 2.0, 0);
    CHECK(exact_tree_distance(T("abcd"), T("abcd"), p4) == 0);

    // sandwich on the fixed example: ed = 2
    const std::int64_t e = exact_tree_distance(T("ab"), T("ba"), p2);
    CHECK(e >= 1);            // ed/2
    CHECK(e <= 3 * 1 * 2 * 2);  // 3*h*b*ed
}

TEST_CASE("identical strings have distance zero for several arities") {
    Rng rng(5);
    for (auto [n, b] : std::vector<std::pair<std::int64_t, int>>{
             {8, 2}, {16, 4}, {27, 3}, {64, 8}}) {
        Text x = random_text(n, 4, rng);
        auto p = make_tree_params(n, b, 2.0, 0);
        CHECK(exact_tree_distance(x, x, p) == 0);
    }
}

TEST_CASE("agrees with the direct recursive definition on tiny inputs") {
    Rng rng(81);
    for (int iter = 0; iter < 40; ++iter) {
        const int b = iter % 2 == 0 ? 2 : 4;
        const std::int64_t n = b == 2 ? (iter % 4 < 2 ? 4 : 8) : 4;
        const Symbol sigma = 2 + rng.below(2);
        Text x = random_text(n, sigma, rng);
        Text y = random_text(n, sigma, rng);
        auto p = make_tree_params(n, b, 2.0, 0);
        CHECK(exact_tree_distance(x, y, p) == brute_tree_distance(x, y, p));
    }
}

TEST_CASE("assignment route: identity on equal strings, bound, exhaustive min") {
    Rng rng(17);
    // identity assignment on x == y costs 0
    {
        Text x = random_text(4, 2, rng);
        auto p = make_tree_params(4, 2, 2.0, 0);
        CHECK(assignment_distance(x, x, BlockAssignment::identity(p), p) == 0);
    }
    // the n=2 example
    {
        auto p = make_tree_params(2, 2, 2.0, 0);
        CHECK(min_assignment_distance(T("ab"), T("ba"), p) == 2);
        CHECK(min_assignment_distance(T("ab"), T("ba"), p) ==
              exact_tree_distance(T("ab"), T("ba"), p));
    }
    // any assignment upper-bounds the distance; exhaustive min matches it
    for (int iter = 0; iter < 6; ++iter) {
        const std::int64_t n = 4;
        Text x = random_text(n, 2, rng);
        Text y = random_text(n, 2, rng);
        auto p = make_tree_params(n, 2, 2.0, 0);
        const std::int64_t exact = exact_tree_distance(x, y, p);
        CHECK(assignment_distance(x, y, BlockAssignment::identity(p), p) >= exact);
        CHECK(min_assignment_distance(x, y, p) == exact);
    }
}

TEST_CASE("sandwich between ed/2 and 3*h*b*ed on random pairs") {
    Rng rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        const std::int64_t n = iter % 2 == 0 ? 16 : 64;
        const int b = iter % 2 == 0 ? 2 : 4;
        const Symbol sigma = 2 + rng.below(6);
        Text x = random_text(n, sigma, rng);
        Text y = rng.bernoulli(0.5)
                     ? random_text(n, sigma, rng)
                     : with_substitutions(x, 1 + rng.below(n / 4), rng);
        auto p = make_tree_params(n, b, 2.0, 0);
        const std::int64_t e = exact_tree_distance(x, y, p);
        const std::int64_t d = ed(x, y);
        CHECK(2 * e >= d);
        CHECK(e <= 3 * static_cast<std::int64_t>(p.h) * p.b * d);
    }
}

TEST_CASE("zero shift window degenerates to Hamming distance") {
    Rng rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        const std::int64_t n = 16;
        Text x = random_text(n, 3, rng);
        Text y = random_text(n, 3, rng);
        auto p = make_tree_params(n, 4, 2.0, 0);
        CHECK(exact_tree_distance_shift_limited(x, y, p, 0) == hamming(x, y));
        CHECK(exact_tree_distance_shift_limited(x, y, p, n) ==
              exact_tree_distance(x, y, p));
    }
}

TEST_CASE("identical padding never increases the distance") {
    // The sentinel tail matches itself at zero cost, so padding cannot make
    // the distance larger. It can occasionally make it smaller: the extra
    // tree level lets the whole original block shift at a cost the unpadded
    // tree never pays (the root is pinned). Both strings keep the same edit
    // distance, so the sandwich also survives padding.
    Rng rng(41);
    for (int iter = 0; iter < 15; ++iter) {
        const std::int64_t n = 8;
        Text x = random_text(n, 4, rng);
        Text y = random_text(n, 4, rng);
        auto p8 = make_tree_params(8, 2, 2.0, 0);
        const std::int64_t before = exact_tree_distance(x, y, p8);

        PaddedPair pp = pad_pair(x, y, 2);
        CHECK(pp.n == 8);  // already a power

        // force another level of padding
        Text x9 = x, y9 = y;
        x9.symbols.push_back(0);
        y9.symbols.push_back(0);
        PaddedPair pp16 = pad_pair(x9, y9, 2);
        REQUIRE(pp16.n == 16);
        // remove the helper symbol again so both tails are pure sentinel
        pp16.x.symbols[8] = pp16.x.alphabet_size - 1;
        pp16.y.symbols[8] = pp16.y.alphabet_size - 1;
        auto p16 = make_tree_params(16, 2, 2.0, 0);
        const std::int64_t after = exact_tree_distance(pp16.x, pp16.y, p16);
        CHECK(after <= before);
        const std::int64_t d = ed(x, y);
        CHECK(2 * after >= d);  // lower sandwich still holds after padding
        CHECK(after <= 3 * 4 * 2 * d);
    }
}

TEST_CASE("pad_to_power geometry") {
    Rng rng(3);
    {
        auto p = pad_to_power(random_text(5, 4, rng), 2);
        CHECK(p.n == 8);
        CHECK(p.h == 3);
        CHECK(p.text.size() == 8);
        CHECK(p.text[5] == 4);  // sentinel is the old alphabet size
        CHECK(p.text.alphabet_size == 5);
    }
    {
        auto p = pad_to_power(random_text(8, 4, rng), 2);
        CHECK(p.n == 8);
        CHECK(p.h == 3);
    }
    {
        auto p = pad_to_power(random_text(10, 4, rng), 4);
        CHECK(p.n == 16);
        CHECK(p.h == 2);
    }
}

TEST_CASE("single character tree (h = 0)") {
    auto p = make_tree_params(1, 2, 2.0, 0);
    CHECK(exact_tree_distance(T("a"), T("a"), p) == 0);
    CHECK(exact_tree_distance(T("a"), T("b"), p) == 1);
}
