#ifndef EDIST_SAMPLING_HPP
#define EDIST_SAMPLING_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "edist/precision.hpp"
#include "edist/tree.hpp"

namespace edist {

struct SampleNode {
    std::int64_t start = 0;        // block start, 0-based
    std::int64_t parent_start = 0;
    double precision = 0;          // required accuracy: block_len / precision
    double p_raw = 0;              // (precision/b) * c_p * log2(n)^3, unclamped
    std::int32_t first_child = -1; // index range into the next level
    std::int32_t child_count = 0;
    bool subsampled = false;       // picked by a Bernoulli rather than kept wholesale

    double prob() const { return p_raw < 1.0 ? p_raw : 1.0; }
    bool full_expansion() const { return p_raw >= 1.0; }
};

// The pruned b-ary block tree. Construction reads only the parameters (it
// is oblivious to string contents); level h nodes are the positions of x
// the estimator is allowed to query.
struct SampleTree {
    TreeParams params;
    PrecisionDist precision_dist;  // source of fresh precisions
    std::vector<std::vector<SampleNode>> levels;

    std::int64_t query_count() const {
        return static_cast<std::int64_t>(levels.back().size());
    }
    std::vector<std::int64_t> query_positions() const;

    void serialize(std::ostream& os) const;
    static SampleTree parse(std::istream& is);
};

// Top-down construction: the root carries precision beta (or 4*beta when
// params.root_precision_x4). A node with p_raw >= 1 keeps all b children,
// each inheriting precision p_raw; otherwise each child survives a
// Bernoulli(p_raw) coin and draws a fresh precision. Fresh precisions come
// from PrecisionDist::make(1, n, 1/n^3, 1/log2 n, zeta). Deterministic in
// params.seed regardless of traversal order.
SampleTree build_sample_tree(const TreeParams& params);

// The degenerate no-pruning tree: every node keeps all children. Used for
// the equivalence path where the estimator must reproduce the exact
// distance.
SampleTree build_full_tree(const TreeParams& params);

std::int64_t query_count(const SampleTree& tree);

// Subsampling probability of the uniform estimator: keep each of b items
// with probability min(1, (w/b) * zeta * log2(1/delta) / eps^2); the scaled
// survivor sum is then a (1/w, e^eps)-approximator of the total w.h.p.
double uniform_sample_prob(double w, int b, double eps, double delta,
                           double zeta = 1.0);

}  // namespace edist

#endif
