#ifndef EDIST_ESTIMATE_HPP
#define EDIST_ESTIMATE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edist/rmq.hpp"
#include "edist/sampling.hpp"
#include "edist/text.hpp"

namespace edist {

// ---------------------------------------------------------------------------
// (rho, f)-approximator envelopes: hat approximates truth when
// truth/f - rho <= hat <= f*truth + rho.

struct ApproxEnvelope {
    double rho = 0;
    double f = 1;
};

bool within_envelope(double hat, double truth, const ApproxEnvelope& e);

// Sum of two approximated quantities: errors add, factors take the max.
ApproxEnvelope envelope_add(const ApproxEnvelope& a, const ApproxEnvelope& b);

// outer approximates a value that itself approximates the truth via inner.
ApproxEnvelope envelope_compose(const ApproxEnvelope& outer,
                                const ApproxEnvelope& inner);

// ---------------------------------------------------------------------------
// Asymmetric access: y is free, x may be read only at the sampled
// positions. Reads outside the set throw; reads are counted.

struct AccessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GuardedText {
public:
    GuardedText(const Text& text, std::span<const std::int64_t> allowed);

    Symbol at(std::int64_t pos) const;
    std::int64_t reads() const { return reads_; }
    std::int64_t size() const { return static_cast<std::int64_t>(text_->size()); }

private:
    const Text* text_;
    std::vector<bool> allowed_;
    mutable std::int64_t reads_ = 0;
};

// ---------------------------------------------------------------------------
// Per-node estimate table: tau(v, z) over a window of target positions,
// with a range-min index for displacement queries. Positions outside the
// global range [-n, 2n) hold `pad` (the block length: nothing out there can
// be matched).

struct NodeEstimates {
    int level = 0;
    std::int64_t start = 0;
    std::int64_t lo = 0;  // first stored target position
    double pad = 0;
    std::vector<double> values;
    RangeMinIndex<double> rmq;

    std::int64_t hi() const {
        return lo + static_cast<std::int64_t>(values.size()) - 1;
    }
    double at(std::int64_t z) const {
        const std::int64_t i = z - lo;
        if (i < 0 || i >= static_cast<std::int64_t>(values.size())) return pad;
        return values[static_cast<std::size_t>(i)];
    }
    void build_index() { rmq.build(values); }
    // Minimum of tau over [a, b] (absolute positions, inclusive); parts of
    // the interval outside the stored window contribute pad.
    double range_min(std::int64_t a, std::int64_t b) const;
};

// The geometric displacement grid: magnitudes e^{g/log2 n} up to 3n/beta
// (deduplicated by integer reach), plus the zero displacement.
struct ShiftGrid {
    struct Entry {
        std::int64_t reach;
        double penalty;
    };
    std::vector<Entry> entries;  // increasing reach, entries[0] = {0, 0}
    std::int64_t max_reach = 0;

    static ShiftGrid make(std::int64_t n, double beta);
};

// Best displacement cost of a child evaluated around z0:
//   min over |k| <= max_shift of |k| + child(z0 + k).
double shift_min(const NodeEstimates& child, std::int64_t z0,
                 std::int64_t max_shift);

// Grid-restricted version: min over grid magnitudes k of
//   k + min_{|k'| <= floor(k)} child(z0 + k'),
// inner minima answered by the child's range-min index. Never smaller than
// shift_min, and at most a factor e^{1/log2 n} larger whenever the
// unrestricted value is at most 3n/beta.
double restricted_shift_min(const NodeEstimates& child, std::int64_t z0,
                            const ShiftGrid& grid);

// Convenience form: child of a node evaluated at z with block offset t.
double delta_restricted(const NodeEstimates& child_tau, std::int64_t z,
                        std::int64_t offset, std::int64_t n, double beta);

// restricted_shift_min for every z in [plo, phi] at once (probing position
// z + t), via incrementally widened sliding-window minima. Equal to the
// per-z calls, much cheaper in bulk; no range-min index needed.
std::vector<double> batched_restricted_shift_min(const NodeEstimates& child,
                                                 const ShiftGrid& grid,
                                                 std::int64_t t,
                                                 std::int64_t plo,
                                                 std::int64_t phi);

// ---------------------------------------------------------------------------
// Estimation over a sample tree.

struct EstimateOptions {
    // Use the geometric displacement grid (the fast path). When false, use
    // the full min-plus transform; combined with a no-pruning tree the
    // estimate then equals the exact tree distance.
    bool restricted_shifts = true;
};

enum class Decision { kClose, kFar };

struct EstimateReport {
    double estimate = 0;
    std::int64_t queries_used = 0;
    int decision = -1;  // -1 none, 0 close, 1 far
    double millis = 0;
    std::uint64_t seed = 0;
    double beta = 0;
    int b = 0;
    std::int64_t n = 0;

    std::string serialize() const;  // key=value lines
};

// Bottom-up estimation of the tree distance from the sampled positions of
// x and unrestricted access to y. Contract: the output is an
// (n/beta, 1+o(1))-approximator of the exact tree distance w.h.p.
EstimateReport estimate_tree_distance(const Text& x, const Text& y,
                                      const SampleTree& tree,
                                      const EstimateOptions& opts = {});

// Threshold decision: far iff the estimate exceeds 2n/beta (the midpoint
// of the n/beta vs 4n/beta estimation gap).
Decision dtep_decide(const Text& x, const Text& y, double beta,
                     TreeParams params);

struct ApproxResult {
    double estimate = 0;     // n/beta* for the transition beta (0 if none far)
    std::int64_t queries = 0;
    double millis = 0;
    std::vector<EstimateReport> trail;
};

// Full approximation driver: pads the pair, scans beta over powers of two
// from n downward, and returns n/beta for the last beta that still decided
// far before the first close decision.
ApproxResult approximate_ed(const Text& x, const Text& y, int b,
                            std::uint64_t seed, double c_p = 1.0,
                            double zeta = 1.0);

}  // namespace edist

#endif
