#include "edist/estimate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "edist/reconstruct.hpp"
#include "edist/rng.hpp"
#include "edist/transform.hpp"

namespace edist {

// ---------------------------------------------------------------------------
// Approximator envelopes

bool within_envelope(double hat, double truth, const ApproxEnvelope& e) {
    return truth / e.f - e.rho <= hat && hat <= e.f * truth + e.rho;
}

ApproxEnvelope envelope_add(const ApproxEnvelope& a, const ApproxEnvelope& b) {
    return {a.rho + b.rho, std::max(a.f, b.f)};
}

ApproxEnvelope envelope_compose(const ApproxEnvelope& outer,
                                const ApproxEnvelope& inner) {
    return {outer.rho + outer.f * inner.rho, outer.f * inner.f};
}

// ---------------------------------------------------------------------------
// GuardedText

GuardedText::GuardedText(const Text& text,
                         std::span<const std::int64_t> allowed)
    : text_(&text), allowed_(text.size(), false) {
    for (std::int64_t p : allowed) {
        if (p < 0 || p >= size())
            throw std::invalid_argument("GuardedText: allowed position out of range");
        allowed_[static_cast<std::size_t>(p)] = true;
    }
}

Symbol GuardedText::at(std::int64_t pos) const {
    if (pos < 0 || pos >= size() || !allowed_[static_cast<std::size_t>(pos)])
        throw AccessViolation("read of x outside the sampled query set at position " +
                              std::to_string(pos));
    ++reads_;
    return (*text_)[static_cast<std::size_t>(pos)];
}

// ---------------------------------------------------------------------------
// NodeEstimates / ShiftGrid

double NodeEstimates::range_min(std::int64_t a, std::int64_t b) const {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t h = hi();
    if (a < lo || b > h) best = pad;
    const std::int64_t ca = std::max(a, lo), cb = std::min(b, h);
    if (ca <= cb)
        best = std::min(best, rmq.min(static_cast<std::size_t>(ca - lo),
                                      static_cast<std::size_t>(cb - lo)));
    return best;
}

ShiftGrid ShiftGrid::make(std::int64_t n, double beta) {
    ShiftGrid g;
    g.entries.push_back({0, 0.0});
    const double cap = 3.0 * static_cast<double>(n) / beta;
    const double log2n = std::max(1.0, std::log2(static_cast<double>(n)));
    const std::int64_t count =
        static_cast<std::int64_t>(std::ceil(log2n * std::log(cap)));
    for (std::int64_t i = 1; i <= count; ++i) {
        double k = std::exp(static_cast<double>(i) / log2n);
        bool last = false;
        if (k >= cap) {
            k = cap;
            last = true;
        }
        const std::int64_t reach = static_cast<std::int64_t>(k);
        if (reach > g.entries.back().reach) g.entries.push_back({reach, k});
        if (last) break;
    }
    const std::int64_t cap_reach = static_cast<std::int64_t>(cap);
    if (g.entries.back().reach < cap_reach) g.entries.push_back({cap_reach, cap});
    g.max_reach = g.entries.back().reach;
    return g;
}

double shift_min(const NodeEstimates& child, std::int64_t z0,
                 std::int64_t max_shift) {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t a = z0 - max_shift, b = z0 + max_shift;
    const std::int64_t ca = std::max(a, child.lo), cb = std::min(b, child.hi());
    for (std::int64_t z = ca; z <= cb; ++z) {
        const double cand =
            child.values[static_cast<std::size_t>(z - child.lo)] +
            static_cast<double>(std::llabs(z - z0));
        if (cand < best) best = cand;
    }
    // Out-of-window stripes hold pad; within each stripe the position
    // closest to z0 dominates.
    auto stripe = [&](std::int64_t sa, std::int64_t sb) {
        if (sa > sb) return;
        const std::int64_t z = std::clamp(z0, sa, sb);
        const double cand = child.pad + static_cast<double>(std::llabs(z - z0));
        if (cand < best) best = cand;
    };
    stripe(a, std::min(b, child.lo - 1));
    stripe(std::max(a, child.hi() + 1), b);
    return best;
}

double restricted_shift_min(const NodeEstimates& child, std::int64_t z0,
                            const ShiftGrid& grid) {
    double best = child.at(z0);
    for (std::size_t e = 1; e < grid.entries.size(); ++e) {
        const auto& ent = grid.entries[e];
        const double m = child.range_min(z0 - ent.reach, z0 + ent.reach);
        const double cand = ent.penalty + m;
        if (cand < best) best = cand;
    }
    return best;
}

double delta_restricted(const NodeEstimates& child_tau, std::int64_t z,
                        std::int64_t offset, std::int64_t n, double beta) {
    const ShiftGrid grid = ShiftGrid::make(n, beta);
    return restricted_shift_min(child_tau, z + offset, grid);
}

// ---------------------------------------------------------------------------
// Estimation

namespace {

struct EstCtx {
    const SampleTree* tree;
    const GuardedText* gx;
    const Text* y;
    std::int64_t n;
    bool restricted;
    ShiftGrid grid;
    std::int64_t probe_reach;  // window growth per level
    std::vector<std::vector<std::int32_t>> occ;  // y positions per symbol

    const TreeParams& params() const { return tree->params; }
};

// Batch version of restricted_shift_min: delta[z - plo] for all z in
// [plo, phi], probing the child table at z + t. Sliding window minima of
// growing reach are maintained incrementally (each grid step widens the
// window by taking a min of three shifted copies; auxiliary steps are
// inserted when consecutive reaches are too far apart for that to cover).
std::vector<double> fold_grid(const NodeEstimates& tab, const ShiftGrid& grid,
                              std::int64_t t, std::int64_t plo,
                              std::int64_t phi) {
    const std::int64_t w = static_cast<std::int64_t>(tab.values.size());
    const double pad = tab.pad;
    auto read = [&](const std::vector<double>& arr, std::int64_t i) {
        return (i >= 0 && i < w) ? arr[static_cast<std::size_t>(i)] : pad;
    };

    const std::int64_t out_len = phi - plo + 1;
    std::vector<double> out(static_cast<std::size_t>(out_len));
    // base offset: out index zi probes tab index zi + base
    const std::int64_t base = plo + t - tab.lo;

    std::vector<double> cur = tab.values;
    std::vector<double> next(tab.values.size());
    std::int64_t reach = 0;

    for (std::int64_t zi = 0; zi < out_len; ++zi)
        out[static_cast<std::size_t>(zi)] = read(cur, zi + base);

    for (std::size_t e = 1; e < grid.entries.size(); ++e) {
        const std::int64_t target = grid.entries[e].reach;
        while (reach < target) {
            const std::int64_t step = std::min(target, 3 * reach + 1);
            const std::int64_t d = step - reach;
            // interior is branch-free; the two edge strips read pad
            const std::int64_t lo_edge = std::min(d, w);
            const std::int64_t hi_edge = std::max(lo_edge, w - d);
            for (std::int64_t i = 0; i < lo_edge; ++i)
                next[static_cast<std::size_t>(i)] =
                    std::min({pad, cur[static_cast<std::size_t>(i)],
                              read(cur, i + d)});
            for (std::int64_t i = lo_edge; i < hi_edge; ++i)
                next[static_cast<std::size_t>(i)] =
                    std::min({cur[static_cast<std::size_t>(i - d)],
                              cur[static_cast<std::size_t>(i)],
                              cur[static_cast<std::size_t>(i + d)]});
            for (std::int64_t i = hi_edge; i < w; ++i)
                next[static_cast<std::size_t>(i)] =
                    std::min({read(cur, i - d), cur[static_cast<std::size_t>(i)],
                              pad});
            std::swap(cur, next);
            reach = step;
        }
        const double pen = grid.entries[e].penalty;
        for (std::int64_t zi = 0; zi < out_len; ++zi) {
            const double cand = pen + read(cur, zi + base);
            if (cand < out[static_cast<std::size_t>(zi)])
                out[static_cast<std::size_t>(zi)] = cand;
        }
    }
    return out;
}

NodeEstimates compute_node(EstCtx& c, int level, const SampleNode& v,
                           std::int64_t plo, std::int64_t phi);

}  // namespace

std::vector<double> batched_restricted_shift_min(const NodeEstimates& child,
                                                 const ShiftGrid& grid,
                                                 std::int64_t t,
                                                 std::int64_t plo,
                                                 std::int64_t phi) {
    return fold_grid(child, grid, t, plo, phi);
}

namespace {

// delta array of one child over the parent's positions [plo, phi].
std::vector<double> child_delta(EstCtx& c, int child_level,
                                const SampleNode& child, std::int64_t t,
                                std::int64_t plo, std::int64_t phi) {
    const std::int64_t out_len = phi - plo + 1;
    const TreeParams& p = c.params();
    if (child_level == p.h) {
        // A single character: displacing it costs at least its mismatch
        // cost, so delta is just the match indicator at the natural offset.
        std::vector<double> out(static_cast<std::size_t>(out_len), 1.0);
        const Symbol sym = c.gx->at(child.start);
        for (std::int32_t pos : c.occ[sym]) {
            const std::int64_t z = static_cast<std::int64_t>(pos) - t;
            if (z >= plo && z <= phi) out[static_cast<std::size_t>(z - plo)] = 0.0;
        }
        return out;
    }
    std::int64_t clo = plo + t - c.probe_reach;
    std::int64_t chi = phi + t + c.probe_reach;
    clo = std::max(clo, -c.n);
    chi = std::min(chi, 2 * c.n - 1);
    NodeEstimates tab = compute_node(c, child_level, child, clo, chi);
    if (c.restricted) return fold_grid(tab, c.grid, t, plo, phi);

    // Unrestricted displacements: full min-plus transform over the stored
    // window, out-of-window positions at pad.
    auto dt = distance_transform(tab.values, c.n, tab.pad);
    std::vector<double> out(static_cast<std::size_t>(out_len));
    for (std::int64_t zi = 0; zi < out_len; ++zi) {
        const std::int64_t i = zi + plo + t - tab.lo;
        out[static_cast<std::size_t>(zi)] =
            (i >= 0 && i < static_cast<std::int64_t>(dt.size()))
                ? dt[static_cast<std::size_t>(i)]
                : tab.pad;
    }
    return out;
}

NodeEstimates compute_node(EstCtx& c, int level, const SampleNode& v,
                           std::int64_t plo, std::int64_t phi) {
    const TreeParams& p = c.params();
    NodeEstimates out;
    out.level = level;
    out.start = v.start;
    out.lo = plo;
    out.pad = static_cast<double>(p.level_len(level));
    out.values.assign(static_cast<std::size_t>(phi - plo + 1), 0.0);

    if (level == p.h) {
        const Symbol sym = c.gx->at(v.start);
        std::fill(out.values.begin(), out.values.end(), 1.0);
        for (std::int32_t pos : c.occ[sym]) {
            const std::int64_t z = static_cast<std::int64_t>(pos);
            if (z >= plo && z <= phi) out.values[static_cast<std::size_t>(z - plo)] = 0.0;
        }
        return out;
    }

    const std::int64_t child_len = p.level_len(level + 1);
    const auto& next_level = c.tree->levels[static_cast<std::size_t>(level) + 1];

    // Children kept wholesale (full expansion or a forced-full tree) are
    // summed; Bernoulli-picked children go through the reconstruction.
    const bool wholesale =
        v.child_count > 0 &&
        !next_level[static_cast<std::size_t>(v.first_child)].subsampled;
    if (wholesale) {
        if (level + 1 == p.h) {
            // All children are single characters: each contributes its
            // match indicator at the natural offset, so start from the
            // all-mismatch count and clear matches via the occurrence
            // lists of y.
            std::fill(out.values.begin(), out.values.end(),
                      static_cast<double>(v.child_count));
            for (std::int32_t ci = 0; ci < v.child_count; ++ci) {
                const SampleNode& child =
                    next_level[static_cast<std::size_t>(v.first_child + ci)];
                const std::int64_t t = child.start - v.start;
                const Symbol sym = c.gx->at(child.start);
                for (std::int32_t pos : c.occ[sym]) {
                    const std::int64_t z = static_cast<std::int64_t>(pos) - t;
                    if (z >= plo && z <= phi)
                        out.values[static_cast<std::size_t>(z - plo)] -= 1.0;
                }
            }
            return out;
        }
        // Plain sum over all children; children processed one at a time.
        for (std::int32_t ci = 0; ci < v.child_count; ++ci) {
            const SampleNode& child = next_level[static_cast<std::size_t>(v.first_child + ci)];
            const std::int64_t t = child.start - v.start;
            auto delta = child_delta(c, level + 1, child, t, plo, phi);
            for (std::size_t i = 0; i < out.values.size(); ++i)
                out.values[i] += delta[i];
        }
        return out;
    }

    // Subsampled node: reconstruct the (scaled) sum from the surviving
    // children and their precisions. An empty survivor set stays at zero.
    if (v.child_count == 0) return out;

    std::vector<std::vector<double>> deltas;
    std::vector<double> w;
    deltas.reserve(static_cast<std::size_t>(v.child_count));
    for (std::int32_t ci = 0; ci < v.child_count; ++ci) {
        const SampleNode& child = next_level[static_cast<std::size_t>(v.first_child + ci)];
        const std::int64_t t = child.start - v.start;
        deltas.push_back(child_delta(c, level + 1, child, t, plo, phi));
        w.push_back(child.precision);
    }
    const double scale = static_cast<double>(child_len) / v.prob();
    const double inv_len = 1.0 / static_cast<double>(child_len);
    std::vector<double> a_hat(deltas.size());
    for (std::int64_t zi = 0; zi <= phi - plo; ++zi) {
        for (std::size_t j = 0; j < deltas.size(); ++j)
            a_hat[j] = deltas[j][static_cast<std::size_t>(zi)] * inv_len;
        Rng rng(derive_seed(p.seed, stream::kReconstruct,
                            static_cast<std::uint64_t>(level),
                            static_cast<std::uint64_t>(v.start),
                            static_cast<std::uint64_t>(zi + plo + c.n)));
        out.values[static_cast<std::size_t>(zi)] =
            reconstruct_sum(a_hat, w, c.tree->precision_dist, rng) * scale;
    }
    return out;
}

}  // namespace

EstimateReport estimate_tree_distance(const Text& x, const Text& y,
                                      const SampleTree& tree,
                                      const EstimateOptions& opts) {
    const TreeParams& p = tree.params;
    p.validate();
    if (static_cast<std::int64_t>(x.size()) != p.n ||
        static_cast<std::int64_t>(y.size()) != p.n)
        throw std::invalid_argument(
            "estimate_tree_distance: strings must have length n = b^h");

    const auto t0 = std::chrono::steady_clock::now();
    const auto queries = tree.query_positions();
    GuardedText gx(x, queries);

    EstCtx c;
    c.tree = &tree;
    c.gx = &gx;
    c.y = &y;
    c.n = p.n;
    c.restricted = opts.restricted_shifts;
    c.grid = ShiftGrid::make(p.n, p.beta);
    c.probe_reach = opts.restricted_shifts ? c.grid.max_reach : p.n;
    c.occ.resize(std::max(x.alphabet_size, y.alphabet_size));
    for (std::size_t i = 0; i < y.size(); ++i)
        c.occ[y[i]].push_back(static_cast<std::int32_t>(i));

    NodeEstimates root = compute_node(c, 0, tree.levels[0][0], 0, 0);

    EstimateReport rep;
    rep.estimate = root.values[0];
    rep.queries_used = tree.query_count();
    rep.seed = p.seed;
    rep.beta = p.beta;
    rep.b = p.b;
    rep.n = p.n;
    rep.decision =
        rep.estimate > 2.0 * static_cast<double>(p.n) / p.beta ? 1 : 0;
    rep.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

Decision dtep_decide(const Text& x, const Text& y, double beta,
                     TreeParams params) {
    params.beta = beta;
    params.validate();
    SampleTree tree = build_sample_tree(params);
    EstimateReport rep = estimate_tree_distance(x, y, tree);
    return rep.decision == 1 ? Decision::kFar : Decision::kClose;
}

ApproxResult approximate_ed(const Text& x, const Text& y, int b,
                            std::uint64_t seed, double c_p, double zeta) {
    PaddedPair pp = pad_pair(x, y, b);
    ApproxResult res;

    double last_far_beta = 0;
    double beta = 1;
    while (beta * 2 <= static_cast<double>(pp.n)) beta *= 2;
    for (; beta >= 2; beta /= 2) {
        TreeParams params = make_tree_params(
            pp.n, b, beta,
            derive_seed(seed, stream::kBench, static_cast<std::uint64_t>(beta)),
            c_p, zeta);
        SampleTree tree = build_sample_tree(params);
        EstimateReport rep = estimate_tree_distance(pp.x, pp.y, tree);
        res.trail.push_back(rep);
        res.queries += rep.queries_used;
        res.millis += rep.millis;
        if (rep.decision == 1)
            last_far_beta = beta;
        else
            break;
    }
    res.estimate =
        last_far_beta > 0 ? static_cast<double>(pp.n) / last_far_beta : 0.0;
    return res;
}

std::string EstimateReport::serialize() const {
    std::ostringstream ss;
    ss << "estimate=" << estimate << "\n";
    ss << "queries=" << queries_used << "\n";
    ss << "decision="
       << (decision < 0 ? "none" : (decision == 1 ? "far" : "close")) << "\n";
    ss << "beta=" << beta << "\n";
    ss << "b=" << b << "\n";
    ss << "n=" << n << "\n";
    ss << "seed=" << seed << "\n";
    ss << "millis=" << millis << "\n";
    return ss.str();
}

}  // namespace edist
