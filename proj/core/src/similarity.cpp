#include "edist/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edist {

void ExplicitDist::validate() const {
    if (support.empty())
        throw std::invalid_argument("ExplicitDist: empty support");
    const std::size_t len = support.front().first.size();
    double total = 0;
    for (const auto& [text, p] : support) {
        if (text.size() != len)
            throw std::invalid_argument("ExplicitDist: unequal text lengths");
        if (p < 0) throw std::invalid_argument("ExplicitDist: negative mass");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("ExplicitDist: masses do not sum to 1");
}

std::size_t ExplicitDist::text_len() const {
    if (support.empty())
        throw std::invalid_argument("ExplicitDist: empty support");
    return support.front().first.size();
}

ExplicitDist shift_distribution(const Text& base, std::int64_t s) {
    if (s < 1 || s > static_cast<std::int64_t>(base.size()))
        throw std::invalid_argument("shift_distribution: s out of range");
    // Rotations of a periodic string may coincide; merge masses.
    std::map<std::vector<Symbol>, double> acc;
    const double p = 1.0 / static_cast<double>(s);
    for (std::int64_t r = 1; r <= s; ++r) {
        std::vector<Symbol> rot(base.size());
        const std::int64_t n = static_cast<std::int64_t>(base.size());
        for (std::int64_t i = 0; i < n; ++i)
            rot[static_cast<std::size_t>(i)] =
                base.symbols[static_cast<std::size_t>((i + r) % n)];
        acc[rot] += p;
    }
    ExplicitDist d;
    for (auto& [syms, mass] : acc)
        d.support.emplace_back(Text(std::vector<Symbol>(syms), base.alphabet_size),
                               mass);
    return d;
}

ExplicitDist substitution_product_dist(const ExplicitDist& mother,
                                       const std::vector<ExplicitDist>& blocks) {
    mother.validate();
    for (const auto& bd : blocks) bd.validate();

    std::map<std::vector<Symbol>, double> acc;
    Symbol sigma = 0;
    for (const auto& bd : blocks)
        for (const auto& [t, p] : bd.support)
            sigma = std::max(sigma, t.alphabet_size);

    // Depth-first expansion of the per-position block choices.
    for (const auto& [mtext, mp] : mother.support) {
        std::vector<Symbol> prefix;
        std::vector<std::size_t> choice(mtext.size(), 0);
        // iterative odometer over block support indices
        for (;;) {
            std::vector<Symbol> s;
            double p = mp;
            for (std::size_t i = 0; i < mtext.size(); ++i) {
                const Symbol a = mtext[i];
                if (a >= blocks.size())
                    throw std::invalid_argument(
                        "substitution_product_dist: symbol without a block distribution");
                const auto& [bt, bp] = blocks[a].support[choice[i]];
                s.insert(s.end(), bt.symbols.begin(), bt.symbols.end());
                p *= bp;
            }
            if (p > 0) acc[s] += p;
            // advance the odometer
            std::size_t i = 0;
            for (; i < mtext.size(); ++i) {
                if (++choice[i] < blocks[mtext[i]].support.size()) break;
                choice[i] = 0;
            }
            if (i == mtext.size()) break;
        }
    }
    ExplicitDist d;
    for (auto& [syms, mass] : acc)
        d.support.emplace_back(Text(std::vector<Symbol>(syms), sigma), mass);
    return d;
}

Pmf projected_pmf(const ExplicitDist& d, const std::vector<std::int64_t>& q) {
    d.validate();
    const std::int64_t n = static_cast<std::int64_t>(d.text_len());
    for (std::int64_t pos : q)
        if (pos < 0 || pos >= n)
            throw std::invalid_argument("projected_pmf: position out of range");
    Pmf out;
    for (const auto& [text, p] : d.support) {
        Pattern pat;
        pat.reserve(q.size());
        for (std::int64_t pos : q)
            pat.push_back(text[static_cast<std::size_t>(pos)]);
        out[pat] += p;
    }
    return out;
}

double similarity_alpha(const std::vector<Pmf>& pmfs) {
    if (pmfs.empty())
        throw std::invalid_argument("similarity_alpha: empty list");
    std::map<Pattern, std::pair<double, double>> minmax;  // pattern -> (min,max)
    // Seed with every pattern that appears anywhere; absent patterns have
    // mass zero in the other distributions.
    for (const auto& pmf : pmfs)
        for (const auto& [pat, p] : pmf) {
            auto it = minmax.find(pat);
            if (it == minmax.end())
                minmax[pat] = {p, p};
            else {
                it->second.first = std::min(it->second.first, p);
                it->second.second = std::max(it->second.second, p);
            }
        }
    double alpha = 0;
    for (auto& [pat, mm] : minmax) {
        // A pattern missing from some pmf has min 0 there.
        double lo = mm.first, hi = mm.second;
        for (const auto& pmf : pmfs)
            if (pmf.find(pat) == pmf.end()) lo = 0;
        if (hi <= 0) continue;  // 0/0: outside every support, ratio 1
        alpha = std::max(alpha, 1.0 - lo / hi);
    }
    return alpha;
}

double uniform_similarity(const std::vector<ExplicitDist>& dists) {
    if (dists.empty())
        throw std::invalid_argument("uniform_similarity: empty list");
    const std::size_t n = dists.front().text_len();
    for (const auto& d : dists)
        if (d.text_len() != n)
            throw std::invalid_argument("uniform_similarity: length mismatch");
    if (n > 16)
        throw std::invalid_argument(
            "uniform_similarity: refusing n > 16 (2^n subset enumeration)");

    double alpha = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::int64_t> q;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) q.push_back(static_cast<std::int64_t>(i));
        std::vector<Pmf> pmfs;
        pmfs.reserve(dists.size());
        for (const auto& d : dists) pmfs.push_back(projected_pmf(d, q));
        alpha = std::max(alpha,
                         similarity_alpha(pmfs) / static_cast<double>(q.size()));
    }
    return alpha;
}

namespace {

using Obs = std::vector<std::pair<std::int64_t, Symbol>>;  // sorted by position

double consistent_mass(const ExplicitDist& d, const Obs& obs) {
    double total = 0;
    for (const auto& [text, p] : d.support) {
        bool ok = true;
        for (const auto& [pos, sym] : obs)
            if (text[static_cast<std::size_t>(pos)] != sym) {
                ok = false;
                break;
            }
        if (ok) total += p;
    }
    return total;
}

struct TreeBuilder {
    const ExplicitDist* d0;
    const ExplicitDist* d1;
    std::int64_t n;
    Symbol sigma;
    int q;
    std::map<std::pair<Obs, int>, std::pair<double, std::int64_t>> memo;

    // Value = best achievable P0(correct|d0-mass) + P1(correct|d1-mass)
    // over this subtree, unnormalized. Second component: the position to
    // query (-1 at leaves).
    std::pair<double, std::int64_t> value(const Obs& obs, int depth) {
        auto key = std::make_pair(obs, depth);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::pair<double, std::int64_t> best;
        if (depth == q) {
            best = {std::max(consistent_mass(*d0, obs), consistent_mass(*d1, obs)),
                    -1};
        } else {
            best = {-1.0, -1};
            for (std::int64_t pos = 0; pos < n; ++pos) {
                bool seen = false;
                for (const auto& [p, s] : obs)
                    if (p == pos) seen = true;
                if (seen) continue;
                double total = 0;
                for (Symbol s = 0; s < sigma; ++s) {
                    Obs next = obs;
                    next.emplace_back(pos, s);
                    std::sort(next.begin(), next.end());
                    total += value(next, depth + 1).first;
                }
                if (total > best.first) best = {total, pos};
            }
        }
        memo[key] = best;
        return best;
    }

    // Plays the optimal tree against one sampled string; returns the label.
    int play(const Text& sample) {
        Obs obs;
        for (int depth = 0; depth < q; ++depth) {
            auto [val, pos] = value(obs, depth);
            if (pos < 0) break;
            obs.emplace_back(pos, sample[static_cast<std::size_t>(pos)]);
            std::sort(obs.begin(), obs.end());
        }
        return consistent_mass(*d0, obs) >= consistent_mass(*d1, obs) ? 0 : 1;
    }
};

const Text& sample_from(const ExplicitDist& d, Rng& rng) {
    double u = rng.uniform();
    for (const auto& [text, p] : d.support) {
        if (u < p) return text;
        u -= p;
    }
    return d.support.back().first;
}

}  // namespace

DistinguisherResult distinguisher_experiment(const ExplicitDist& d0,
                                             const ExplicitDist& d1, int q,
                                             std::int64_t trials, Rng& rng) {
    d0.validate();
    d1.validate();
    const std::int64_t n = static_cast<std::int64_t>(d0.text_len());
    if (d1.text_len() != d0.text_len())
        throw std::invalid_argument("distinguisher_experiment: length mismatch");
    if (q < 0 || q > n)
        throw std::invalid_argument("distinguisher_experiment: q out of range");
    Symbol sigma = 0;
    for (const auto& [t, p] : d0.support) sigma = std::max(sigma, t.alphabet_size);
    for (const auto& [t, p] : d1.support) sigma = std::max(sigma, t.alphabet_size);
    const double states =
        std::pow(static_cast<double>(sigma), q) * std::pow(static_cast<double>(n), q);
    if (states > 1e7)
        throw std::invalid_argument("distinguisher_experiment: instance too large");

    TreeBuilder tb{&d0, &d1, n, sigma, q, {}};
    DistinguisherResult res;
    res.trials = trials;
    std::int64_t hit0 = 0, hit1 = 0;
    for (std::int64_t i = 0; i < trials; ++i)
        if (tb.play(sample_from(d0, rng)) == 0) ++hit0;
    for (std::int64_t i = 0; i < trials; ++i)
        if (tb.play(sample_from(d1, rng)) == 1) ++hit1;
    res.p0 = static_cast<double>(hit0) / static_cast<double>(trials);
    res.p1 = static_cast<double>(hit1) / static_cast<double>(trials);
    res.mu_hat = uniform_similarity({d0, d1});
    res.bound = (1.0 + res.mu_hat * static_cast<double>(q)) / 2.0;

    const double tol = 3.0 * std::sqrt(0.25 / static_cast<double>(trials));
    if (res.advantage() > res.bound + tol)
        throw std::runtime_error(
            "distinguisher_experiment: advantage exceeds the similarity bound");
    return res;
}

}  // namespace edist
