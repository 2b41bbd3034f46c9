#ifndef EDIST_SIMILARITY_HPP
#define EDIST_SIMILARITY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "edist/rng.hpp"
#include "edist/text.hpp"

namespace edist {

// A support-enumerated distribution over strings of one common length.
// This is a verification lab, not a scalable engine: everything below is
// exact enumeration.
struct ExplicitDist {
    std::vector<std::pair<Text, double>> support;

    void validate() const;  // probs >= 0, sum to 1 within 1e-12, equal lengths
    std::size_t text_len() const;
};

// The uniform distribution over the s left-rotations of a base string.
ExplicitDist shift_distribution(const Text& base, std::int64_t s);

// Independent per-position substitution of a mother distribution by a
// family of block distributions (one per mother symbol). Exact: duplicate
// outcome strings have their masses merged.
ExplicitDist substitution_product_dist(const ExplicitDist& mother,
                                       const std::vector<ExplicitDist>& blocks);

using Pattern = std::vector<Symbol>;
using Pmf = std::map<Pattern, double>;

// Exact marginal of the distribution on the given positions.
Pmf projected_pmf(const ExplicitDist& d, const std::vector<std::int64_t>& q);

// Least alpha >= 0 with (1-alpha) * max_i p_i(w) <= min_i p_i(w) for all w.
// Outcomes with zero mass everywhere are ignored (0/0 counts as ratio 1).
double similarity_alpha(const std::vector<Pmf>& pmfs);

// Least alpha such that every projection to a nonempty position set Q is
// (alpha*|Q|)-similar, i.e. max over Q of similarity_alpha(Q)/|Q|. Refuses
// instances with length > 16 (exhaustive subset enumeration).
double uniform_similarity(const std::vector<ExplicitDist>& dists);

struct DistinguisherResult {
    double p0 = 0;       // Pr[output 0 | first distribution], sampled
    double p1 = 0;       // Pr[output 1 | second distribution], sampled
    double mu_hat = 0;   // measured uniform similarity of the pair
    double bound = 0;    // (1 + mu_hat * q) / 2
    std::int64_t trials = 0;

    double advantage() const { return std::min(p0, p1); }
};

// Builds the best adaptive q-query decision tree (exhaustive recursion,
// exact), then plays it against `trials` samples from each distribution.
// Throws if min(p0, p1) exceeds the similarity bound by more than three
// standard errors.
DistinguisherResult distinguisher_experiment(const ExplicitDist& d0,
                                             const ExplicitDist& d1, int q,
                                             std::int64_t trials, Rng& rng);

}  // namespace edist

#endif
