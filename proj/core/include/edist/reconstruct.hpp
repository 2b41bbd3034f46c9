#ifndef EDIST_RECONSTRUCT_HPP
#define EDIST_RECONSTRUCT_HPP

#include <span>

#include "edist/precision.hpp"

namespace edist {

// Recovers sum(a_i) from per-item estimates a_hat[i] that are only accurate
// to additive error 1/w[i], where the w[i] were drawn i.i.d. from `dist`.
//
// Per item, the k copies whose max produced w[i] are revisited: a copy
// fires when a_hat[i] >= t/copy for t = 3/eps, and the output is
// (fired / k) * t / nu. The copies below the max are i.i.d. truncated to
// [1, w[i]], so the fired count is 1{w[i] clears the threshold} plus a
// Binomial(k-1, q) draw with q the truncated tail mass; sampling the count
// directly is distributed identically to regenerating the copies one by
// one and is the only tractable option when k is large.
//
// Contract: with probability 1-delta the output is a (rho, f*e^eps)-
// approximator of sum(a_i) whenever each a_hat[i] is a (1/w[i], f)-
// approximator of a_i in [0,1].
double reconstruct_sum(std::span<const double> a_hat,
                       std::span<const double> w, const PrecisionDist& dist,
                       Rng& rng);

}  // namespace edist

#endif
