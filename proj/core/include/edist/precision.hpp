#ifndef EDIST_PRECISION_HPP
#define EDIST_PRECISION_HPP

#include <cstdint>

#include "edist/rng.hpp"

namespace edist {

// Heavy-tailed precision distribution: the max of k i.i.d. copies of the
// truncated reciprocal-square distribution on [1, N^3] (single-copy pdf
// nu/x^2). Logs are base 2 throughout.
struct PrecisionDist {
    double N = 0;             // range parameter, support [1, N^3]
    std::int64_t k = 0;       // number of copies maxed
    double nu = 0;            // (1 - 1/N^3)^{-1}
    double rho = 0;           // additive error bound
    double eps = 0;           // epsilon
    double delta = 0;         // failure probability
    double support_max = 0;   // N^3

    static PrecisionDist make(double rho, double N, double delta, double eps,
                              double zeta = 1.0);

    double t() const { return 3.0 / eps; }

    // Single-copy CDF F1(x) = nu * (1 - 1/x) on [1, N^3].
    double cdf1(double x) const;

    // The lemma's side condition rho > 6n/(eps * N^3) for n items.
    bool rho_floor_ok(double n_items) const;
};

// Exact inverse-CDF draw from the distribution (CDF F1(x)^k).
double sample_precision(const PrecisionDist& dist, Rng& rng);

// Single truncated copy, conditioned to lie in [1, upper]. Used by tests
// and by the literal reconstruction reference.
double sample_precision_single_truncated(const PrecisionDist& dist,
                                         double upper, Rng& rng);

}  // namespace edist

#endif
