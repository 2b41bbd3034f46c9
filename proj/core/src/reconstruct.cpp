#include "edist/reconstruct.hpp"

#include <random>
#include <stdexcept>

namespace edist {

double reconstruct_sum(std::span<const double> a_hat,
                       std::span<const double> w, const PrecisionDist& dist,
                       Rng& rng) {
    if (a_hat.size() != w.size())
        throw std::invalid_argument("reconstruct_sum: length mismatch");
    const double t = dist.t();
    double fired = 0;  // total count / k
    const double inv_k = 1.0 / static_cast<double>(dist.k);
    for (std::size_t i = 0; i < a_hat.size(); ++i) {
        const double wi = w[i];
        if (!(wi >= 1.0) || wi > dist.support_max * (1.0 + 1e-9))
            throw std::invalid_argument("reconstruct_sum: precision out of support");
        const double ai = a_hat[i];
        if (!(ai > 0)) continue;
        const double theta = t / ai;
        if (theta > wi) continue;  // even the max copy misses the threshold
        std::int64_t count;
        if (theta <= 1.0) {
            count = dist.k;  // every copy is >= 1 >= theta
        } else {
            count = 1;  // the max itself
            if (dist.k > 1) {
                const double fw = dist.cdf1(wi);
                double q = fw > 0 ? (fw - dist.cdf1(theta)) / fw : 0.0;
                if (q < 0) q = 0;
                if (q > 1) q = 1;
                if (q > 0) {
                    std::binomial_distribution<std::int64_t> bin(dist.k - 1, q);
                    count += bin(rng);
                }
            }
        }
        fired += static_cast<double>(count) * inv_k;
    }
    return fired * t / dist.nu;
}

}  // namespace edist
