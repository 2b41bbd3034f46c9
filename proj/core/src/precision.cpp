#include "edist/precision.hpp"

#include <cmath>
#include <stdexcept>

namespace edist {

PrecisionDist PrecisionDist::make(double rho, double N, double delta,
                                  double eps, double zeta) {
    if (rho <= 0 || N < 1 || delta <= 0 || delta >= 1 || eps <= 0 || zeta <= 0)
        throw std::invalid_argument("PrecisionDist: invalid parameters");
    PrecisionDist d;
    d.N = N;
    d.rho = rho;
    d.eps = eps;
    d.delta = delta;
    d.support_max = N * N * N;
    d.nu = 1.0 / (1.0 - 1.0 / d.support_max);
    const double half_eps = eps / 2.0;
    d.k = static_cast<std::int64_t>(std::ceil(
        (2.0 * zeta / rho) * (std::log2(1.0 / delta) / (half_eps * half_eps * half_eps))));
    if (d.k < 1) d.k = 1;
    return d;
}

double PrecisionDist::cdf1(double x) const {
    if (x <= 1.0) return 0.0;
    if (x >= support_max) return 1.0;
    return nu * (1.0 - 1.0 / x);
}

bool PrecisionDist::rho_floor_ok(double n_items) const {
    return rho > 6.0 * n_items / (eps * support_max);
}

double sample_precision(const PrecisionDist& dist, Rng& rng) {
    const double u = rng.uniform();
    if (u <= 0.0) return 1.0;
    // Invert F1(x)^k = u for F1(x) = nu (1 - 1/x):
    //   x = 1 / (1 - u^{1/k} / nu).
    // Computed as (1 - e^a) + e^a / N^3 with a = ln(u)/k to stay accurate
    // when k is large and u^{1/k} is close to 1.
    const double a = std::log(u) / static_cast<double>(dist.k);
    const double denom = -std::expm1(a) + std::exp(a) / dist.support_max;
    double x = 1.0 / denom;
    if (x < 1.0) x = 1.0;
    if (x > dist.support_max) x = dist.support_max;
    return x;
}

double sample_precision_single_truncated(const PrecisionDist& dist,
                                         double upper, Rng& rng) {
    // F1 restricted to [1, upper]: draw u in [0,1), invert u * F1(upper).
    const double cap = dist.cdf1(upper);
    const double u = rng.uniform() * cap;
    const double denom = 1.0 - u / dist.nu;
    double x = 1.0 / denom;
    if (x < 1.0) x = 1.0;
    if (x > upper) x = upper;
    return x;
}

}  // namespace edist
