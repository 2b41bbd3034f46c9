#include "edist/similarity.hpp"

#include <cmath>

#include "doctest.h"
#include "edist/instances.hpp"

using namespace edist;

namespace {

ExplicitDist point_mass(const Text& t) {
    ExplicitDist d;
    d.support.emplace_back(t, 1.0);
    return d;
}

ExplicitDist uniform_over(std::vector<Text> texts) {
    ExplicitDist d;
    const double p = 1.0 / static_cast<double>(texts.size());
    for (auto& t : texts) d.support.emplace_back(std::move(t), p);
    return d;
}

ExplicitDist two_point(const Text& a, double pa, const Text& b, double pb) {
    ExplicitDist d;
    d.support.emplace_back(a, pa);
    d.support.emplace_back(b, pb);
    return d;
}

}  // namespace

TEST_CASE("projections") {
    Text x({0, 1, 0}, 2);
    auto d = point_mass(x);

    auto empty = projected_pmf(d, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty.begin()->first.empty());
    CHECK(empty.begin()->second == 1.0);

    auto p = projected_pmf(d, {0, 2});
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first == Pattern{0, 0});

    // uniform over all strings projects to uniform over all patterns
    std::vector<Text> all;
    for (int m = 0; m < 8; ++m)
        all.emplace_back(std::vector<Symbol>{static_cast<Symbol>(m & 1),
                                             static_cast<Symbol>((m >> 1) & 1),
                                             static_cast<Symbol>((m >> 2) & 1)},
                         2);
    auto u = uniform_over(all);
    auto up = projected_pmf(u, {1, 2});
    REQUIRE(up.size() == 4);
    for (const auto& [pat, mass] : up) CHECK(mass == doctest::Approx(0.25));

    CHECK_THROWS(projected_pmf(d, {3}));
}

TEST_CASE("projection chains compose") {
    Rng rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        auto d = uniform_over({random_text(5, 2, rng), random_text(5, 2, rng),
                               random_text(5, 2, rng)});
        auto big = projected_pmf(d, {0, 2, 4});
        // project the projected distribution to its middle coordinate
        ExplicitDist mid;
        for (const auto& [pat, mass] : big)
            mid.support.emplace_back(Text(std::vector<Symbol>(pat), 2), mass);
        // merge duplicates to keep validate() happy
        auto direct = projected_pmf(d, {2});
        auto chained = projected_pmf(mid, {1});
        for (const auto& [pat, mass] : direct)
            CHECK(chained[pat] == doctest::Approx(mass));
    }
}

TEST_CASE("pointwise similarity") {
    Text a({0}, 2), b({1}, 2);
    auto pa = projected_pmf(point_mass(a), {0});
    auto pb = projected_pmf(point_mass(b), {0});
    CHECK(similarity_alpha({pa, pa}) == 0.0);
    CHECK(similarity_alpha({pa, pb}) == 1.0);

    // binding outcome is b: 1 - 0.4/0.5 = 0.2 (outcome a only needs 1/6)
    auto d1 = projected_pmf(two_point(a, 0.6, b, 0.4), {0});
    auto d2 = projected_pmf(two_point(a, 0.5, b, 0.5), {0});
    CHECK(similarity_alpha({d1, d2}) == doctest::Approx(0.2));

    // monotone: adding a pmf never decreases alpha
    auto d3 = projected_pmf(two_point(a, 0.7, b, 0.3), {0});
    CHECK(similarity_alpha({d1, d2, d3}) >= similarity_alpha({d1, d2}));
    CHECK_THROWS(similarity_alpha({}));
}

TEST_CASE("uniform similarity basics") {
    Rng rng(2);
    Text base = random_text(6, 2, rng);
    auto d = shift_distribution(base, 3);
    CHECK(uniform_similarity({d, d}) == 0.0);

    Text other = random_text(6, 2, rng);
    const double alpha = uniform_similarity({d, shift_distribution(other, 3)});
    CHECK(alpha >= 0.0);
    CHECK(alpha <= 1.0);

    ExplicitDist too_long = point_mass(random_text(17, 2, rng));
    CHECK_THROWS(uniform_similarity({too_long, too_long}));
}

TEST_CASE("substitution products amplify uniform similarity") {
    // exhaustive check on tiny instances: product similarity is at most
    // the product of the factors (plus enumeration tolerance)
    Rng rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        // mother pair on {0,1}^2
        auto m0 = uniform_over({random_text(2, 2, rng), random_text(2, 2, rng)});
        auto m1 = uniform_over({random_text(2, 2, rng), random_text(2, 2, rng)});
        // block family: one dist per symbol, strings of length 2
        std::vector<ExplicitDist> blocks;
        for (int a = 0; a < 2; ++a)
            blocks.push_back(
                uniform_over({random_text(2, 2, rng), random_text(2, 2, rng)}));

        const double beta = uniform_similarity({m0, m1});
        const double alpha = uniform_similarity({blocks[0], blocks[1]});
        auto p0 = substitution_product_dist(m0, blocks);
        auto p1 = substitution_product_dist(m1, blocks);
        const double prod = uniform_similarity({p0, p1});
        CHECK(prod <= alpha * beta + 1e-9);
    }
}

TEST_CASE("projected masses sum to one") {
    Rng rng(8);
    auto d = uniform_over({random_text(6, 3, rng), random_text(6, 3, rng),
                           random_text(6, 3, rng), random_text(6, 3, rng)});
    for (auto q : std::vector<std::vector<std::int64_t>>{{}, {0}, {1, 4}, {0, 2, 5}}) {
        double total = 0;
        for (const auto& [pat, mass] : projected_pmf(d, q)) total += mass;
        CHECK(total == doctest::Approx(1.0));
    }
}

TEST_CASE("distinguisher: identical distributions are indistinguishable") {
    Rng rng(3);
    Text base = random_text(8, 2, rng);
    auto d = shift_distribution(base, 4);
    Rng exp_rng(5);
    auto res = distinguisher_experiment(d, d, 2, 4000, exp_rng);
    CHECK(res.mu_hat == 0.0);
    CHECK(res.advantage() <= 0.5 + 3.0 * std::sqrt(0.25 / 4000));
}

TEST_CASE("distinguisher: disjoint point masses are fully separable") {
    Text a({0, 0, 0}, 2), b({1, 1, 1}, 2);
    Rng rng(4);
    auto res =
        distinguisher_experiment(point_mass(a), point_mass(b), 3, 500, rng);
    CHECK(res.p0 == 1.0);
    CHECK(res.p1 == 1.0);
    CHECK(res.mu_hat == 1.0);
}

TEST_CASE("distinguisher respects the similarity bound on shift pairs") {
    Rng rng(6);
    Text z0 = random_text(10, 2, rng);
    Text z1 = random_text(10, 2, rng);
    auto d0 = shift_distribution(z0, 5);
    auto d1 = shift_distribution(z1, 5);
    for (int q : {1, 2}) {
        Rng er(derive_seed(50, 0, q));
        auto res = distinguisher_experiment(d0, d1, q, 10000, er);
        const double tol = 3.0 * std::sqrt(0.25 / 10000);
        CHECK(res.advantage() <= res.bound + tol);
    }
}

TEST_CASE("explicit distribution validation") {
    ExplicitDist bad;
    CHECK_THROWS(bad.validate());
    Rng rng(1);
    bad.support.emplace_back(random_text(3, 2, rng), 0.4);
    CHECK_THROWS(bad.validate());  // masses do not sum to 1
    bad.support.emplace_back(random_text(4, 2, rng), 0.6);
    CHECK_THROWS(bad.validate());  // unequal lengths
}
