#include "edist/hard.hpp"

#include <cmath>

#include "doctest.h"
#include "edist/exact.hpp"
#include "edist/instances.hpp"

using namespace edist;

namespace {
Text T(const char* s) { return text_from_string(s); }
SubstitutionMap two_images(const char* a, const char* b) {
    SubstitutionMap m;
    m.images = {T(a), T(b)};
    return m;
}
}  // namespace

TEST_CASE("cyclic shift basics") {
    Text x = T("abc");
    CHECK(cyclic_shift(x, 0) == x);
    CHECK(cyclic_shift(x, 1) == T("bca"));
    CHECK(cyclic_shift(x, 3) == x);
    CHECK(cyclic_shift(x, 4) == T("bca"));
    CHECK(cyclic_shift(x, -1) == T("cab"));
    CHECK_THROWS(cyclic_shift(Text(), 1));
}

TEST_CASE("random rotation draws") {
    Rng rng(1);
    Text x = T("abcdef");
    // s = 1 is always the single left rotation
    for (int i = 0; i < 10; ++i)
        CHECK(sample_shift_dist(x, 1, rng) == cyclic_shift(x, 1));
    CHECK_THROWS(sample_shift_dist(x, 0, rng));
    CHECK_THROWS(sample_shift_dist(x, 7, rng));

    // any two draws are within 2s edits
    const std::int64_t s = 3;
    for (int i = 0; i < 50; ++i) {
        Text a = sample_shift_dist(x, s, rng);
        Text b = sample_shift_dist(x, s, rng);
        CHECK(ed(a, b) <= 2 * s);
    }
}

TEST_CASE("rotation frequencies are uniform") {
    Rng rng(2);
    Rng base_rng(3);
    Text x = random_text(64, 4, base_rng);
    const std::int64_t s = 5;
    std::vector<int> counts(static_cast<std::size_t>(s), 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        Text a = sample_shift_dist(x, s, rng);
        for (std::int64_t r = 1; r <= s; ++r)
            if (a == cyclic_shift(x, r)) {
                ++counts[static_cast<std::size_t>(r - 1)];
                break;
            }
    }
    // chi-square against uniform; 4 dof, generous threshold
    double chi = 0;
    const double expect = static_cast<double>(draws) / s;
    for (int c : counts) chi += (c - expect) * (c - expect) / expect;
    CHECK(chi < 25.0);
}

TEST_CASE("shift closeness in both arguments") {
    Rng rng(9);
    Text x = random_text(128, 8, rng);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t r1 = static_cast<std::int64_t>(rng.below(20));
        const std::int64_t r2 = static_cast<std::int64_t>(rng.below(20));
        CHECK(ed(cyclic_shift(x, r1), cyclic_shift(x, r2)) <=
              2 * std::llabs(r1 - r2));
    }
}

TEST_CASE("substitution product basics") {
    auto m = two_images("01", "10");
    Text x({0, 1}, 2);
    CHECK(substitution_product(x, m) == T("0110"));

    SubstitutionMap ident;
    ident.images = {Text({0}, 3), Text({1}, 3), Text({2}, 3)};
    Text y({2, 0, 1}, 3);
    CHECK(substitution_product(y, ident) == y);

    Rng rng(4);
    Text z = random_text(37, 2, rng);
    CHECK(substitution_product(z, m).size() == 37 * 2);

    SubstitutionMap missing;
    missing.images = {T("01")};
    CHECK_THROWS(substitution_product(Text({0, 1}, 2), missing));
}

TEST_CASE("image overlap") {
    CHECK(image_overlap(two_images("01", "10")) == 0.5);
    CHECK(image_overlap(two_images("0101", "0101")) == 1.0);
    CHECK(image_overlap(two_images("aa", "bb")) == 0.0);
    SubstitutionMap one;
    one.images = {T("x")};
    CHECK_THROWS(image_overlap(one));
}

TEST_CASE("substitution product distance bounds") {
    Rng rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        const Symbol sigma = iter % 2 == 0 ? 4 : 8;
        const std::int64_t n = 16, np = 16;
        Text x = random_text(n, sigma, rng);
        Text y = random_text(n, sigma, rng);
        SubstitutionMap m;
        for (Symbol a = 0; a < sigma; ++a)
            m.images.push_back(random_text(np, sigma, rng));
        Text px = substitution_product(x, m);
        Text py = substitution_product(y, m);
        const std::int64_t base = edd(x, y);
        const std::int64_t prod = edd(px, py);
        const double lam = image_overlap(m);
        CHECK(prod <= np * base);
        CHECK(static_cast<double>(prod) >=
              static_cast<double>(np * base) -
                  8.0 * static_cast<double>(n) * static_cast<double>(np) *
                      std::sqrt(lam));
    }
}

TEST_CASE("random strings over a large alphabet rarely share long subsequences") {
    Rng rng(6);
    const std::int64_t n = 512;
    for (Symbol sigma : {16u, 64u}) {
        int bad = 0;
        const int samples = 40;
        for (int i = 0; i < samples; ++i) {
            Text x = random_text(n, sigma, rng);
            Text y = random_text(n, sigma, rng);
            const double threshold = 5.0 * n / std::sqrt(static_cast<double>(sigma));
            if (static_cast<double>(lcs(x, y)) >= threshold) ++bad;
        }
        CHECK(bad == 0);  // empirical rate below 1%
    }
}

TEST_CASE("binary code mapping") {
    Rng rng(8);
    SubstitutionMap code;
    code.images = {Text({0}, 2), Text({1}, 2)};
    Text x({0, 1, 1}, 2);
    CHECK(to_binary(x, code) == Text({0, 1, 1}, 2));

    auto c32 = random_binary_code(8, 32, rng);
    CHECK(c32.images.size() == 8);
    CHECK(c32.image_len() == 32);
    Text y = random_text(10, 8, rng);
    CHECK(to_binary(y, c32).size() == 320);

    SubstitutionMap not_binary;
    not_binary.images = {T("ab"), T("cd")};
    CHECK_THROWS(to_binary(Text({0, 1}, 2), not_binary));
}

TEST_CASE("random binary codes usually have low pairwise overlap") {
    // property (i) of the binary reduction: pairwise lcs <= 15/16 * T
    int good_seeds = 0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(derive_seed(1000, 0, s));
        auto code = random_binary_code(8, 32, rng);
        bool all_ok = true;
        for (std::size_t a = 0; a < code.images.size(); ++a)
            for (std::size_t b = a + 1; b < code.images.size(); ++b)
                if (lcs(code.images[a], code.images[b]) > 30)  // 15/16 * 32
                    all_ok = false;
        if (all_ok) ++good_seeds;
    }
    CHECK(good_seeds >= 19);  // >= 95% of seeds
}

TEST_CASE("hard pair generator determinism and closeness") {
    HardInstanceParams p;
    p.sigma = 4;
    p.block_len = 16;
    p.shift_mag = 2;
    p.levels = 2;
    p.bin_len = 0;
    p.seed = 77;

    Rng r1(5), r2(5);
    auto a = gen_hard_pair(p, HardPairKind::kSame, r1);
    auto b = gen_hard_pair(p, HardPairKind::kSame, r2);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
    CHECK(a.first.size() == 256);

    // same-family closeness: each draw is within levels*2s/B of the center,
    // so a pair is within twice that
    const double rel_bound =
        2.0 * p.levels * 2.0 * static_cast<double>(p.shift_mag) /
        static_cast<double>(p.block_len);
    Rng r3(6);
    for (int i = 0; i < 5; ++i) {
        auto pair = gen_hard_pair(p, HardPairKind::kSame, r3);
        const double rel = static_cast<double>(edd_banded_certified(
                               pair.first, pair.second)) /
                           static_cast<double>(pair.first.size());
        CHECK(rel <= rel_bound);
    }
}

TEST_CASE("cross pairs are farther than same pairs") {
    HardInstanceParams p;
    p.sigma = 8;
    p.block_len = 32;
    p.shift_mag = 2;
    p.levels = 2;
    p.bin_len = 0;
    p.seed = 3;

    Rng rng(10);
    double same = 0, cross = 0;
    const int reps = 5;
    for (int i = 0; i < reps; ++i) {
        auto sp = gen_hard_pair(p, HardPairKind::kSame, rng);
        auto cp = gen_hard_pair(p, HardPairKind::kCross, rng);
        same += static_cast<double>(edd_banded_certified(sp.first, sp.second));
        cross += static_cast<double>(edd_banded_certified(cp.first, cp.second));
    }
    CHECK(cross > same);
}

TEST_CASE("text digest distinguishes texts") {
    Text a = T("hello");
    Text b = T("hellp");
    CHECK(text_digest(a) == text_digest(a));
    CHECK(text_digest(a) != text_digest(b));
}
