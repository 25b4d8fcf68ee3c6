#include "rsos/striking.hpp"

#include <doctest.h>

#include <random>

using namespace rsos;

namespace {

Path fig1() {
    Path h;
    h.p_prime = 6;
    h.heights = {3, 4, 5, 4, 5, 4, 3, 2, 3, 2, 1, 2};
    return h;
}

using W = std::vector<std::int64_t>;

}  // namespace

TEST_SUITE("striking") {

TEST_CASE("the four augmentations of the worked path") {
    Path h = fig1();
    CHECK(striking_of(h, 0, 0).w == W{0, 2, 1, 1, 3, 1, 2, 1});
    CHECK(striking_of(h, 1, 0).w == W{2, 1, 1, 3, 1, 2, 1});
    CHECK(striking_of(h, 0, 1).w == W{0, 2, 1, 1, 3, 1, 2, 1, 0});
    CHECK(striking_of(h, 1, 1).w == W{2, 1, 1, 3, 1, 2, 1, 0});
    CHECK(striking_of(h, 0, 0).m_value() == 5);
    CHECK(striking_of(h, 1, 0).m_value() == 6);
    CHECK(striking_of(h, 0, 1).m_value() == 4);
    CHECK(striking_of(h, 1, 1).m_value() == 5);
}

TEST_CASE("weights from run data") {
    Path h = fig1();
    CHECK(striking_of(h, 0, 0).weight() == 14);  // terms 0,2,1,3,4,4
    CHECK(striking_of(h, 1, 0).weight() == 14);
    CHECK(striking_of(h, 0, 1).weight() == 20);
    CHECK(striking_of(h, 1, 1).weight() == 20);
    // the weight with f = 1 matches the path weighted with c = b-1 = 1
    Path hc = h;
    hc.c = 1;
    CHECK(weight_alt(hc) == 20);

    StrikingSequence seed;
    seed.w = {0, 0};
    seed.e = seed.f = 0;
    seed.start_height = 2;
    seed.p_prime = 4;
    CHECK(seed.weight() == 0);
    CHECK(seed.m_value() == 0);
}

TEST_CASE("degenerate length-0 encodings") {
    Path empty{5, {3}, std::nullopt};
    for (int e : {0, 1}) {
        CHECK(striking_of(empty, e, e).w == W{0, 0});
        CHECK(striking_of(empty, e, 1 - e).w == W{0});
        CHECK(striking_of(empty, e, e).m_value() == 0);
        CHECK(striking_of(empty, e, 1 - e).m_value() == 1);
    }
}

TEST_CASE("path_of inverts striking_of") {
    StrikingSequence s;
    s.w = {0, 2, 1, 1, 3, 1, 2, 1};
    s.e = s.f = 0;
    s.start_height = 3;
    s.p_prime = 6;
    CHECK(path_of(s).heights == fig1().heights);

    StrikingSequence seed;
    seed.w = {0, 0};
    seed.e = seed.f = 0;
    seed.start_height = 4;
    seed.p_prime = 6;
    CHECK(path_of(seed).heights == std::vector<int>{4});

    // round-trip on random paths
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        int pp = 3 + static_cast<int>(rng() % 5);
        Path h;
        h.p_prime = pp;
        h.heights.push_back(1 + static_cast<int>(rng() % (pp - 1)));
        int L = static_cast<int>(rng() % 14);
        for (int i = 0; i < L; ++i) {
            int cur = h.heights.back();
            int nh = cur + (rng() % 2 ? 1 : -1);
            if (nh < 1 || nh > pp - 1) nh = 2 * cur - nh;
            h.heights.push_back(nh);
        }
        int e = rng() % 2, f = rng() % 2;
        StrikingSequence s2 = striking_of(h, e, f);
        CHECK(path_of(s2).heights == h.heights);
        CHECK(s2.length() == h.length());
        CHECK((s2.m_value() - h.length() - e - f) % 2 == 0);
    }
}

TEST_CASE("validation") {
    StrikingSequence bad;
    bad.w = {1, 0, 1};  // interior zero
    bad.e = 0;
    bad.f = 1;
    bad.start_height = 2;
    bad.p_prime = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    StrikingSequence parity;
    parity.w = {1, 1};  // l = 2 but e+f odd
    parity.e = 0;
    parity.f = 1;
    parity.start_height = 2;
    parity.p_prime = 4;
    CHECK_THROWS_AS(parity.validate(), std::invalid_argument);

    StrikingSequence range;
    range.w = {0, 3};  // climbs to height 5 in p' = 4
    range.e = 0;
    range.f = 0;
    range.start_height = 2;
    range.p_prime = 4;
    CHECK_THROWS_AS(range.validate(), std::invalid_argument);
}

TEST_CASE("corner switches on exhaustive families (L >= 1)") {
    for (int pp : {3, 4, 5}) {
        for (int a = 1; a < pp; ++a) {
            for (int b = 1; b < pp; ++b) {
                for (int L = (a - b) % 2 == 0 ? 2 : 1; L <= 7; L += 2) {
                    enumerate({pp, a, b, std::nullopt, L}, [&](const Path& h) {
                        auto m = [&](int e, int f) { return striking_of(h, e, f).m_value(); };
                        auto wt = [&](int e, int f) { return striking_of(h, e, f).weight(); };
                        for (int f : {0, 1}) {
                            if (a == 1) CHECK(m(1, f) == m(0, f) + 1);
                            if (a == pp - 1) CHECK(m(1, f) == m(0, f) - 1);
                            CHECK(wt(0, f) == wt(1, f));
                        }
                        for (int e : {0, 1}) {
                            if (b == 1) {
                                CHECK(m(e, 1) == m(e, 0) + 1);
                                CHECK(2 * (wt(e, 0) - wt(e, 1)) == L - a + 1);
                            }
                            if (b == pp - 1) {
                                CHECK(m(e, 1) == m(e, 0) - 1);
                                CHECK(2 * (wt(e, 0) - wt(e, 1)) == -(L - pp + a + 1));
                            }
                        }
                    });
                }
            }
        }
    }
}

}  // TEST_SUITE
