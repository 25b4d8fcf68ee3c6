#include "rsos/qlaurent.hpp"

#include <doctest.h>

#include <random>

using namespace rsos;

namespace {

LaurentPoly q_pow(std::int64_t quarters, std::int64_t c = 1) {
    return LaurentPoly::monomial(QExp{quarters}, c);
}

// Test-only oracle for the Gaussian polynomial: expand the defining
// product/quotient with exact long division (the quotient is known to be a
// polynomial, so the division terminates with remainder zero).
LaurentPoly falling_product(int n) {
    LaurentPoly p = LaurentPoly::one();
    for (int i = 1; i <= n; ++i)
        p = p * (LaurentPoly::one() - q_pow(4 * i));
    return p;
}

LaurentPoly exact_divide(LaurentPoly num, const LaurentPoly& den) {
    REQUIRE(!den.is_zero());
    LaurentPoly quot;
    auto lead = [](const LaurentPoly& p) { return *p.terms().rbegin(); };
    auto [de, dc] = lead(den);
    while (!num.is_zero()) {
        auto [ne, nc] = lead(num);
        REQUIRE(nc % dc == 0);
        LaurentPoly t = LaurentPoly::monomial(ne - de, nc / dc);
        quot += t;
        num -= t * den;
    }
    return quot;
}

LaurentPoly gaussian_oracle(int A, int B) {
    if (B < 0 || B > A) return LaurentPoly();
    return exact_divide(falling_product(A), falling_product(B) * falling_product(A - B));
}

}  // namespace

TEST_SUITE("qlaurent") {

TEST_CASE("ring operations") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = q_pow(4);
    CHECK((one + q) * (one - q) == one - q_pow(8));
    LaurentPoly p = q_pow(-4, 3) + q_pow(2, 5);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(q_pow(1) * q_pow(1) == q_pow(2));  // q^{1/4} q^{1/4} = q^{1/2}
    CHECK((p - p).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> nterms(0, 5), expo(-8, 8), coef(-4, 4);
    auto rand_poly = [&]() {
        LaurentPoly p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) p.add_term(QExp{expo(rng)}, coef(rng));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("shift") {
    LaurentPoly p = LaurentPoly::one() + q_pow(4);
    CHECK(shift(p, QExp::from_int(-1)) == q_pow(-4) + LaurentPoly::one());
    CHECK(shift(p, QExp{0}) == p);
    CHECK(shift(q_pow(8), QExp{2}) == q_pow(10));  // q^2 -> q^{5/2}
}

TEST_CASE("invert_q") {
    LaurentPoly p = LaurentPoly::one() + q_pow(4) + q_pow(12);
    CHECK(invert_q(p) == LaurentPoly::one() + q_pow(-4) + q_pow(-12));
    CHECK(invert_q(invert_q(p)) == p);
    // [A,B]_{1/q} = q^{-B(A-B)} [A,B]_q
    const LaurentPoly& g = gaussian_binomial(4, 2);
    CHECK(shift(invert_q(g), QExp::from_int(2 * (4 - 2))) == g);
}

TEST_CASE("gaussian binomial values") {
    LaurentPoly want =
        LaurentPoly::one() + q_pow(4) + q_pow(8, 2) + q_pow(12) + q_pow(16);
    CHECK(gaussian_binomial(4, 2) == want);
    CHECK(gaussian_binomial(4, 2) == gaussian_oracle(4, 2));
    CHECK(gaussian_binomial(7, 0) == LaurentPoly::one());
    CHECK(gaussian_binomial(3, 5).is_zero());
    CHECK(gaussian_binomial(-1, 0).is_zero());
    for (int A = 0; A <= 9; ++A)
        for (int B = 0; B <= A; ++B) CHECK(gaussian_binomial(A, B) == gaussian_oracle(A, B));
}

TEST_CASE("gaussian binomial invariants") {
    for (int A = 0; A <= 20; ++A)
        for (int B = 0; B <= A; ++B)
            CHECK(gaussian_binomial(A, B) == gaussian_binomial(A, A - B));
    for (int A = 1; A <= 20; ++A)
        for (int B = 1; B < A; ++B)
            CHECK(gaussian_binomial(A, B) ==
                  gaussian_binomial(A - 1, B - 1) +
                      shift(gaussian_binomial(A - 1, B), QExp::from_int(B)));
    for (int A = 0; A <= 15; ++A)
        for (int B = 0; B <= A; ++B)
            CHECK(invert_q(gaussian_binomial(A, B)) ==
                  shift(gaussian_binomial(A, B), QExp::from_int(-B * (A - B))));
}

TEST_CASE("evaluate_at_one") {
    CHECK(evaluate_at_one(gaussian_binomial(4, 2)) == 6);
    CHECK(evaluate_at_one(LaurentPoly::zero()) == 0);
    // binomial oracle
    for (int A = 0; A <= 12; ++A) {
        BigInt binom = 1;
        for (int B = 0; B <= A; ++B) {
            CHECK(evaluate_at_one(gaussian_binomial(A, B)) == binom);
            binom = binom * (A - B) / (B + 1);
        }
    }
}

TEST_CASE("coefficients stay exact at depth") {
    // central coefficients of [40, 20] overflow 64 bits at q = 1
    BigInt total = evaluate_at_one(gaussian_binomial(40, 20));
    CHECK(total == BigInt("137846528820"));
    BigInt big = evaluate_at_one(gaussian_binomial(80, 40));
    CHECK(big > BigInt("100000000000000000000"));
}

TEST_CASE("json serialization") {
    CHECK(to_json(LaurentPoly::zero()) == "[]");
    CHECK(to_json(q_pow(4)) == "[[4,\"1\"]]");
    LaurentPoly p = q_pow(-2, 7) + q_pow(0, -3) + q_pow(5, 11);
    CHECK(to_json(p) == "[[-2,\"7\"],[0,\"-3\"],[5,\"11\"]]");
}

}  // TEST_SUITE
