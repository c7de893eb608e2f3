#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "z2z2u/errors.hpp"

using namespace testing;

TEST_CASE("construction and degree") {
    CHECK(BinPoly().is_zero());
    CHECK(BinPoly().degree() == BinPoly::kZeroDegree);
    CHECK(BinPoly::one().degree() == 0);
    CHECK(BinPoly::monomial(70).degree() == 70);
    CHECK(BinPoly::xn_minus_1(14) == P({0, 14}));
    CHECK(P({0, 1, 3}).exponents() == std::vector<int>{0, 1, 3});
    CHECK(P({0, 1, 3}).weight() == 3);
    BinPoly p = P({5, 64, 130});
    p.set_coeff(130, false);
    CHECK(p.degree() == 64);
    CHECK(P({0, 3}).shifted(2) == P({2, 5}));
    CHECK(P({0, 3, 9}).truncated(4) == P({0, 3}));
    CHECK(P({0, 3, 9}).shifted_down(3) == P({0, 6}));
}

TEST_CASE("characteristic two") {
    for (int t = 0; t < 200; ++t) {
        const BinPoly p = random_poly(150);
        CHECK((p + p).is_zero());
    }
}

TEST_CASE("mul_mod") {
    CHECK(mul_mod(P({0, 1}), P({0, 1}), 2).is_zero());
    const BinPoly p = P({0, 2, 9});
    CHECK(mul_mod(p, BinPoly::one(), 5) == reduce_mod_xn1(p, 5));
    CHECK(mul_mod(P({0, 1, 3}), P({0, 1, 2, 4}), 7).is_zero());
    CHECK_THROWS_AS(mul_mod(p, p, 0), std::domain_error);
    for (int t = 0; t < 300; ++t) {
        const int n = uniform(1, 90);
        const BinPoly a = random_poly(120), b = random_poly(120), c = random_poly(120);
        CHECK(mul_mod(a, b, n) == mul_mod(b, a, n));
        CHECK(mul_mod(a, b + c, n) == mul_mod(a, b, n) + mul_mod(a, c, n));
        CHECK(mul_mod(a, b, n) == reduce_mod_xn1(a * b, n));
    }
}

TEST_CASE("x_pow_mod") {
    CHECK(x_pow_mod(0, 7) == BinPoly::one());
    CHECK(x_pow_mod(9, 7) == P({2}));
    CHECK(x_pow_mod(-1, 7) == P({6}));
    CHECK(x_pow_mod(-15, 7) == P({6}));
}

TEST_CASE("divrem") {
    const DivRem a = divrem(P({0, 2}), P({0, 1}));
    CHECK(a.quot == P({0, 1}));
    CHECK(a.rem.is_zero());
    const BinPoly p = P({1, 4, 77});
    CHECK(divrem(p, BinPoly::one()).quot == p);
    CHECK(divrem(p, BinPoly::one()).rem.is_zero());
    const DivRem hf = divrem(BinPoly::xn_minus_1(14), P({0, 1, 3, 7, 8, 10}));
    CHECK(hf.quot == P({0, 1, 2, 4}));
    CHECK(hf.rem.is_zero());
    CHECK_THROWS_AS(divrem(p, BinPoly()), std::domain_error);
    CHECK_THROWS_AS(exact_div(p, P({0, 1})), std::domain_error);
    for (int t = 0; t < 1000; ++t) {
        const BinPoly x = random_poly(140);
        BinPoly y = random_poly(70);
        if (y.is_zero()) y = BinPoly::one();
        const DivRem r = divrem(x, y);
        CHECK(r.quot * y + r.rem == x);
        CHECK(r.rem.degree() < y.degree());
    }
}

TEST_CASE("gcd and Bezout certificates") {
    const Bezout e = egcd(P({0, 3, 5, 6}), P({0, 1, 3, 7, 8, 10}));
    CHECK(e.gcd == P({0, 2, 3, 4}));
    CHECK(e.s * P({0, 3, 5, 6}) + e.t * P({0, 1, 3, 7, 8, 10}) == e.gcd);
    const BinPoly p = P({0, 4, 9});
    const Bezout z = egcd(p, BinPoly());
    CHECK(z.gcd == p);
    CHECK(z.s == BinPoly::one());
    CHECK(z.t.is_zero());
    CHECK_THROWS_AS(egcd(BinPoly(), BinPoly()), std::domain_error);
    for (int t = 0; t < 1000; ++t) {
        const BinPoly a = random_poly(64), b = random_poly(64);
        if (a.is_zero() && b.is_zero()) continue;
        const Bezout r = egcd(a, b);
        CHECK(r.s * a + r.t * b == r.gcd);
        CHECK(divides(r.gcd, a));
        CHECK(divides(r.gcd, b));
        CHECK(gcd(a, b) == r.gcd);
    }
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(BinPoly::one()) == BinPoly::one());
    CHECK(reciprocal(P({0, 1, 3})) == P({0, 2, 3}));
    CHECK(reciprocal(BinPoly()).is_zero());
    CHECK(reciprocal(P({2, 5})) == P({0, 3}));
    for (int t = 0; t < 1000; ++t) {
        BinPoly p = random_poly(100);
        p.set_coeff(0, true);
        CHECK(reciprocal(reciprocal(p)) == p);
        CHECK(reciprocal(p).degree() == p.degree());
    }
}

namespace {

/// x^(n-1) p(1/x) straight from the definition: coefficient k moves to n-1-k.
BinPoly tilde_by_definition(const BinPoly& p, int n) {
    BinPoly out;
    for (int k : p.exponents()) out.set_coeff(n - 1 - k, true);
    return out;
}

}  // namespace

TEST_CASE("tilde") {
    CHECK(tilde(BinPoly::one(), 6) == P({5}));
    CHECK(tilde(P({5}), 6) == BinPoly::one());
    CHECK(tilde(P({0, 1, 3}), 7) == P({3, 5, 6}));
    CHECK(tilde(BinPoly(), 4).is_zero());
    CHECK_THROWS_AS(tilde(P({4}), 4), std::domain_error);
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const BinPoly p = BinPoly::from_word(bits);
            CHECK(tilde(p, n) == tilde_by_definition(p, n));
            CHECK(tilde(tilde(p, n), n) == p);
        }
    }
    for (int t = 0; t < 500; ++t) {
        const int n = uniform(9, 32);
        const BinPoly p = random_poly(n - 1);
        CHECK(tilde(p, n) == tilde_by_definition(p, n));
    }
}

TEST_CASE("exponent text round trip") {
    CHECK(to_exponent_string(P({0, 1, 3, 7, 8, 10})) == "0,1,3,7,8,10");
    CHECK(to_exponent_string(BinPoly()) == "-");
    CHECK(parse_exponent_string("-").is_zero());
    CHECK(parse_exponent_string(" 0, 4 ,6") == P({0, 4, 6}));
    for (int t = 0; t < 200; ++t) {
        const BinPoly p = random_poly(90);
        CHECK(parse_exponent_string(to_exponent_string(p)) == p);
    }
    CHECK(to_pretty_string(P({0, 1, 3})) == "1 + x + x^3");
    CHECK(to_pretty_string(BinPoly()) == "0");
}

TEST_CASE("malformed exponent text names the field") {
    for (const char* bad : {"0,,3", "3,1", "1,1", "x", "", "0,-2", "0,3,"}) {
        CAPTURE(bad);
        try {
            parse_exponent_string(bad, "f");
            FAIL("no exception");
        } catch (const ParseError& e) {
            CHECK(e.field() == "f");
        }
    }
}
