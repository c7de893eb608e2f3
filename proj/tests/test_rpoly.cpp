#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "z2z2u/dual.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/rpoly.hpp"

using namespace testing;

namespace {

const RElem kAll[4] = {RElem::zero(), RElem::one(), RElem::u(), RElem::one_plus_u()};

/// Coefficient-by-coefficient product in R[x], then index reduction mod beta.
RPoly schoolbook(const RPoly& p, const RPoly& q, int beta) {
    const int dp = std::max(p.b.degree(), p.c.degree());
    const int dq = std::max(q.b.degree(), q.c.degree());
    std::vector<RElem> acc(static_cast<std::size_t>(beta));
    for (int i = 0; i <= dp; ++i)
        for (int j = 0; j <= dq; ++j) acc[static_cast<std::size_t>((i + j) % beta)] += p.coeff(i) * q.coeff(j);
    RPoly out;
    for (int k = 0; k < beta; ++k) {
        if (acc[k].r) out.b.set_coeff(k, true);
        if (acc[k].q) out.c.set_coeff(k, true);
    }
    return out;
}

}  // namespace

TEST_CASE("ring axioms on R, exhaustive") {
    for (RElem a : kAll) {
        CHECK(a + a == RElem::zero());
        CHECK(a * RElem::one() == a);
        for (RElem b : kAll) {
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            for (RElem c : kAll) {
                CHECK((a * b) * c == a * (b * c));
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
    CHECK(RElem::u() * RElem::u() == RElem::zero());
    CHECK(RElem::one_plus_u() * RElem::one_plus_u() == RElem::one());
    int units = 0;
    for (RElem a : kAll) {
        bool invertible = false;
        for (RElem b : kAll) invertible = invertible || a * b == RElem::one();
        CHECK(invertible == a.is_unit());
        units += invertible;
    }
    CHECK(units == 2);
    CHECK(lee_weight(RElem::u()) == 2);
    CHECK(lee_weight(RElem::one_plus_u()) == 1);
    CHECK(to_string(RElem::one_plus_u()) == "1+u");
}

TEST_CASE("rpoly_mul_mod") {
    CHECK(rpoly_mul_mod(RPoly::u(), RPoly::u(), 5).is_zero());
    const RPoly one_u{BinPoly::one(), BinPoly::one()};
    CHECK(rpoly_mul_mod(one_u, one_u, 5) == RPoly::one());
    CHECK_THROWS_AS(rpoly_mul_mod(one_u, one_u, 0), std::domain_error);
    for (int t = 0; t < 1000; ++t) {
        const int beta = uniform(1, 35);
        const RPoly p = random_rpoly(uniform(0, 45)), q = random_rpoly(uniform(0, 45));
        CHECK(rpoly_mul_mod(p, q, beta) == schoolbook(p, q, beta));
    }
}

TEST_CASE("units and inverses") {
    CHECK(rpoly_is_unit({BinPoly::one(), BinPoly::one()}, 5));
    CHECK_FALSE(rpoly_is_unit(RPoly::u(), 5));
    CHECK_FALSE(rpoly_is_unit({P({0, 1}), {}}, 3));
    CHECK(rpoly_is_unit({P({0, 1, 3}), P({2})}, 5));
    CHECK_THROWS_AS(rpoly_inverse(RPoly::u(), 5), PreconditionError);
    for (int t = 0; t < 500; ++t) {
        const int beta = 2 * uniform(0, 17) + 1;
        const RPoly p = random_rpoly(beta - 1);
        if (!rpoly_is_unit(p, beta)) continue;
        CHECK(rpoly_mul_mod(p, rpoly_inverse(p, beta), beta) == RPoly::one());
    }
}

TEST_CASE("solve_unit_transfer") {
    const RPoly h{P({0, 2, 3}), P({1})};
    const RPoly q = solve_unit_transfer(h, h, 7);
    CHECK(rpoly_is_unit(q, 7));
    CHECK(rpoly_mul_mod(q, h, 7) == reduce_mod_xn1(h, 7));
    CHECK_THROWS_AS(solve_unit_transfer(RPoly::u(), RPoly::one(), 5), NoSolution);

    for (int t = 0; t < 300; ++t) {
        const int beta = 2 * uniform(0, 12) + 1;
        const RPoly hh = random_rpoly(beta - 1);
        RPoly unit = random_rpoly(beta - 1);
        if (!rpoly_is_unit(unit, beta)) continue;
        const RPoly target = rpoly_mul_mod(unit, hh, beta);
        const RPoly got = solve_unit_transfer(hh, target, beta);
        CHECK(rpoly_is_unit(got, beta));
        CHECK(rpoly_mul_mod(got, hh, beta) == target);
    }
}

TEST_CASE("unit transfer on the self-dual example data") {
    const CyclicCodeSpec ex1 = spec_of(14, 21, {0, 1, 3, 7, 8, 10}, {0, 3, 5, 6}, {0, 1, 2, 3, 7, 9, 11, 12}, {0, 2, 4, 5, 6});
    const DualChainData c = dual_chain(ex1);
    const BinPoly ts = reciprocal(c.theta), ss = reciprocal(c.sigma);
    const RPoly h{ts, mul_mod(ss, x_pow_mod(c.j - c.i, 21), 21)};
    const RPoly target{ts, ss};
    const RPoly q2 = solve_unit_transfer(h, target, 21);
    CHECK(rpoly_is_unit(q2, 21));
    CHECK(rpoly_mul_mod(q2, h, 21) == target);
}

TEST_CASE("text format") {
    CHECK(to_exponent_string(RPoly{P({0, 3}), P({1, 2})}) == "0,3;1,2");
    CHECK(parse_rpoly("0,3;1,2") == RPoly{P({0, 3}), P({1, 2})});
    CHECK(parse_rpoly("-;-").is_zero());
    CHECK_THROWS_AS(parse_rpoly("0,3", "q"), ParseError);
    CHECK_THROWS_AS(parse_rpoly("0,,3;1", "q"), ParseError);
}
