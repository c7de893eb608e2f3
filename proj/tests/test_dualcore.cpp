#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "support.hpp"
#include "z2z2u/dual.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"

using namespace testing;

namespace {

const CyclicCodeSpec kEx1 =
    spec_of(14, 21, {0, 1, 3, 7, 8, 10}, {0, 3, 5, 6}, {0, 1, 2, 3, 7, 9, 11, 12}, {0, 2, 4, 5, 6});
const CyclicCodeSpec kEx2 =
    spec_of(14, 21, {0, 1, 3, 7, 8, 10}, {0, 4, 6, 8}, {0, 1, 3, 6, 7, 10, 13, 15}, {0, 2, 4, 5, 6});
const CyclicCodeSpec kEx3 = spec_of(6, 5, {0, 6}, {0, 1, 2, 3, 4, 5}, {0, 5}, {0, 1, 2, 3, 4});

bool all_pass(const std::vector<ValidationCheck>& checks) {
    for (const auto& c : checks) {
        CAPTURE(c.name);
        if (!c.passed && !c.informational) return false;
    }
    return true;
}

/// <v, T^k w> = 0 for every k in [0, m).
bool shift_loop(const MixedWord& v, const MixedWord& w) {
    const int m = std::lcm(v.alpha(), v.beta());
    MixedWord x = w;
    for (int k = 0; k < m; ++k, x = cyclic_shift(x))
        if (!inner_product(v, x).is_zero()) return false;
    return true;
}

bool same_code(const BinaryLinearCode& a, const BinaryLinearCode& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace

TEST_CASE("dual chain values for the self-dual example") {
    const DualChainData c = dual_chain(kEx1);
    CHECK(c.h_f == P({0, 1, 2, 4}));
    CHECK(c.h_g == P({0, 1, 4, 5, 7, 8, 9}));
    CHECK(c.h_a == P({0, 2, 5, 8, 9, 12, 14, 15}));
    CHECK(c.d == P({0, 2, 3, 4}));
    CHECK(c.d1 == P({0, 7}));
    CHECK(c.d2 == P({0, 1, 3}));
    CHECK(c.Q == P({0, 2, 3}));
    CHECK(c.m == 42);
    CHECK(all_pass(check_chain_identities(kEx1, c)));
}

TEST_CASE("published chain values satisfy the defining identities") {
    DualChainData c = dual_chain(kEx1);
    c.alpha1 = P({0, 1, 4, 5});
    c.alpha2 = P({1});
    c.alpha3 = P({0, 2});
    c.alpha4 = P({1, 4, 7});
    c.beta1 = P({0, 1, 4, 6, 8, 11});
    c.v1 = P({0, 1, 3, 8});
    c.theta = P({0, 1, 3, 5, 9, 10, 11, 12});
    c.sigma = P({0, 1, 2, 4, 6});
    c.M = tilde(reduce_mod_xn1(c.alpha1 * (c.Q + c.d2) * c.h_f, 14), 14);
    for (const auto& chk : check_chain_identities(kEx1, c)) {
        CAPTURE(chk.name);
        CHECK(chk.passed);
    }
    CHECK(reciprocal(c.theta) == kEx1.g);
    CHECK(reciprocal(c.sigma) == kEx1.a);
}

TEST_CASE("tampered chain values are caught") {
    DualChainData c = dual_chain(kEx1);
    c.alpha1 += BinPoly::one();
    CHECK_FALSE(all_pass(check_chain_identities(kEx1, c)));
}

TEST_CASE("dual generators") {
    const DualGenerators dg = dual_generators(kEx1);
    CHECK(dg.type.k0 == 7);
    CHECK(dg.type.k1 == 9);
    CHECK(dg.type.k2 == 3);
    CHECK(same_code(dg.gray_code(), gray_generator_matrix(kEx1)));

    const CyclicCodeSpec zero = CyclicCodeSpec::zero_code(4, 3);
    CHECK(dual_chain(zero).d == BinPoly::xn_minus_1(4));
    CHECK(dual_generators(zero).gray_code().dimension() == 10);
    CHECK(dual_generators(CyclicCodeSpec::full_space(4, 3)).gray_code().dimension() == 0);

    CHECK_THROWS_AS(dual_chain(CyclicCodeSpec::zero_code(4, 2)), InvalidSpec);
}

TEST_CASE("dual sizes multiply to the ambient size") {
    for (int t = 0; t < 200; ++t) {
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 16), 2 * uniform(0, 8) + 1);
        const DualGenerators dg = dual_generators(s);
        const BinaryLinearCode primal = gray_generator_matrix(s);
        const BinaryLinearCode dual = dg.gray_code();
        CHECK(primal.dimension() + dual.dimension() == static_cast<std::size_t>(s.alpha + 2 * s.beta));
        CHECK(static_cast<int>(dual.dimension()) == dg.type.log2_size());
        CHECK(same_code(dual, primal.dual()));
    }
}

TEST_CASE("normalized dual") {
    const NormalizedDual nd = normalized_dual(kEx1);
    CHECK(validate_spec(nd.quadruple).ok());
    CHECK(same_code(gray_module_code(nd.generators(), 14, 21), gray_generator_matrix(kEx1)));
    CHECK(rpoly_mul_mod(nd.q1, nd.q2, 21) == RPoly::one());
    CHECK(nd.quadruple.g == kEx1.g);
    CHECK(nd.quadruple.a == kEx1.a);
    CHECK(nd.quadruple.f == kEx1.f);

    const NormalizedDual zero = normalized_dual(CyclicCodeSpec::zero_code(4, 3));
    CHECK(gray_module_code(zero.generators(), 4, 3).dimension() == 10);

    for (int t = 0; t < 200; ++t) {
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 16), 2 * uniform(0, 8) + 1);
        CAPTURE(s.alpha);
        CAPTURE(s.beta);
        const NormalizedDual n = normalized_dual(s);
        CHECK(validate_spec(n.quadruple).ok());
        CHECK(same_code(gray_module_code(n.generators(), s.alpha, s.beta), dual_generators(s).gray_code()));
    }
}

TEST_CASE("dual spanning set") {
    CHECK(dual_spanning_set(normalized_dual(kEx1)).size() == 19);
    CHECK(dual_spanning_set(normalized_dual(kEx3)).size() == 10);
    const auto zero = dual_spanning_set(normalized_dual(CyclicCodeSpec::zero_code(3, 3)));
    CHECK(gray_code_of(zero.additive_generators(), 3, 3).dimension() == 9);
}

TEST_CASE("shift orthogonality criterion") {
    CHECK(shift_orthogonality(MixedWord(4, 3), MixedWord(4, 3)));
    const MixedWord g1 = kEx1.generator_f(), g2 = kEx1.generator_l();
    CHECK(shift_orthogonality(g1, g1));
    CHECK(shift_orthogonality(g1, g2));
    CHECK(shift_orthogonality(g2, g2));
    CHECK_THROWS_AS(shift_orthogonality(MixedWord(4, 3), MixedWord(3, 4)), std::invalid_argument);
    int disagreements = 0;
    for (int t = 0; t < 1000; ++t) {
        const int alpha = uniform(1, 8), beta = uniform(1, 7);
        MixedWord v = random_word(alpha, beta), w = random_word(alpha, beta);
        // Sparse words make orthogonal pairs common enough to exercise both outcomes.
        if (t % 2 == 0) {
            v = MixedWord(alpha, beta, v.x().truncated(2), RPoly{v.y().b.truncated(1), v.y().c.truncated(2)});
            w = MixedWord(alpha, beta, w.x().truncated(1), RPoly{w.y().b.truncated(1), w.y().c});
        }
        disagreements += shift_orthogonality(v, w) != shift_loop(v, w);
    }
    CHECK(disagreements == 0);
}

TEST_CASE("self-orthogonality") {
    CHECK(is_self_orthogonal(kEx1));
    CHECK(is_self_orthogonal(kEx2));
    CHECK_FALSE(is_self_orthogonal(CyclicCodeSpec::full_space(3, 3)));
    for (int t = 0; t < 200; ++t) {
        const int beta = 2 * uniform(0, 2) + 1;
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 14 - 2 * beta), beta);
        const auto words = codewords(s);
        bool exhaustive = true;
        for (std::size_t i = 0; i < words.size() && exhaustive; ++i)
            for (std::size_t j = i; j < words.size() && exhaustive; ++j)
                exhaustive = inner_product(words[i], words[j]).is_zero();
        CHECK(is_self_orthogonal(s) == exhaustive);
    }
}

TEST_CASE("self-duality") {
    const SelfDualAssessment a = assess_self_duality(kEx1);
    CHECK(a.verdict == SelfDualVerdict::SelfDual);
    CHECK(a.gray_witness == std::optional<bool>(true));
    CHECK(is_self_dual(kEx1));
    CHECK_FALSE(is_self_dual(kEx2));
    CHECK(assess_self_duality(kEx2).cardinality_matches == false);
    CHECK_FALSE(is_self_dual(CyclicCodeSpec::zero_code(4, 3)));
    CHECK(assess_self_duality(CyclicCodeSpec::zero_code(3, 3)).verdict == SelfDualVerdict::StructurallyImpossible);
    CHECK_THROWS_AS(assess_self_duality(CyclicCodeSpec::zero_code(4, 4)), InvalidSpec);
}

TEST_CASE("degree identity") {
    CHECK(selfdual_degree_identity(kEx1) == IdentityResult::Holds);
    CHECK(selfdual_degree_identity(CyclicCodeSpec::zero_code(4, 3)) == IdentityResult::NotApplicable);
    CHECK(selfdual_degree_identity(kEx2) == IdentityResult::NotApplicable);
}

TEST_CASE("divisibility checks") {
    CHECK(all_pass(selfdual_divisibility_checks(kEx1)));
    CHECK(all_pass(selfdual_divisibility_checks(kEx2)));
    CHECK(all_pass(selfdual_divisibility_checks(CyclicCodeSpec::zero_code(6, 5))));
    int non_orth = 0;
    for (int t = 0; t < 2000; ++t) {
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 16), 2 * uniform(0, 8) + 1);
        const bool orth = is_self_orthogonal(s);
        CHECK(all_pass(selfdual_divisibility_checks(s)) == orth);
        non_orth += !orth;
    }
    CHECK(non_orth > 100);
}
