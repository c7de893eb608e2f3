#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "z2z2u/css.hpp"
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
const CyclicCodeSpec kEx4 = spec_of(8, 5, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 2, 4, 6}, {0, 5}, {0, 1, 2, 3, 4});

MixedWord word_at(int alpha, int beta, std::uint64_t idx) {
    std::vector<bool> bits;
    std::vector<RElem> elems;
    for (int i = 0; i < alpha; ++i) bits.push_back((idx >> i) & 1);
    for (int j = 0; j < beta; ++j) {
        const auto digit = (idx >> (alpha + 2 * j)) & 3;
        elems.push_back(RElem{static_cast<bool>(digit & 1), static_cast<bool>(digit & 2)});
    }
    return MixedWord::from_elements(bits, elems);
}

int scan_distance(const BinaryLinearCode& c) {
    const std::size_t k = c.dimension();
    int best = static_cast<int>(c.length()) + 1;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        BitVec v(c.length());
        for (std::size_t i = 0; i < k; ++i)
            if ((m >> i) & 1) v ^= c.rows()[i];
        best = std::min(best, static_cast<int>(v.weight()));
    }
    return best;
}

BinaryLinearCode random_code(std::size_t n, std::size_t k) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < k; ++i) {
        BitVec r(n);
        for (std::size_t j = 0; j < n; ++j) r.set(j, rng()() & 1);
        rows.push_back(r);
    }
    return BinaryLinearCode(n, rows);
}

}  // namespace

TEST_CASE("gray map is a linear isometry, exhaustively on small lengths") {
    for (int alpha = 0; alpha <= 4; ++alpha)
        for (int beta = 1; beta <= 3; ++beta) {
            const std::uint64_t total = std::uint64_t{1} << (alpha + 2 * beta);
            std::vector<MixedWord> all;
            for (std::uint64_t i = 0; i < total; ++i) all.push_back(word_at(alpha, beta, i));
            for (const auto& v : all) {
                const BitVec g = gray_map(v);
                CHECK(g.size() == static_cast<std::size_t>(alpha + 2 * beta));
                CHECK(static_cast<int>(g.weight()) == v.lee_weight());
                CHECK(gray_inverse(g, alpha, beta) == v);
            }
            for (std::size_t s = 0; s < all.size(); s += 3)
                for (std::size_t t = 0; t < all.size(); t += 5)
                    CHECK((gray_map(all[s]) ^ gray_map(all[t])) == gray_map(all[s] + all[t]));
        }
}

TEST_CASE("gray map on random words") {
    for (int t = 0; t < 10000; ++t) {
        const int alpha = uniform(0, 40), beta = uniform(1, 40);
        const MixedWord v = random_word(alpha, beta), w = random_word(alpha, beta);
        const BitVec gv = gray_map(v), gw = gray_map(w);
        CHECK(static_cast<int>((gv ^ gw).weight()) == (v + w).lee_weight());
        CHECK((gv ^ gw) == gray_map(v + w));
    }
}

TEST_CASE("lee weight of ring elements") {
    const MixedWord w = MixedWord::from_elements({}, {RElem{0, 0}, RElem{1, 0}, RElem{0, 1}, RElem{1, 1}});
    CHECK(gray_map(w).to_string() == "0011" "0110");
    CHECK(w.lee_weight() == 4);
}

TEST_CASE("gray image of a cyclic code is linear with the expected size") {
    for (int t = 0; t < 200; ++t) {
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 12), 2 * uniform(0, 4) + 1);
        const BinaryLinearCode c = gray_generator_matrix(s);
        CHECK(static_cast<int>(c.dimension()) == code_type(s).log2_size());
        CHECK(c == gray_module_code({s.generator_f(), s.generator_l()}, s.alpha, s.beta));
    }
}

TEST_CASE("enumerated distance agrees with a direct scan") {
    for (int t = 0; t < 300; ++t) {
        const BinaryLinearCode c = random_code(static_cast<std::size_t>(uniform(1, 40)),
                                               static_cast<std::size_t>(uniform(0, 12)));
        CHECK(min_distance(c) == scan_distance(c));
        CHECK(min_distance(c, std::uint64_t{1} << 20, 1) == scan_distance(c));
    }
    CHECK(min_distance(BinaryLinearCode(5, {})) == 6);
    CHECK_THROWS_AS(min_distance(random_code(40, 20), 1000), BudgetExceeded);
}

TEST_CASE("collision search agrees with enumeration") {
    int exercised = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform(4, 48));
        const BinaryLinearCode c = random_code(n, static_cast<std::size_t>(uniform(1, std::min<int>(16, n - 1))));
        const int d = min_distance(c);
        const auto col = min_distance_by_collision(c, 3);
        if (d <= 6) {
            REQUIRE(col.has_value());
            CHECK(*col == d);
            ++exercised;
        } else {
            CHECK_FALSE(col.has_value());
        }
        const DistanceResult r = compute_distance(c, 16, 3, true);
        if (r.d) CHECK(*r.d == d);
    }
    CHECK(exercised > 100);
}

TEST_CASE("canonical form ignores row order and redundancy") {
    for (int t = 0; t < 200; ++t) {
        const BinaryLinearCode c = random_code(static_cast<std::size_t>(uniform(1, 70)),
                                               static_cast<std::size_t>(uniform(0, 10)));
        std::vector<BitVec> rows = c.rows();
        std::shuffle(rows.begin(), rows.end(), rng());
        if (rows.size() >= 2) rows.push_back(rows[0] ^ rows[1]);
        if (rows.size() >= 2) rows[0] ^= rows[1];
        const BinaryLinearCode d(c.length(), rows);
        CHECK(canonical_form(d) == canonical_form(c));
        CHECK(canonical_form(canonical_form(c)) == canonical_form(c));
    }
}

TEST_CASE("binary dual") {
    for (int t = 0; t < 100; ++t) {
        const BinaryLinearCode c = random_code(static_cast<std::size_t>(uniform(1, 80)),
                                               static_cast<std::size_t>(uniform(0, 20)));
        const BinaryLinearCode d = c.dual();
        CHECK(c.dimension() + d.dimension() == c.length());
        for (const auto& r : c.rows())
            for (const auto& s : d.rows()) CHECK_FALSE(r.dot(s));
        CHECK(d.dual() == c);
    }
}

TEST_CASE("self-dual example image") {
    const BinaryLinearCode c = gray_generator_matrix(kEx1);
    CHECK(c.length() == 56);
    CHECK(c.dimension() == 28);
    CHECK(c.dual() == c);
    CHECK(*min_distance_by_collision(c) == 6);
}

TEST_CASE("css from the single-generator examples") {
    const QuantumParams q3 = css_params(kEx3);
    CHECK(q3.to_string() == "[[16,14,2]]");
    CHECK(min_distance(gray_generator_matrix(kEx3)) == 16);
    const QuantumParams q4 = css_params(kEx4);
    CHECK(q4.to_string() == "[[18,14,2]]");
    CHECK(min_distance(gray_generator_matrix(kEx4)) == 8);
    CHECK(gray_dual_code(kEx4).dimension() == 16);
}

TEST_CASE("css from the two-generator example") {
    const BinaryLinearCode c = gray_generator_matrix(kEx2);
    CHECK(c.dimension() == 25);
    CHECK(*min_distance_by_collision(c) == 6);
    const QuantumParams q = css_params(kEx2, std::uint64_t{1} << 32, false);
    CHECK(q.N == 56);
    CHECK(q.K == 25);
    CHECK(q.Kq == 6);

    // The dual image holds a weight-4 word, so its distance is 4.
    const MixedWord w(14, 21, BinPoly::from_exponents({0, 2, 4, 10}), RPoly{});
    CHECK(w.lee_weight() == 4);
    CHECK(shift_orthogonality(w, kEx2.generator_f()));
    CHECK(shift_orthogonality(w, kEx2.generator_l()));
    const BinaryLinearCode dual = gray_dual_code(kEx2);
    CHECK(dual.dimension() == 31);
    CHECK(dual.contains(gray_map(w)));
    CHECK(min_distance_by_collision(dual) == std::optional<int>(4));
}

TEST_CASE("css preconditions") {
    CHECK_THROWS_AS(css_params(CyclicCodeSpec::full_space(3, 3)), PreconditionError);
    const QuantumParams z = css_params(CyclicCodeSpec::zero_code(3, 3));
    CHECK(z.Kq == 9);
    CHECK(z.dq == std::optional<int>(1));
    for (int t = 0; t < 100; ++t) {
        const CyclicCodeSpec s = random_valid_spec(uniform(1, 8), 2 * uniform(0, 3) + 1);
        if (!is_self_orthogonal(s)) {
            CHECK_THROWS_AS(css_params(s), PreconditionError);
            continue;
        }
        const QuantumParams q = css_params(s);
        CHECK(q.Kq == q.N - 2 * q.K);
        CHECK(gray_dual_code(s).contains(gray_generator_matrix(s)));
    }
}
