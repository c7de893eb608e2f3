#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "z2z2u/binpoly.hpp"
#include "z2z2u/cyclic_code.hpp"
#include "z2z2u/cyclotomic.hpp"
#include "z2z2u/mixed_word.hpp"
#include "z2z2u/search.hpp"

namespace testing {

using namespace z2z2u;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random polynomial of degree at most max_deg (possibly zero).
inline BinPoly random_poly(int max_deg) {
    BinPoly p;
    for (int i = 0; i <= max_deg; ++i)
        if (rng()() & 1) p.set_coeff(i, true);
    return p;
}

inline RPoly random_rpoly(int max_deg) { return {random_poly(max_deg), random_poly(max_deg)}; }

inline MixedWord random_word(int alpha, int beta) {
    return MixedWord(alpha, beta, random_poly(alpha - 1), random_rpoly(beta - 1));
}

/// Uniform over (f, g, a) and then over the l-space.
inline CyclicCodeSpec random_valid_spec(int alpha, int beta) {
    const auto fs = divisors_of_xn_minus_1(alpha);
    const auto gs = enumerate_divisors(factor_xn_minus_1(beta));
    const BinPoly f = fs[static_cast<std::size_t>(uniform(0, static_cast<int>(fs.size()) - 1))];
    const auto& g = gs[static_cast<std::size_t>(uniform(0, static_cast<int>(gs.size()) - 1))];
    std::vector<const Divisor*> as;
    for (const auto& a : gs)
        if (divisor_divides(a, g)) as.push_back(&a);
    const BinPoly a = as[static_cast<std::size_t>(uniform(0, static_cast<int>(as.size()) - 1))]->poly;
    const auto basis = l_space_basis(f, exact_div(BinPoly::xn_minus_1(beta), a), alpha, false);
    BinPoly l;
    for (const auto& v : basis)
        if (rng()() & 1) l += v;
    return {alpha, beta, f, l, g.poly, a};
}

inline CyclicCodeSpec spec_of(int alpha, int beta, std::initializer_list<int> f, std::initializer_list<int> l,
                              std::initializer_list<int> g, std::initializer_list<int> a) {
    return {alpha, beta, BinPoly::from_exponents(f), BinPoly::from_exponents(l), BinPoly::from_exponents(g),
            BinPoly::from_exponents(a)};
}

inline BinPoly P(std::initializer_list<int> e) { return BinPoly::from_exponents(e); }

}  // namespace testing
