#include "z2z2u/rpoly.hpp"

#include <stdexcept>

#include "z2z2u/bitvec.hpp"
#include "z2z2u/errors.hpp"

namespace z2z2u {

std::string to_string(RElem e) {
    static constexpr const char* kNames[] = {"0", "1", "u", "1+u"};
    return kNames[e.index()];
}

RPoly reduce_mod_xn1(const RPoly& p, int n) { return {reduce_mod_xn1(p.b, n), reduce_mod_xn1(p.c, n)}; }

RPoly rpoly_mul_mod(const RPoly& p, const RPoly& q, int beta) {
    if (beta < 1) throw std::domain_error("rpoly_mul_mod requires beta >= 1");
    return {mul_mod(p.b, q.b, beta), reduce_mod_xn1(p.b * q.c + p.c * q.b, beta)};
}

RPoly scale(RElem e, const RPoly& p) {
    RPoly out;
    if (e.r) out = p;
    if (e.q) out.c += p.b;
    return out;
}

RPoly tilde(const RPoly& p, int n) { return {tilde(p.b, n), tilde(p.c, n)}; }

bool rpoly_is_unit(const RPoly& p, int beta) {
    return gcd(reduce_mod_xn1(p.b, beta), BinPoly::xn_minus_1(beta)).is_one();
}

RPoly rpoly_inverse(const RPoly& p, int beta) {
    const BinPoly b = reduce_mod_xn1(p.b, beta);
    const Bezout bz = egcd(b, BinPoly::xn_minus_1(beta));
    if (!bz.gcd.is_one()) throw PreconditionError("rpoly_inverse: residue is not coprime to x^beta - 1");
    // (b + uc)^-1 = s + u c s^2 where s = b^-1.
    const BinPoly s = reduce_mod_xn1(bz.s, beta);
    return {s, mul_mod(p.c, mul_mod(s, s, beta), beta)};
}

RPoly solve_unit_transfer(const RPoly& h, const RPoly& target, int beta, std::uint64_t max_trials) {
    if (beta < 1) throw std::domain_error("solve_unit_transfer requires beta >= 1");
    const RPoly hh = reduce_mod_xn1(h, beta);
    const RPoly tt = reduce_mod_xn1(target, beta);
    const auto n = static_cast<std::size_t>(beta);

    // Unknowns: e_0..e_{beta-1}, f_0..f_{beta-1} with q = e + u f.
    // Equations: residue coefficients (rows 0..beta-1), u-coefficients (rows beta..2beta-1).
    BitMatrix a(2 * n);
    a.rows.assign(2 * n, BitVec(2 * n));
    for (int k = 0; k < beta; ++k) {
        const RPoly col_e = rpoly_mul_mod(RPoly{BinPoly::monomial(k), {}}, hh, beta);
        const RPoly col_f = rpoly_mul_mod(RPoly{{}, BinPoly::monomial(k)}, hh, beta);
        for (int i : col_e.b.exponents()) a.rows[i].set(k);
        for (int i : col_e.c.exponents()) a.rows[n + i].set(k);
        for (int i : col_f.c.exponents()) a.rows[n + i].set(n + k);
    }
    BitVec rhs(2 * n);
    for (int i : tt.b.exponents()) rhs.set(i);
    for (int i : tt.c.exponents()) rhs.set(n + i);

    const auto sol = solve(a, rhs);
    if (!sol) throw NoSolution("q*h = target has no solution: inputs generate different codes");

    auto to_rpoly = [&](const BitVec& v) {
        RPoly q;
        for (std::size_t i = 0; i < n; ++i) {
            if (v.get(i)) q.b.set_coeff(static_cast<int>(i), true);
            if (v.get(n + i)) q.c.set_coeff(static_cast<int>(i), true);
        }
        return q;
    };

    const std::size_t dim = sol->kernel.size();
    const std::uint64_t space = dim >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim);
    const std::uint64_t trials = space < max_trials ? space : max_trials;
    for (std::uint64_t mask = 0; mask < trials; ++mask) {
        BitVec v = sol->particular;
        for (std::size_t i = 0; i < dim; ++i)
            if ((mask >> i) & 1U) v ^= sol->kernel[i];
        RPoly q = to_rpoly(v);
        if (rpoly_is_unit(q, beta)) return q;
    }
    throw NoUnitSolution("q*h = target is solvable but no unit solution was found");
}

std::string to_exponent_string(const RPoly& p) { return to_exponent_string(p.b) + ";" + to_exponent_string(p.c); }

RPoly parse_rpoly(std::string_view text, const std::string& field) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError(field, "R-polynomial must have the form \"b;c\"");
    return {parse_exponent_string(text.substr(0, semi), field), parse_exponent_string(text.substr(semi + 1), field)};
}

}  // namespace z2z2u
