#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "z2z2u/binpoly.hpp"

namespace z2z2u {

/// Element r + u*q of R = Z2 + uZ2, u^2 = 0.
struct RElem {
    bool r = false;
    bool q = false;

    static constexpr RElem zero() { return {false, false}; }
    static constexpr RElem one() { return {true, false}; }
    static constexpr RElem u() { return {false, true}; }
    static constexpr RElem one_plus_u() { return {true, true}; }

    /// Index in {0, 1, u, 1+u} order: r + 2q.
    constexpr int index() const { return (r ? 1 : 0) + (q ? 2 : 0); }
    static constexpr RElem from_index(int i) { return {(i & 1) != 0, (i & 2) != 0}; }

    constexpr bool is_unit() const { return r; }
    constexpr bool is_zero() const { return !r && !q; }
    /// Reduction mod u.
    constexpr bool residue() const { return r; }

    friend constexpr RElem operator+(RElem a, RElem b) { return {a.r != b.r, a.q != b.q}; }
    friend constexpr RElem operator*(RElem a, RElem b) {
        return {a.r && b.r, (a.r && b.q) != (a.q && b.r)};
    }
    RElem& operator+=(RElem o) { return *this = *this + o; }
    friend constexpr bool operator==(RElem, RElem) = default;
};

/// Lee weight: 0, 1, 2, 1 for 0, 1, u, 1+u.
constexpr int lee_weight(RElem e) { return e.q ? (e.r ? 1 : 2) : (e.r ? 1 : 0); }

std::string to_string(RElem e);

/// b(x) + u*c(x) in R[x].
struct RPoly {
    BinPoly b;
    BinPoly c;

    RPoly() = default;
    RPoly(BinPoly b_, BinPoly c_) : b(std::move(b_)), c(std::move(c_)) {}
    static RPoly one() { return {BinPoly::one(), {}}; }
    static RPoly u() { return {{}, BinPoly::one()}; }

    bool is_zero() const { return b.is_zero() && c.is_zero(); }
    RElem coeff(int i) const { return {b.coeff(i), c.coeff(i)}; }

    RPoly& operator+=(const RPoly& o) {
        b += o.b;
        c += o.c;
        return *this;
    }
    friend RPoly operator+(RPoly x, const RPoly& y) { return x += y; }
    friend bool operator==(const RPoly&, const RPoly&) = default;
};

RPoly reduce_mod_xn1(const RPoly& p, int n);

/// (b1 + u c1)(b2 + u c2) = b1 b2 + u (b1 c2 + c1 b2), each part mod x^beta - 1.
/// Throws std::domain_error on beta < 1.
RPoly rpoly_mul_mod(const RPoly& p, const RPoly& q, int beta);

/// Scalar action of an element of R on an R-polynomial.
RPoly scale(RElem e, const RPoly& p);

/// Componentwise tilde with respect to x^n - 1.
RPoly tilde(const RPoly& p, int n);

/// Invertibility in R[x]/(x^beta - 1): the residue b must be coprime to
/// x^beta - 1; the u-part then lifts because u is nilpotent.
bool rpoly_is_unit(const RPoly& p, int beta);

/// Explicit inverse of a unit; throws PreconditionError when p is not a unit.
RPoly rpoly_inverse(const RPoly& p, int beta);

/// Find a unit q with q*h = target mod x^beta - 1 by solving the GF(2)-linear
/// system in the 2*beta coefficients of q, then scanning particular + kernel
/// combinations in counting order for one whose residue is a unit.
/// Throws NoSolution when the system is inconsistent and NoUnitSolution when
/// no unit turns up within `max_trials` kernel combinations.
RPoly solve_unit_transfer(const RPoly& h, const RPoly& target, int beta, std::uint64_t max_trials = 1U << 20);

/// "b;c" with both halves in exponent-list form, e.g. "0,3;1,2".
std::string to_exponent_string(const RPoly& p);
RPoly parse_rpoly(std::string_view text, const std::string& field = {});

}  // namespace z2z2u
