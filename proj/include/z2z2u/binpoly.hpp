#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2z2u {

/// Polynomial over GF(2), dense and bit-packed: bit i of the word array is
/// the coefficient of x^i. The word array never carries trailing zero words,
/// so the zero polynomial has an empty representation.
class BinPoly {
  public:
    /// Degree reported for the zero polynomial. Compares below every real
    /// degree; never do arithmetic with it.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    BinPoly() = default;

    static BinPoly one() { return monomial(0); }
    static BinPoly monomial(int k);
    /// x^n - 1 (= x^n + 1 over GF(2)).
    static BinPoly xn_minus_1(int n);
    static BinPoly from_exponents(std::initializer_list<int> exps);
    static BinPoly from_exponents(std::span<const int> exps);
    /// Low 64 coefficients taken from `bits`.
    static BinPoly from_word(std::uint64_t bits);

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return degree_ == 0; }
    bool coeff(int i) const noexcept;
    void set_coeff(int i, bool v);
    std::size_t weight() const noexcept;
    std::vector<int> exponents() const;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    /// Multiply by x^k (k >= 0).
    BinPoly shifted(int k) const;
    /// Drop all terms of degree >= n.
    BinPoly truncated(int n) const;
    /// Floor division by x^k.
    BinPoly shifted_down(int k) const;

    BinPoly& operator+=(const BinPoly& o);
    BinPoly& operator-=(const BinPoly& o) { return *this += o; }
    friend BinPoly operator+(BinPoly a, const BinPoly& b) { return a += b; }
    friend BinPoly operator-(BinPoly a, const BinPoly& b) { return a += b; }
    friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
    BinPoly& operator*=(const BinPoly& o) { return *this = *this * o; }

    friend bool operator==(const BinPoly& a, const BinPoly& b) noexcept { return a.words_ == b.words_; }
    /// Total order: by degree, then by coefficients from the top down.
    friend std::strong_ordering operator<=>(const BinPoly& a, const BinPoly& b) noexcept;

  private:
    void normalize() noexcept;

    std::vector<std::uint64_t> words_;
    int degree_ = kZeroDegree;
};

struct DivRem {
    BinPoly quot;
    BinPoly rem;
};

/// p = quot*q + rem with deg rem < deg q. Throws std::domain_error on q = 0.
DivRem divrem(const BinPoly& p, const BinPoly& q);
BinPoly operator/(const BinPoly& p, const BinPoly& q);
BinPoly operator%(const BinPoly& p, const BinPoly& q);
bool divides(const BinPoly& d, const BinPoly& p);

/// Exact quotient; throws std::domain_error when q does not divide p.
BinPoly exact_div(const BinPoly& p, const BinPoly& q);

BinPoly gcd(BinPoly a, BinPoly b);

/// Bezout certificate s*p + t*q = gcd.
struct Bezout {
    BinPoly gcd;
    BinPoly s;
    BinPoly t;
};
/// Throws std::domain_error when both inputs are zero.
Bezout egcd(const BinPoly& p, const BinPoly& q);

/// p reduced modulo x^n - 1. Throws std::domain_error on n < 1.
BinPoly reduce_mod_xn1(const BinPoly& p, int n);
/// p*q reduced modulo x^n - 1. Throws std::domain_error on n < 1.
BinPoly mul_mod(const BinPoly& p, const BinPoly& q, int n);
/// x^k mod x^n - 1 for any integer k (negative allowed).
BinPoly x_pow_mod(long long k, int n);

/// x^deg(p) * p(1/x); reciprocal of zero is zero.
BinPoly reciprocal(const BinPoly& p);
/// x^(n-1) * p(1/x) for deg p < n; throws std::domain_error otherwise.
BinPoly tilde(const BinPoly& p, int n);

/// Exponent-list text: "0,1,3" for 1+x+x^3, "-" for zero.
std::string to_exponent_string(const BinPoly& p);
/// Inverse of to_exponent_string; requires strictly ascending exponents.
/// Throws ParseError naming `field`.
BinPoly parse_exponent_string(std::string_view text, const std::string& field = {});
/// Human-readable "1 + x + x^3".
std::string to_pretty_string(const BinPoly& p);

}  // namespace z2z2u
