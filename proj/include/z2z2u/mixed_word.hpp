#pragma once

#include <string>
#include <vector>

#include "z2z2u/binpoly.hpp"
#include "z2z2u/rpoly.hpp"

namespace z2z2u {

/// An element (a | b) of Z2^alpha x R^beta, held in polynomial form:
/// x = a(x) mod x^alpha - 1 and y = b(x) mod x^beta - 1.
class MixedWord {
  public:
    MixedWord() = default;
    MixedWord(int alpha, int beta);
    /// Polynomials are reduced modulo x^alpha - 1 / x^beta - 1.
    MixedWord(int alpha, int beta, const BinPoly& x, const RPoly& y);
    static MixedWord from_elements(const std::vector<bool>& bits, const std::vector<RElem>& elems);

    int alpha() const noexcept { return alpha_; }
    int beta() const noexcept { return beta_; }
    const BinPoly& x() const noexcept { return x_; }
    const RPoly& y() const noexcept { return y_; }

    bool bit(int i) const { return x_.coeff(i); }
    RElem elem(int j) const { return y_.coeff(j); }
    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    MixedWord& operator+=(const MixedWord& o);
    friend MixedWord operator+(MixedWord a, const MixedWord& b) { return a += b; }
    friend bool operator==(const MixedWord&, const MixedWord&) = default;

    /// Module action: r.(a | b) = ((r mod u) a | r b); u annihilates the Z2 block.
    MixedWord scaled(RElem r) const;
    /// Multiplication by a polynomial of R[x] under the same action.
    MixedWord times(const RPoly& p) const;
    /// T^k; negative k rotates the other way.
    MixedWord shifted(long long k) const;

    /// Hamming weight of the Z2 block plus Lee weight of the R block.
    int lee_weight() const;

    /// "1 0 1 | 1+u u 0".
    std::string to_string() const;

  private:
    int alpha_ = 0;
    int beta_ = 0;
    BinPoly x_;
    RPoly y_;
};

/// <V,W> = u * sum a_i d_i + sum b_j e_j in R. Throws std::invalid_argument
/// on mismatched (alpha, beta).
RElem inner_product(const MixedWord& v, const MixedWord& w);

/// T(v): simultaneous single right rotation of both blocks.
MixedWord cyclic_shift(const MixedWord& v);

}  // namespace z2z2u
