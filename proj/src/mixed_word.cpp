#include "z2z2u/mixed_word.hpp"

#include <stdexcept>

namespace z2z2u {

namespace {

void require_same_shape(const MixedWord& v, const MixedWord& w) {
    if (v.alpha() != w.alpha() || v.beta() != w.beta())
        throw std::invalid_argument("mixed words of different shape (" + std::to_string(v.alpha()) + "," +
                                    std::to_string(v.beta()) + ") vs (" + std::to_string(w.alpha()) + "," +
                                    std::to_string(w.beta()) + ")");
}

BinPoly reduce_or_zero(const BinPoly& p, int n) { return n > 0 ? reduce_mod_xn1(p, n) : BinPoly{}; }

}  // namespace

MixedWord::MixedWord(int alpha, int beta) : alpha_(alpha), beta_(beta) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("negative block length");
}

MixedWord::MixedWord(int alpha, int beta, const BinPoly& x, const RPoly& y) : MixedWord(alpha, beta) {
    x_ = reduce_or_zero(x, alpha);
    y_ = {reduce_or_zero(y.b, beta), reduce_or_zero(y.c, beta)};
}

MixedWord MixedWord::from_elements(const std::vector<bool>& bits, const std::vector<RElem>& elems) {
    MixedWord w(static_cast<int>(bits.size()), static_cast<int>(elems.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w.x_.set_coeff(static_cast<int>(i), true);
    for (std::size_t j = 0; j < elems.size(); ++j) {
        if (elems[j].r) w.y_.b.set_coeff(static_cast<int>(j), true);
        if (elems[j].q) w.y_.c.set_coeff(static_cast<int>(j), true);
    }
    return w;
}

MixedWord& MixedWord::operator+=(const MixedWord& o) {
    require_same_shape(*this, o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

MixedWord MixedWord::scaled(RElem r) const {
    MixedWord w(alpha_, beta_);
    if (r.r) w.x_ = x_;
    w.y_ = scale(r, y_);
    return w;
}

MixedWord MixedWord::times(const RPoly& p) const {
    MixedWord w(alpha_, beta_);
    if (alpha_ > 0) w.x_ = mul_mod(p.b, x_, alpha_);
    if (beta_ > 0) w.y_ = rpoly_mul_mod(p, y_, beta_);
    return w;
}

MixedWord MixedWord::shifted(long long k) const {
    MixedWord w(alpha_, beta_);
    if (alpha_ > 0) w.x_ = mul_mod(x_, x_pow_mod(k, alpha_), alpha_);
    if (beta_ > 0) {
        const BinPoly s = x_pow_mod(k, beta_);
        w.y_ = {mul_mod(y_.b, s, beta_), mul_mod(y_.c, s, beta_)};
    }
    return w;
}

int MixedWord::lee_weight() const {
    int w = static_cast<int>(x_.weight());
    for (int j = 0; j < beta_; ++j) w += z2z2u::lee_weight(elem(j));
    return w;
}

std::string MixedWord::to_string() const {
    std::string s;
    for (int i = 0; i < alpha_; ++i) {
        if (i) s += ' ';
        s += bit(i) ? '1' : '0';
    }
    s += " |";
    for (int j = 0; j < beta_; ++j) {
        s += ' ';
        s += z2z2u::to_string(elem(j));
    }
    return s;
}

RElem inner_product(const MixedWord& v, const MixedWord& w) {
    require_same_shape(v, w);
    RElem acc;
    // u * sum a_i d_i
    for (int i : v.x().exponents()) acc.q ^= w.x().coeff(i);
    for (int j = 0; j < v.beta(); ++j) acc += v.elem(j) * w.elem(j);
    return acc;
}

MixedWord cyclic_shift(const MixedWord& v) { return v.shifted(1); }

}  // namespace z2z2u
