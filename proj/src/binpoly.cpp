#include "z2z2u/binpoly.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "z2z2u/errors.hpp"

namespace z2z2u {

namespace {

constexpr int kWordBits = 64;

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, int shift) {
    if (src.empty()) return;
    const std::size_t ws = static_cast<std::size_t>(shift / kWordBits);
    const int bs = shift % kWordBits;
    const std::size_t need = src.size() + ws + 1;
    if (dst.size() < need) dst.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        dst[i + ws + 1] ^= src[i] >> (kWordBits - bs);
    }
}

}  // namespace

void BinPoly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
    if (words_.empty()) {
        degree_ = kZeroDegree;
    } else {
        degree_ = static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
    }
}

BinPoly BinPoly::monomial(int k) {
    if (k < 0) throw std::domain_error("monomial exponent must be non-negative");
    BinPoly p;
    p.set_coeff(k, true);
    return p;
}

BinPoly BinPoly::xn_minus_1(int n) {
    if (n < 1) throw std::domain_error("x^n - 1 requires n >= 1");
    BinPoly p = monomial(n);
    p.set_coeff(0, true);
    return p;
}

BinPoly BinPoly::from_exponents(std::initializer_list<int> exps) {
    return from_exponents(std::span<const int>(exps.begin(), exps.size()));
}

BinPoly BinPoly::from_exponents(std::span<const int> exps) {
    BinPoly p;
    for (int e : exps) {
        if (e < 0) throw std::domain_error("negative exponent");
        p.set_coeff(e, !p.coeff(e));
    }
    return p;
}

BinPoly BinPoly::from_word(std::uint64_t bits) {
    BinPoly p;
    p.words_ = {bits};
    p.normalize();
    return p;
}

bool BinPoly::coeff(int i) const noexcept {
    if (i < 0) return false;
    const auto w = static_cast<std::size_t>(i / kWordBits);
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1U;
}

void BinPoly::set_coeff(int i, bool v) {
    if (i < 0) throw std::domain_error("negative exponent");
    const auto w = static_cast<std::size_t>(i / kWordBits);
    const std::uint64_t m = std::uint64_t{1} << (i % kWordBits);
    if (v) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= m;
    } else if (w < words_.size()) {
        words_[w] &= ~m;
    }
    normalize();
}

std::size_t BinPoly::weight() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<int> BinPoly::exponents() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BinPoly BinPoly::shifted(int k) const {
    if (k < 0) throw std::domain_error("negative shift");
    BinPoly r;
    xor_shifted(r.words_, words_, k);
    r.normalize();
    return r;
}

BinPoly BinPoly::truncated(int n) const {
    if (n <= 0) return {};
    if (degree_ < n) return *this;
    BinPoly r = *this;
    const auto full = static_cast<std::size_t>(n / kWordBits);
    const int rem = n % kWordBits;
    r.words_.resize(full + (rem ? 1 : 0));
    if (rem) r.words_[full] &= (std::uint64_t{1} << rem) - 1;
    r.normalize();
    return r;
}

BinPoly BinPoly::shifted_down(int k) const {
    if (k <= 0) return *this;
    if (degree_ < k) return {};
    const auto ws = static_cast<std::size_t>(k / kWordBits);
    const int bs = k % kWordBits;
    BinPoly r;
    r.words_.assign(words_.size() - ws, 0);
    for (std::size_t i = ws; i < words_.size(); ++i) {
        std::uint64_t v = words_[i] >> bs;
        if (bs && i + 1 < words_.size()) v |= words_[i + 1] << (kWordBits - bs);
        r.words_[i - ws] = v;
    }
    r.normalize();
    return r;
}

BinPoly& BinPoly::operator+=(const BinPoly& o) {
    if (words_.size() < o.words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    normalize();
    return *this;
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const BinPoly& sparse = a.weight() <= b.weight() ? a : b;
    const BinPoly& dense = &sparse == &a ? b : a;
    BinPoly r;
    for (int e : sparse.exponents()) xor_shifted(r.words_, dense.words_, e);
    r.normalize();
    return r;
}

std::strong_ordering operator<=>(const BinPoly& a, const BinPoly& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
}

DivRem divrem(const BinPoly& p, const BinPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    DivRem out{BinPoly{}, p};
    const int dq = q.degree();
    while (!out.rem.is_zero() && out.rem.degree() >= dq) {
        const int s = out.rem.degree() - dq;
        out.quot.set_coeff(s, !out.quot.coeff(s));
        out.rem += q.shifted(s);
    }
    return out;
}

BinPoly operator/(const BinPoly& p, const BinPoly& q) { return divrem(p, q).quot; }
BinPoly operator%(const BinPoly& p, const BinPoly& q) { return divrem(p, q).rem; }

bool divides(const BinPoly& d, const BinPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return (p % d).is_zero();
}

BinPoly exact_div(const BinPoly& p, const BinPoly& q) {
    auto [quot, rem] = divrem(p, q);
    if (!rem.is_zero()) throw std::domain_error("exact_div: divisor does not divide dividend");
    return quot;
}

BinPoly gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Bezout egcd(const BinPoly& p, const BinPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("egcd of two zero polynomials");
    // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
    BinPoly r0 = p, r1 = q;
    BinPoly s0 = BinPoly::one(), s1;
    BinPoly t0, t1 = BinPoly::one();
    while (!r1.is_zero()) {
        auto [quot, rem] = divrem(r0, r1);
        BinPoly s2 = s0 + quot * s1;
        BinPoly t2 = t0 + quot * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {r0, s0, t0};
}

BinPoly reduce_mod_xn1(const BinPoly& p, int n) {
    if (n < 1) throw std::domain_error("modulus x^n - 1 requires n >= 1");
    BinPoly r = p;
    while (r.degree() >= n) r = r.truncated(n) + r.shifted_down(n);
    return r;
}

BinPoly mul_mod(const BinPoly& p, const BinPoly& q, int n) { return reduce_mod_xn1(p * q, n); }

BinPoly x_pow_mod(long long k, int n) {
    if (n < 1) throw std::domain_error("modulus x^n - 1 requires n >= 1");
    const long long e = ((k % n) + n) % n;
    return BinPoly::monomial(static_cast<int>(e));
}

BinPoly reciprocal(const BinPoly& p) {
    if (p.is_zero()) return {};
    BinPoly r;
    const int d = p.degree();
    for (int e : p.exponents()) r.set_coeff(d - e, true);
    return r;
}

BinPoly tilde(const BinPoly& p, int n) {
    if (n < 1) throw std::domain_error("tilde requires n >= 1");
    if (p.degree() >= n) throw std::domain_error("tilde requires deg p < n");
    if (p.is_zero()) return {};
    return reciprocal(p).shifted(n - 1 - p.degree());
}

std::string to_exponent_string(const BinPoly& p) {
    if (p.is_zero()) return "-";
    std::string s;
    for (int e : p.exponents()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e);
    }
    return s;
}

BinPoly parse_exponent_string(std::string_view text, const std::string& field) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text == "-") return {};
    if (text.empty()) throw ParseError(field, "empty polynomial (use \"-\" for zero)");

    constexpr int kMaxExponent = 1 << 20;
    BinPoly p;
    int prev = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        if (tok.empty()) throw ParseError(field, "empty exponent at offset " + std::to_string(pos));
        int e = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || e < 0 || e > kMaxExponent)
            throw ParseError(field, "bad exponent '" + std::string(tok) + "'");
        if (e <= prev) throw ParseError(field, "exponents must be strictly ascending");
        p.set_coeff(e, true);
        prev = e;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return p;
}

std::string to_pretty_string(const BinPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int e : p.exponents()) {
        if (!s.empty()) s += " + ";
        if (e == 0)
            s += "1";
        else if (e == 1)
            s += "x";
        else
            s += "x^" + std::to_string(e);
    }
    return s;
}

}  // namespace z2z2u
