#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z2z2u {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;
    /// Parity of the bitwise AND, i.e. the standard dot product over GF(2).
    bool dot(const BitVec& o) const noexcept;
    /// Index of the lowest set bit, if any.
    std::optional<std::size_t> lowest() const noexcept;

    /// '0'/'1' characters, index 0 first.
    std::string to_string() const;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major dense matrix over GF(2).
struct BitMatrix {
    std::size_t cols = 0;
    std::vector<BitVec> rows;

    explicit BitMatrix(std::size_t c = 0) : cols(c) {}
    void add_row(BitVec r) { rows.push_back(std::move(r)); }
};

/// Reduced row echelon form in place; returns the pivot columns, one per
/// surviving row. Zero rows are removed.
std::vector<std::size_t> rref(BitMatrix& m);

std::size_t rank(BitMatrix m);

/// Basis of {x : M x = 0}.
std::vector<BitVec> nullspace(const BitMatrix& m);

/// Solution of the affine system M x = rhs as a particular solution plus a
/// kernel basis; nullopt when inconsistent.
struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel;
};
std::optional<AffineSolution> solve(const BitMatrix& m, const BitVec& rhs);

}  // namespace z2z2u
