#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z2u/bitvec.hpp"

namespace z2z2u {

/// Binary linear code given by generator rows, kept in reduced row echelon
/// form so that equal codes have identical representations.
class BinaryLinearCode {
  public:
    BinaryLinearCode() = default;
    /// Rows may be dependent; they are reduced on construction.
    BinaryLinearCode(std::size_t n, std::vector<BitVec> rows);

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    std::optional<int> min_distance() const noexcept { return d_; }
    void set_min_distance(int d) noexcept { d_ = d; }

    bool contains(const BitVec& v) const;
    /// Every codeword of `other` lies in this code.
    bool contains(const BinaryLinearCode& other) const;
    /// Generator matrix of the dual code (parity-check matrix of this one).
    BinaryLinearCode dual() const;

    friend bool operator==(const BinaryLinearCode& a, const BinaryLinearCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    /// One row per line of '0'/'1'.
    std::string matrix_text() const;

  private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
    std::optional<int> d_;
};

/// Unique reduced row echelon representative; the constructor already
/// reduces, so this is the identity on a constructed code (and idempotent).
BinaryLinearCode canonical_form(const BinaryLinearCode& code);

/// Exact minimum weight over nonzero codewords by Gray-code ordered message
/// enumeration (one row XOR per step), split across `threads` workers by
/// message prefix. Returns n+1 for the zero code. Throws BudgetExceeded when
/// 2^k > budget.
int min_distance(const BinaryLinearCode& code, std::uint64_t budget = std::uint64_t{1} << 32, unsigned threads = 0);

/// Exact minimum distance by syndrome collisions among column subsets of
/// size <= max_half of the parity-check matrix. Finds d whenever
/// d <= 2*max_half and returns nullopt otherwise. Needs n-k <= 128.
std::optional<int> min_distance_by_collision(const BinaryLinearCode& code, int max_half = 4);

/// Distance plus the method that produced it.
struct DistanceResult {
    std::optional<int> d;
    std::string method;  // "enumeration", "collision" or "unknown"
    std::string note;
};

/// Enumeration when 2^k fits the budget, otherwise the collision search.
/// With `collision_first` the collision search runs first and enumeration
/// only covers the case d > 2*collision_half.
DistanceResult compute_distance(const BinaryLinearCode& code, std::uint64_t budget, int collision_half = 4,
                                bool collision_first = false);

}  // namespace z2z2u
