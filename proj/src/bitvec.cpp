#include "z2z2u/bitvec.hpp"

#include <algorithm>

namespace z2z2u {

bool BitVec::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::weight() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVec::dot(const BitVec& o) const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::optional<std::size_t> BitVec::lowest() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::size_t> rref(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t p = r;
        while (p < m.rows.size() && !m.rows[p].get(c)) ++p;
        if (p == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[p]);
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (i != r && m.rows[i].get(c)) m.rows[i] ^= m.rows[r];
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(r);
    return pivots;
}

std::size_t rank(BitMatrix m) { return rref(m).size(); }

std::vector<BitVec> nullspace(const BitMatrix& m) {
    BitMatrix a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        BitVec v(m.cols);
        v.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (a.rows[r].get(free)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve(const BitMatrix& m, const BitVec& rhs) {
    // Augment with the right-hand side as an extra column.
    BitMatrix aug(m.cols + 1);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        BitVec row(m.cols + 1);
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.rows[r].get(c)) row.set(c);
        if (rhs.get(r)) row.set(m.cols);
        aug.add_row(std::move(row));
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;

    AffineSolution sol{BitVec(m.cols), nullspace(m)};
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (aug.rows[r].get(m.cols)) sol.particular.set(pivots[r]);
    return sol;
}

}  // namespace z2z2u
