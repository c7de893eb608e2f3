#include "z2z2u/binary_code.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "z2z2u/errors.hpp"

namespace z2z2u {

BinaryLinearCode::BinaryLinearCode(std::size_t n, std::vector<BitVec> rows) : n_(n) {
    BitMatrix m(n);
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("generator row length mismatch");
        m.add_row(std::move(r));
    }
    pivots_ = rref(m);
    rows_ = std::move(m.rows);
}

bool BinaryLinearCode::contains(const BitVec& v) const {
    if (v.size() != n_) return false;
    BitVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.get(pivots_[i])) r ^= rows_[i];
    return r.is_zero();
}

bool BinaryLinearCode::contains(const BinaryLinearCode& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const BitVec& r) { return contains(r); });
}

BinaryLinearCode BinaryLinearCode::dual() const {
    BitMatrix m(n_);
    m.rows = rows_;
    return BinaryLinearCode(n_, nullspace(m));
}

std::string BinaryLinearCode::matrix_text() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

BinaryLinearCode canonical_form(const BinaryLinearCode& code) { return BinaryLinearCode(code.length(), code.rows()); }

namespace {

template <std::size_t W>
int gray_scan(const std::vector<std::array<std::uint64_t, W>>& rows, std::size_t low_bits,
              const std::array<std::uint64_t, W>& start, int best) {
    std::array<std::uint64_t, W> cur = start;
    auto weight = [&] {
        int w = 0;
        for (std::size_t i = 0; i < W; ++i) w += std::popcount(cur[i]);
        return w;
    };
    bool start_zero = std::all_of(start.begin(), start.end(), [](std::uint64_t x) { return x == 0; });
    if (!start_zero) best = std::min(best, weight());
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto& r = rows[static_cast<std::size_t>(std::countr_zero(i))];
        int w = 0;
        for (std::size_t j = 0; j < W; ++j) {
            cur[j] ^= r[j];
            w += std::popcount(cur[j]);
        }
        if (w < best) best = w;
    }
    return best;
}

template <std::size_t W>
int min_distance_words(const BinaryLinearCode& code, unsigned threads) {
    const std::size_t k = code.dimension();
    std::vector<std::array<std::uint64_t, W>> rows(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < W; ++j) rows[i][j] = j < code.rows()[i].word_count() ? code.rows()[i].word(j) : 0;

    // Top `prefix_bits` rows select a chunk, the rest are Gray-enumerated.
    std::size_t prefix_bits = 0;
    while (prefix_bits < k && prefix_bits < 10 && (std::size_t{1} << prefix_bits) < 8 * threads) ++prefix_bits;
    if (k - prefix_bits < 12) prefix_bits = 0;
    const std::size_t low = k - prefix_bits;
    const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;

    std::atomic<std::uint64_t> next{0};
    std::atomic<int> global_best{static_cast<int>(code.length()) + 1};
    auto worker = [&] {
        int best = static_cast<int>(code.length()) + 1;
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            std::array<std::uint64_t, W> start{};
            for (std::size_t b = 0; b < prefix_bits; ++b)
                if ((c >> b) & 1U)
                    for (std::size_t j = 0; j < W; ++j) start[j] ^= rows[low + b][j];
            best = gray_scan<W>(rows, low, start, best);
        }
        int g = global_best.load();
        while (best < g && !global_best.compare_exchange_weak(g, best)) {
        }
    };
    std::vector<std::thread> pool;
    const unsigned nthreads = prefix_bits == 0 ? 1 : threads;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return global_best.load();
}

}  // namespace

int min_distance(const BinaryLinearCode& code, std::uint64_t budget, unsigned threads) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0) return static_cast<int>(n) + 1;
    if (k >= 64 || (std::uint64_t{1} << k) > budget)
        throw BudgetExceeded("minimum distance needs 2^" + std::to_string(k) + " codewords, budget is " +
                                 std::to_string(budget),
                             static_cast<double>(k));
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    switch ((n + 63) / 64) {
        case 1: return min_distance_words<1>(code, threads);
        case 2: return min_distance_words<2>(code, threads);
        case 3: return min_distance_words<3>(code, threads);
        case 4: return min_distance_words<4>(code, threads);
        default: break;
    }
    throw std::invalid_argument("min_distance supports length <= 256");
}

std::optional<int> min_distance_by_collision(const BinaryLinearCode& code, int max_half) {
    const std::size_t n = code.length();
    const BinaryLinearCode h = code.dual();
    const std::size_t r = h.dimension();
    if (code.dimension() == 0) return static_cast<int>(n) + 1;
    if (r > 128) throw std::invalid_argument("collision search needs n - k <= 128");

    using Syndrome = std::array<std::uint64_t, 2>;
    std::vector<Syndrome> column(n, Syndrome{0, 0});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (h.rows()[i].get(c)) column[c][i / 64] |= std::uint64_t{1} << (i % 64);

    // (syndrome, subset) for every subset of size <= max_half, including the empty set.
    struct Entry {
        Syndrome s;
        std::array<std::uint8_t, 8> idx;
        std::uint8_t size;
    };
    if (max_half > 8 || n > 255) throw std::invalid_argument("collision search limits exceeded");
    std::vector<Entry> table;
    Entry cur{{0, 0}, {}, 0};
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        table.push_back(cur);
        if (cur.size == max_half) return;
        for (std::size_t c = from; c < n; ++c) {
            const Entry saved = cur;
            cur.s[0] ^= column[c][0];
            cur.s[1] ^= column[c][1];
            cur.idx[cur.size++] = static_cast<std::uint8_t>(c);
            self(self, c + 1);
            cur = saved;
        }
    };
    recurse(recurse, 0);
    std::sort(table.begin(), table.end(), [](const Entry& a, const Entry& b) { return a.s < b.s; });

    int best = std::numeric_limits<int>::max();
    for (std::size_t lo = 0; lo < table.size();) {
        std::size_t hi = lo + 1;
        while (hi < table.size() && table[hi].s == table[lo].s) ++hi;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j) {
                // |A xor B| for sorted index lists.
                const Entry& a = table[i];
                const Entry& b = table[j];
                int common = 0;
                for (int x = 0, y = 0; x < a.size && y < b.size;) {
                    if (a.idx[x] == b.idx[y]) {
                        ++common;
                        ++x;
                        ++y;
                    } else if (a.idx[x] < b.idx[y]) {
                        ++x;
                    } else {
                        ++y;
                    }
                }
                const int w = a.size + b.size - 2 * common;
                if (w > 0) best = std::min(best, w);
            }
        lo = hi;
    }
    if (best <= 2 * max_half) return best;
    return std::nullopt;
}

DistanceResult compute_distance(const BinaryLinearCode& code, std::uint64_t budget, int collision_half,
                                bool collision_first) {
    const std::size_t k = code.dimension();
    if (collision_first && k > 0 && code.length() - k <= 128 && code.length() <= 255) {
        if (auto d = min_distance_by_collision(code, collision_half)) return {d, "collision", {}};
    }
    if (k < 64 && (std::uint64_t{1} << k) <= budget) return {min_distance(code, budget), "enumeration", {}};
    const std::size_t r = code.length() - k;
    if (r <= 128 && code.length() <= 255) {
        if (auto d = min_distance_by_collision(code, collision_half))
            return {d, "collision", "exact: found by syndrome collision of column subsets"};
        return {std::nullopt, "unknown",
                "2^" + std::to_string(k) + " exceeds the enumeration budget and d > " +
                    std::to_string(2 * collision_half)};
    }
    return {std::nullopt, "unknown", "2^" + std::to_string(k) + " exceeds the enumeration budget"};
}

}  // namespace z2z2u
