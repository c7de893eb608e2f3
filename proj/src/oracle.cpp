#include "z2z2u/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "z2z2u/errors.hpp"

namespace z2z2u {

namespace {

struct Packed {
    std::uint64_t x = 0, r = 0, q = 0;
};

Packed pack(const MixedWord& w) {
    Packed p;
    for (int i = 0; i < w.alpha(); ++i)
        if (w.bit(i)) p.x |= std::uint64_t{1} << i;
    for (int j = 0; j < w.beta(); ++j) {
        const RElem e = w.elem(j);
        if (e.r) p.r |= std::uint64_t{1} << j;
        if (e.q) p.q |= std::uint64_t{1} << j;
    }
    return p;
}

Packed unpack_index(std::uint64_t idx, int alpha, int beta) {
    Packed p;
    p.x = alpha == 0 ? 0 : idx & ((std::uint64_t{1} << alpha) - 1);
    idx >>= alpha;
    for (int j = 0; j < beta; ++j, idx >>= 2) {
        if (idx & 1) p.r |= std::uint64_t{1} << j;
        if (idx & 2) p.q |= std::uint64_t{1} << j;
    }
    return p;
}

bool orthogonal(const Packed& v, const Packed& w) {
    const int r = std::popcount(v.r & w.r) & 1;
    const int q = (std::popcount(v.x & w.x) + std::popcount(v.r & w.q) + std::popcount(v.q & w.r)) & 1;
    return r == 0 && q == 0;
}

}  // namespace

AmbientIndex::AmbientIndex(int alpha_, int beta_) : alpha(alpha_), beta(beta_) {
    if (alpha < 0 || beta < 0 || alpha + 2 * beta > 62) throw std::invalid_argument("AmbientIndex: shape out of range");
}

std::uint64_t AmbientIndex::index(const MixedWord& w) const {
    if (w.alpha() != alpha || w.beta() != beta) throw std::invalid_argument("AmbientIndex: shape mismatch");
    const Packed p = pack(w);
    std::uint64_t idx = 0;
    for (int j = beta - 1; j >= 0; --j) idx = (idx << 2) | ((p.r >> j) & 1) | (((p.q >> j) & 1) << 1);
    return (idx << alpha) | p.x;
}

MixedWord AmbientIndex::word(std::uint64_t idx) const {
    const Packed p = unpack_index(idx, alpha, beta);
    std::vector<bool> bits(alpha);
    std::vector<RElem> elems(beta);
    for (int i = 0; i < alpha; ++i) bits[i] = (p.x >> i) & 1;
    for (int j = 0; j < beta; ++j) elems[j] = RElem{((p.r >> j) & 1) != 0, ((p.q >> j) & 1) != 0};
    return MixedWord::from_elements(bits, elems);
}

std::vector<MixedWord> brute_force_dual(const std::vector<MixedWord>& code, int alpha, int beta,
                                        const OracleLimits& limits) {
    const AmbientIndex amb(alpha, beta);
    if (amb.total() > limits.max_ambient)
        throw BudgetExceeded("ambient space too large for brute-force dual", alpha + 2 * beta);
    std::vector<Packed> cw;
    cw.reserve(code.size());
    for (const auto& v : code) {
        if (v.alpha() != alpha || v.beta() != beta) throw std::invalid_argument("brute_force_dual: shape mismatch");
        cw.push_back(pack(v));
    }
    const std::uint64_t total = amb.total();
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::vector<std::uint64_t>> parts(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                const std::uint64_t lo = total * t / workers;
                const std::uint64_t hi = total * (t + 1) / workers;
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    const Packed w = unpack_index(idx, alpha, beta);
                    bool ok = true;
                    for (const auto& v : cw) {
                        if (!orthogonal(v, w)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) parts[t].push_back(idx);
                }
            });
        }
    }
    std::vector<MixedWord> out;
    for (const auto& part : parts)
        for (std::uint64_t idx : part) out.push_back(amb.word(idx));
    return out;
}

std::vector<std::uint64_t> index_set(const std::vector<MixedWord>& words, int alpha, int beta) {
    const AmbientIndex amb(alpha, beta);
    std::vector<std::uint64_t> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(amb.index(w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool brute_force_cyclic_closure(const std::vector<MixedWord>& code) {
    if (code.empty()) return true;
    const int alpha = code.front().alpha();
    const int beta = code.front().beta();
    const auto members = index_set(code, alpha, beta);
    const AmbientIndex amb(alpha, beta);
    for (const auto& v : code)
        if (!std::binary_search(members.begin(), members.end(), amb.index(cyclic_shift(v)))) return false;
    return true;
}

int brute_force_min_weight(const std::vector<MixedWord>& code, const OracleLimits& limits) {
    if (code.empty()) throw std::invalid_argument("brute_force_min_weight: empty word set");
    if (code.size() > limits.max_words) throw BudgetExceeded("word set too large for brute-force weight", 0);
    const int n = code.front().alpha() + 2 * code.front().beta();
    int best = n + 1;
    for (const auto& v : code)
        if (!v.is_zero()) best = std::min(best, v.lee_weight());
    return best;
}

}  // namespace z2z2u
