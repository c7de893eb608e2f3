#pragma once

#include <cstdint>
#include <vector>

#include "z2z2u/mixed_word.hpp"

namespace z2z2u {

/// Bijection between [0, 2^alpha 4^beta) and Z2^alpha x R^beta: the low alpha
/// bits are the binary block, then one base-4 digit r + 2q per R coordinate.
struct AmbientIndex {
    int alpha = 0;
    int beta = 0;

    AmbientIndex(int alpha_, int beta_);
    /// 2^alpha 4^beta; needs alpha + 2 beta <= 62.
    std::uint64_t total() const { return std::uint64_t{1} << (alpha + 2 * beta); }
    std::uint64_t index(const MixedWord& w) const;
    MixedWord word(std::uint64_t index) const;
};

struct OracleLimits {
    /// Largest ambient space brute_force_dual will scan.
    std::uint64_t max_ambient = std::uint64_t{1} << 22;
    /// Largest word set brute_force_min_weight will accept.
    std::uint64_t max_words = std::uint64_t{1} << 20;
};

/// Every W of the ambient space with <V, W> = 0 for all V in `code`, in
/// ambient-index order. Throws BudgetExceeded when the ambient space is over
/// the limit.
std::vector<MixedWord> brute_force_dual(const std::vector<MixedWord>& code, int alpha, int beta,
                                        const OracleLimits& limits = {});

/// True iff T(v) is in the set for every v.
bool brute_force_cyclic_closure(const std::vector<MixedWord>& code);

/// Minimum Hamming-plus-Lee weight over nonzero words; alpha + 2 beta + 1 when
/// there are none. Requires at least one word to fix the shape.
int brute_force_min_weight(const std::vector<MixedWord>& code, const OracleLimits& limits = {});

/// Words as sorted ambient indices, for set comparison.
std::vector<std::uint64_t> index_set(const std::vector<MixedWord>& words, int alpha, int beta);

}  // namespace z2z2u
