#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "z2z2u/binpoly.hpp"
#include "z2z2u/cyclic_code.hpp"
#include "z2z2u/report.hpp"

namespace z2z2u {

struct SearchConfig {
    int alpha = 0;
    int beta = 0;
    std::uint64_t max_candidates = 1'000'000;
    Requirement require = Requirement::Any;
    int min_gray_distance = 0;
    /// l-spaces of dimension above this are sampled (2^cap draws) instead of enumerated.
    int l_dim_cap = 16;
    std::uint64_t seed = 0x2f6b5a1dULL;
    std::uint64_t distance_budget = std::uint64_t{1} << 32;
    bool compute_distance = true;
    unsigned threads = 0;
};

/// Basis of the l-space for fixed f and a: all l with deg l < deg f and
/// f | ((x^beta-1)/a) l, intersected with f l~ = 0 mod x^alpha - 1 when
/// `orthogonal_to_f` is set.
std::vector<BinPoly> l_space_basis(const BinPoly& f, const BinPoly& h_a, int alpha, bool orthogonal_to_f);

/// One (f, g, a) choice with its l-space.
struct CandidateBlock {
    BinPoly f, g, a;
    std::vector<BinPoly> l_basis;
    bool sampled = false;
    std::uint64_t count() const;
};

/// Candidate blocks in divisor-enumeration order after the cheap necessary
/// conditions of `require` have been applied.
std::vector<CandidateBlock> candidate_blocks(int alpha, int beta, Requirement require, int l_dim_cap);

/// Visits every candidate quadruple in deterministic order. Throws
/// BudgetExceeded when the candidate count exceeds max_candidates.
void for_each_candidate(const SearchConfig& config, const std::function<void(const CyclicCodeSpec&)>& visit);

struct SearchResult {
    std::vector<ReportRow> rows;
    std::uint64_t candidates = 0;
    std::uint64_t matched = 0;
    std::uint64_t duplicates = 0;
    std::vector<std::string> notices;
    nlohmann::json to_json() const;
};

/// Emits every candidate meeting the requirement, one row per distinct
/// Gray canonical form, in candidate order.
SearchResult search(const SearchConfig& config);

}  // namespace z2z2u
