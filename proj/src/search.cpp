#include "z2z2u/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "z2z2u/bitvec.hpp"
#include "z2z2u/cyclotomic.hpp"
#include "z2z2u/dual.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"

namespace z2z2u {

namespace {

bool self_shift_orthogonal_f(const BinPoly& f, int alpha) {
    return mul_mod(f, tilde(reduce_mod_xn1(f, alpha), alpha), alpha).is_zero();
}

bool self_shift_orthogonal_g(const BinPoly& g, int beta) {
    const BinPoly gr = reduce_mod_xn1(g, beta);
    return mul_mod(gr, tilde(gr, beta), beta).is_zero();
}

BinPoly combine(const std::vector<BinPoly>& basis, std::uint64_t mask) {
    BinPoly l;
    for (std::size_t k = 0; k < basis.size() && mask != 0; ++k, mask >>= 1)
        if (mask & 1) l += basis[k];
    return l;
}

bool meets(const CyclicCodeSpec& spec, Requirement req) {
    if (req == Requirement::Any) return true;
    const MixedWord g1 = spec.generator_f();
    const MixedWord g2 = spec.generator_l();
    if (!shift_orthogonality(g1, g1) || !shift_orthogonality(g1, g2) || !shift_orthogonality(g2, g2)) return false;
    if (req == Requirement::SelfOrthogonal) return true;
    return code_type(spec).log2_size() * 2 == spec.alpha + 2 * spec.beta;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
}

}  // namespace

std::vector<BinPoly> l_space_basis(const BinPoly& f, const BinPoly& h_a, int alpha, bool orthogonal_to_f) {
    const int t1 = f.degree();
    if (t1 <= 0) return {};
    // Column k holds the constraint images of x^k.
    const int rows_a = t1;
    const int rows_b = orthogonal_to_f ? alpha : 0;
    BitMatrix m(static_cast<std::size_t>(t1));
    std::vector<BitVec> eq(static_cast<std::size_t>(rows_a + rows_b), BitVec(static_cast<std::size_t>(t1)));
    const BinPoly ha_mod = h_a % f;
    for (int k = 0; k < t1; ++k) {
        const BinPoly img = (ha_mod.shifted(k)) % f;
        for (int e : img.exponents()) eq[e].set(k);
        if (orthogonal_to_f) {
            const BinPoly img2 = mul_mod(f, tilde(BinPoly::monomial(k), alpha), alpha);
            for (int e : img2.exponents()) eq[rows_a + e].set(k);
        }
    }
    for (auto& r : eq) m.add_row(std::move(r));
    std::vector<BinPoly> basis;
    for (const BitVec& v : nullspace(m)) {
        BinPoly p;
        for (int k = 0; k < t1; ++k)
            if (v.get(k)) p.set_coeff(k, true);
        basis.push_back(std::move(p));
    }
    return basis;
}

std::uint64_t CandidateBlock::count() const {
    return std::uint64_t{1} << std::min<std::size_t>(l_basis.size(), 63);
}

std::vector<CandidateBlock> candidate_blocks(int alpha, int beta, Requirement require, int l_dim_cap) {
    if (alpha < 1 || beta < 1) throw InvalidSpec("alpha and beta must be positive");
    const bool orth = require != Requirement::Any;
    if (orth && beta % 2 == 0) throw InvalidSpec("self-orthogonal and self-dual searches need odd beta");
    std::vector<CandidateBlock> out;
    if (require == Requirement::SelfDual && alpha % 2 != 0) return out;
    const auto fs = enumerate_divisors(factor_xn_minus_1(alpha));
    const auto gs = enumerate_divisors(factor_xn_minus_1(beta));
    const BinPoly xb = BinPoly::xn_minus_1(beta);
    for (const auto& f : fs) {
        if (orth && !self_shift_orthogonal_f(f.poly, alpha)) continue;
        for (const auto& g : gs) {
            if (orth && !self_shift_orthogonal_g(g.poly, beta)) continue;
            for (const auto& a : gs) {
                if (!divisor_divides(a, g)) continue;
                if (require == Requirement::SelfDual &&
                    f.poly.degree() + g.poly.degree() + a.poly.degree() != alpha / 2 + beta)
                    continue;
                CandidateBlock b{f.poly, g.poly, a.poly, l_space_basis(f.poly, exact_div(xb, a.poly), alpha, orth), false};
                b.sampled = static_cast<int>(b.l_basis.size()) > l_dim_cap;
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

void for_each_candidate(const SearchConfig& config, const std::function<void(const CyclicCodeSpec&)>& visit) {
    const auto blocks = candidate_blocks(config.alpha, config.beta, config.require, config.l_dim_cap);
    double total = 0;
    double full_log2 = 0;
    for (const auto& b : blocks) {
        const int dim = static_cast<int>(b.l_basis.size());
        total += std::ldexp(1.0, std::min(dim, config.l_dim_cap));
        full_log2 = std::max(full_log2, static_cast<double>(dim));
    }
    if (total > static_cast<double>(config.max_candidates))
        throw BudgetExceeded("search space holds " + std::to_string(static_cast<std::uint64_t>(total)) +
                                 " candidates, over the budget of " + std::to_string(config.max_candidates),
                             std::log2(total));
    std::mt19937_64 rng(config.seed);
    for (const auto& b : blocks) {
        CyclicCodeSpec spec{config.alpha, config.beta, b.f, {}, b.g, b.a};
        if (!b.sampled) {
            for (std::uint64_t mask = 0; mask < b.count(); ++mask) {
                spec.l = combine(b.l_basis, mask);
                visit(spec);
            }
        } else {
            const std::uint64_t draws = std::uint64_t{1} << config.l_dim_cap;
            for (std::uint64_t s = 0; s < draws; ++s) {
                BinPoly l;
                for (const auto& v : b.l_basis)
                    if (rng() & 1) l += v;
                spec.l = l;
                visit(spec);
            }
        }
    }
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j;
    j["candidates"] = candidates;
    j["matched"] = matched;
    j["duplicates"] = duplicates;
    j["notices"] = notices;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) j["rows"].push_back(row_to_json(r));
    return j;
}

SearchResult search(const SearchConfig& config) {
    SearchResult result;
    if (config.max_candidates == 0) throw InvalidSpec("max_candidates must be positive");
    if (config.require == Requirement::SelfDual && config.alpha % 2 != 0) {
        result.notices.push_back("alpha odd: alpha + 2 beta is odd, so no self-dual code exists");
        return result;
    }
    std::vector<CyclicCodeSpec> candidates;
    for_each_candidate(config, [&](const CyclicCodeSpec& s) { candidates.push_back(s); });
    result.candidates = candidates.size();

    // Filter and key in parallel; merge in candidate order.
    std::vector<std::optional<std::vector<BitVec>>> keys(candidates.size());
    parallel_for(candidates.size(), config.threads, [&](std::size_t i) {
        if (!validate_spec(candidates[i]).ok() || !meets(candidates[i], config.require)) return;
        keys[i] = canonical_form(gray_generator_matrix(candidates[i])).rows();
    });
    std::map<std::vector<BitVec>, std::size_t> seen;
    std::vector<std::size_t> emitted;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!keys[i]) continue;
        ++result.matched;
        if (seen.emplace(std::move(*keys[i]), i).second)
            emitted.push_back(i);
        else
            ++result.duplicates;
    }

    VerifyOptions opts;
    opts.distance_budget = config.distance_budget;
    opts.compute_distance = config.compute_distance;
    opts.collision_first = true;
    std::vector<ReportRow> rows(emitted.size());
    parallel_for(emitted.size(), config.threads, [&](std::size_t i) {
        rows[i] = verify(candidates[emitted[i]], opts, "candidate " + std::to_string(emitted[i]));
    });
    for (auto& r : rows) {
        if (config.min_gray_distance > 0 &&
            (!r.gray_distance.d || *r.gray_distance.d < config.min_gray_distance))
            continue;
        if (config.require == Requirement::SelfDual && r.self_dual.gray_witness != std::optional<bool>(true))
            r.diagnostics.push_back("Gray witness disagrees with the self-dual verdict");
        result.rows.push_back(std::move(r));
    }
    return result;
}

}  // namespace z2z2u
