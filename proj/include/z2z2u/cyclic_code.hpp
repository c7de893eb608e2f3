#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "z2z2u/binpoly.hpp"
#include "z2z2u/mixed_word.hpp"

namespace z2z2u {

/// C = <(f, 0), (l, g + u a)> in Z2[x]/(x^alpha - 1) x R[x]/(x^beta - 1).
struct CyclicCodeSpec {
    int alpha = 0;
    int beta = 0;
    BinPoly f;
    BinPoly l;
    BinPoly g;
    BinPoly a;

    BinPoly h_f() const { return exact_div(BinPoly::xn_minus_1(alpha), f); }
    BinPoly h_g() const { return exact_div(BinPoly::xn_minus_1(beta), g); }
    BinPoly h_a() const { return exact_div(BinPoly::xn_minus_1(beta), a); }

    /// The two defining generator words.
    MixedWord generator_f() const;
    MixedWord generator_l() const;

    /// Binary block zero, R block zero: f = x^alpha - 1, l = 0, g = a = x^beta - 1.
    static CyclicCodeSpec zero_code(int alpha, int beta);
    /// Whole ambient space: f = g = a = 1, l = 0.
    static CyclicCodeSpec full_space(int alpha, int beta);

    friend bool operator==(const CyclicCodeSpec&, const CyclicCodeSpec&) = default;
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    bool informational = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    /// All non-informational checks passed.
    bool ok() const;
    std::vector<std::string> failures() const;
};

/// The generator conditions: f | x^alpha - 1, a | g | x^beta - 1,
/// deg l < deg f (l = 0 when f = 1), f | ((x^beta - 1)/a) l. The inequality
/// f != ((x^beta - 1)/a) l is reported as informational only.
ValidationReport validate_spec(const CyclicCodeSpec& spec);

/// Throws InvalidSpec listing the failed conditions.
void require_valid(const CyclicCodeSpec& spec);

/// (alpha, beta; k0; k1, k2) together with the degrees t1..t4.
struct CodeType {
    int alpha = 0;
    int beta = 0;
    int k0 = 0;
    int k1 = 0;
    int k2 = 0;
    int t1 = 0;  // deg f
    int t2 = 0;  // deg g
    int t3 = 0;  // deg a
    int t4 = 0;  // deg d1, d1 = gcd(f, ((x^beta - 1)/g) l)

    /// log2 |C| = k0 + 2 k1 + k2.
    int log2_size() const { return k0 + 2 * k1 + k2; }
    std::string to_string() const;
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

CodeType code_type(const CyclicCodeSpec& spec);

/// S1 = {x^i (f,0)}, S2 = {x^i (l, g+ua)}, S3 = {x^i (h_g l, u h_g a)}.
struct SpanningSet {
    std::vector<MixedWord> s1;
    std::vector<MixedWord> s2;
    std::vector<MixedWord> s3;

    std::size_t size() const { return s1.size() + s2.size() + s3.size(); }
    std::vector<MixedWord> all() const;
    /// GF(2) generators of the additive group: S1, then each S2 row w
    /// followed by u*w, then S3.
    std::vector<MixedWord> additive_generators() const;
};

SpanningSet spanning_set(const CyclicCodeSpec& spec);

/// Spanning set built from arbitrary (f, l, g, a) satisfying a | g | x^beta - 1
/// and f | x^alpha - 1 without the remaining generator conditions.
SpanningSet spanning_set_unchecked(const CyclicCodeSpec& spec);

/// Visits every codeword exactly once, Gray-code ordered over the additive
/// generators. Throws BudgetExceeded when |C| > budget.
void enumerate_codewords(const CyclicCodeSpec& spec, const std::function<void(const MixedWord&)>& visit,
                         std::uint64_t budget = std::uint64_t{1} << 24);

std::vector<MixedWord> codewords(const CyclicCodeSpec& spec, std::uint64_t budget = std::uint64_t{1} << 24);

/// GF(2) generators of the R-submodule closed under T generated by `gens`:
/// every shift T^k g and u T^k g for k < lcm(alpha, beta).
std::vector<MixedWord> cyclic_module_generators(const std::vector<MixedWord>& gens);

}  // namespace z2z2u
