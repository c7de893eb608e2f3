#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2z2u/binary_code.hpp"
#include "z2z2u/binpoly.hpp"
#include "z2z2u/cyclic_code.hpp"
#include "z2z2u/mixed_word.hpp"
#include "z2z2u/rpoly.hpp"

namespace z2z2u {

/// Every intermediate of the dual-generator computation. Names follow the
/// usual notation: d1 = gcd(f, h_g l), d = gcd(l, f), f = d1 d2, d1 = d Q,
/// alpha1 l + alpha2 f = d, l = d d4, h_g l = d1 v1,
/// alpha3 h_g l + alpha4 f = d1, h_a l = f beta1,
/// theta = alpha3 h_g beta1 + alpha4 h_a, sigma = alpha1 v1 + alpha2 h_g d2
/// (theta, sigma mod x^beta - 1), M = tilde(alpha1 (Q + d2) h_f).
struct DualChainData {
    BinPoly h_f, h_g, h_a;
    BinPoly d1, d, d2, Q;
    BinPoly alpha1, alpha2, alpha3, alpha4;
    BinPoly beta1, v1, d4;
    BinPoly theta, sigma, M;
    /// (x^alpha - 1)/d
    BinPoly h_d;
    int m = 0;  // lcm(alpha, beta)
    int i = 0;  // beta - 1 - deg theta
    int j = 0;  // beta - 1 - deg sigma
    std::optional<RPoly> q1, q2;
};

/// Requires a valid spec with odd beta; throws InvalidSpec otherwise.
DualChainData dual_chain(const CyclicCodeSpec& spec);

/// Bit-exact check of every defining identity of the chain against `spec`.
/// Usable on externally supplied values as well as on dual_chain output.
std::vector<ValidationCheck> check_chain_identities(const CyclicCodeSpec& spec, const DualChainData& chain);

/// Tilde-form generators of the dual:
/// (tilde((x^alpha - 1)/d), 0) and (M, tilde(theta + u sigma)).
struct DualGenerators {
    MixedWord first;
    MixedWord second;
    CodeType type;  // k0 = t4, k1 = t1 + t3 - t4, k2 = t2 + t4 - t1 - t3
    DualChainData chain;

    /// Phi(C-perp) from the cyclic module spanned by the two generators.
    BinaryLinearCode gray_code() const;
};

DualGenerators dual_generators(const CyclicCodeSpec& spec);

/// Dual in generator-quadruple form (f', l', g', a') =
/// (((x^alpha-1)/d)*, M x^(m-i) q2 mod f', theta*, sigma*).
struct NormalizedDual {
    CyclicCodeSpec quadruple;
    RPoly q1;
    RPoly q2;
    int i = 0;
    int j = 0;
    std::vector<std::string> diagnostics;

    /// The two generator words (f', 0), (l', g' + u a').
    std::vector<MixedWord> generators() const;
};

NormalizedDual normalized_dual(const CyclicCodeSpec& spec);

/// T1, T2, T3 for the dual: the spanning-set construction applied to the
/// normalized dual quadruple. Throws InvalidSpec if that quadruple does not
/// meet the generator conditions.
SpanningSet dual_spanning_set(const NormalizedDual& dual);

/// v is orthogonal to w and all its cyclic shifts
/// iff G(x) = [u a d~ mod x^alpha-1] (x^m-1)/(x^alpha-1)
///          + [b e~ mod x^beta-1] (x^m-1)/(x^beta-1) = 0 mod x^m - 1.
bool shift_orthogonality(const MixedWord& v, const MixedWord& w);

/// Every pair of spanning rows has inner product zero.
bool is_self_orthogonal(const CyclicCodeSpec& spec);

enum class SelfDualVerdict { SelfDual, NotSelfDual, StructurallyImpossible };
std::string to_string(SelfDualVerdict v);

struct SelfDualAssessment {
    SelfDualVerdict verdict = SelfDualVerdict::NotSelfDual;
    bool self_orthogonal = false;
    bool cardinality_matches = false;  // log2|C| == (alpha + 2 beta)/2
    /// Phi(C) == Phi(C-perp) in canonical form; empty when alpha is odd.
    std::optional<bool> gray_witness;
};

/// Self-orthogonality plus the cardinality 2^((alpha+2beta)/2), with the
/// Gray-RREF comparison against the dual as a second witness.
/// Requires odd beta (InvalidSpec otherwise).
SelfDualAssessment assess_self_duality(const CyclicCodeSpec& spec);
bool is_self_dual(const CyclicCodeSpec& spec);

enum class IdentityResult { Holds, Fails, NotApplicable };
std::string to_string(IdentityResult r);

/// beta + alpha/2 = t1 + t2 + t3 together with alpha = 2 t4, for self-dual codes.
IdentityResult selfdual_degree_identity(const CyclicCodeSpec& spec);

/// h_f | x^(alpha-deg f-1) f*, h_f | x^(alpha-deg l-1) l*,
/// h_g | x^(beta-deg g-1) g*, the l l~ versus a g~ + g a~ relation in its
/// two-branch form, and the same relation weighted by the repunits
/// (x^m-1)/(x^alpha-1), (x^m-1)/(x^beta-1). The two-branch form alone is
/// necessary but not sufficient; with the weighted form the checks pass
/// exactly on self-orthogonal codes.
std::vector<ValidationCheck> selfdual_divisibility_checks(const CyclicCodeSpec& spec);

}  // namespace z2z2u
