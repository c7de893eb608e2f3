#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z2u/binary_code.hpp"
#include "z2z2u/cyclic_code.hpp"

namespace z2z2u {

/// [[N, K_q, d_q]] for the CSS code built from Phi(C) contained in Phi(C-perp).
struct QuantumParams {
    int N = 0;
    int K = 0;   // dim Phi(C)
    int Kq = 0;  // N - 2K
    std::optional<int> dq;
    std::string distance_method;
    std::vector<std::string> diagnostics;

    /// "[[56,6,6]]"; "?" stands in for an unknown distance.
    std::string to_string() const;
};

/// Requires C self-orthogonal (PreconditionError otherwise).
/// d_q is the minimum distance of Phi(C-perp), found by enumeration within
/// `distance_budget` codewords and by the collision search beyond it.
/// With `with_distance` false d_q is left empty.
QuantumParams css_params(const CyclicCodeSpec& spec, std::uint64_t distance_budget = std::uint64_t{1} << 32,
                         bool with_distance = true, bool collision_first = false);

/// Phi(C-perp) for any beta: the dual generators for odd beta, the binary
/// dual of Phi(C) otherwise.
BinaryLinearCode gray_dual_code(const CyclicCodeSpec& spec, std::vector<std::string>* diagnostics = nullptr);

}  // namespace z2z2u
