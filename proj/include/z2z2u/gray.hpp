#pragma once

#include <vector>

#include "z2z2u/binary_code.hpp"
#include "z2z2u/bitvec.hpp"
#include "z2z2u/cyclic_code.hpp"
#include "z2z2u/mixed_word.hpp"

namespace z2z2u {

/// Phi(x | r + u q) = (x, q, r + q), length alpha + 2 beta.
BitVec gray_map(const MixedWord& v);

/// Inverse of gray_map for the given block lengths.
MixedWord gray_inverse(const BitVec& bits, int alpha, int beta);

/// Binary code spanned by the Gray images of arbitrary words (no closure).
BinaryLinearCode gray_code_of(const std::vector<MixedWord>& words, int alpha, int beta);

/// Phi(C) from the additive generators of the spanning set: S1 and S3 rows
/// give one image row each, every S2 row w gives Phi(w) and Phi(u w).
BinaryLinearCode gray_generator_matrix(const CyclicCodeSpec& spec);

/// Phi of the cyclic R-submodule generated by `gens`.
BinaryLinearCode gray_module_code(const std::vector<MixedWord>& gens, int alpha, int beta);

}  // namespace z2z2u
