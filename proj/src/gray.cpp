#include "z2z2u/gray.hpp"

#include <stdexcept>

namespace z2z2u {

BitVec gray_map(const MixedWord& v) {
    const auto alpha = static_cast<std::size_t>(v.alpha());
    const auto beta = static_cast<std::size_t>(v.beta());
    BitVec out(alpha + 2 * beta);
    for (int i : v.x().exponents()) out.set(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < beta; ++j) {
        const RElem e = v.elem(static_cast<int>(j));
        if (e.q) out.set(alpha + j);
        if (e.r != e.q) out.set(alpha + beta + j);
    }
    return out;
}

MixedWord gray_inverse(const BitVec& bits, int alpha, int beta) {
    const auto a = static_cast<std::size_t>(alpha);
    const auto b = static_cast<std::size_t>(beta);
    if (bits.size() != a + 2 * b) throw std::invalid_argument("gray_inverse: length mismatch");
    std::vector<bool> x(a);
    std::vector<RElem> y(b);
    for (std::size_t i = 0; i < a; ++i) x[i] = bits.get(i);
    for (std::size_t j = 0; j < b; ++j) {
        const bool q = bits.get(a + j);
        const bool rq = bits.get(a + b + j);
        y[j] = RElem{rq != q, q};
    }
    return MixedWord::from_elements(x, y);
}

BinaryLinearCode gray_code_of(const std::vector<MixedWord>& words, int alpha, int beta) {
    std::vector<BitVec> rows;
    rows.reserve(words.size());
    for (const auto& w : words) rows.push_back(gray_map(w));
    return BinaryLinearCode(static_cast<std::size_t>(alpha + 2 * beta), std::move(rows));
}

BinaryLinearCode gray_generator_matrix(const CyclicCodeSpec& spec) {
    return gray_code_of(spanning_set(spec).additive_generators(), spec.alpha, spec.beta);
}

BinaryLinearCode gray_module_code(const std::vector<MixedWord>& gens, int alpha, int beta) {
    return gray_code_of(cyclic_module_generators(gens), alpha, beta);
}

}  // namespace z2z2u
