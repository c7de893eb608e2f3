#include "z2z2u/css.hpp"

#include "z2z2u/dual.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"

namespace z2z2u {

std::string QuantumParams::to_string() const {
    return "[[" + std::to_string(N) + "," + std::to_string(Kq) + "," + (dq ? std::to_string(*dq) : "?") + "]]";
}

BinaryLinearCode gray_dual_code(const CyclicCodeSpec& spec, std::vector<std::string>* diagnostics) {
    if (spec.beta % 2 == 1) return dual_generators(spec).gray_code();
    if (diagnostics) diagnostics->push_back("beta even; Phi(C-perp) taken as the binary dual of Phi(C)");
    return gray_generator_matrix(spec).dual();
}

QuantumParams css_params(const CyclicCodeSpec& spec, std::uint64_t distance_budget, bool with_distance,
                         bool collision_first) {
    require_valid(spec);
    if (!is_self_orthogonal(spec)) throw PreconditionError("CSS construction needs a self-orthogonal code");
    QuantumParams p;
    const BinaryLinearCode primal = gray_generator_matrix(spec);
    BinaryLinearCode dual = gray_dual_code(spec, &p.diagnostics);
    if (!dual.contains(primal)) throw PreconditionError("Phi(C) is not contained in Phi(C-perp)");
    p.N = spec.alpha + 2 * spec.beta;
    p.K = static_cast<int>(primal.dimension());
    p.Kq = p.N - 2 * p.K;
    if (!with_distance) return p;
    const DistanceResult dr = compute_distance(dual, distance_budget, 4, collision_first);
    p.dq = dr.d;
    p.distance_method = dr.method;
    if (!dr.note.empty()) p.diagnostics.push_back(dr.note);
    return p;
}

}  // namespace z2z2u
