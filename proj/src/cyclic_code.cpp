#include "z2z2u/cyclic_code.hpp"

#include <bit>
#include <numeric>

#include "z2z2u/bitvec.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"

namespace z2z2u {

MixedWord CyclicCodeSpec::generator_f() const { return MixedWord(alpha, beta, f, RPoly{}); }

MixedWord CyclicCodeSpec::generator_l() const { return MixedWord(alpha, beta, l, RPoly{g, a}); }

CyclicCodeSpec CyclicCodeSpec::zero_code(int alpha, int beta) {
    return {alpha, beta, BinPoly::xn_minus_1(alpha), {}, BinPoly::xn_minus_1(beta), BinPoly::xn_minus_1(beta)};
}

CyclicCodeSpec CyclicCodeSpec::full_space(int alpha, int beta) {
    return {alpha, beta, BinPoly::one(), {}, BinPoly::one(), BinPoly::one()};
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.informational && !c.passed) return false;
    return true;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.informational && !c.passed) out.push_back(c.name);
    return out;
}

ValidationReport validate_spec(const CyclicCodeSpec& s) {
    ValidationReport rep;
    auto add = [&](std::string name, bool ok, bool info = false) { rep.checks.push_back({std::move(name), ok, info}); };

    add("alpha >= 1", s.alpha >= 1);
    add("beta >= 1", s.beta >= 1);
    if (s.alpha < 1 || s.beta < 1) return rep;

    const BinPoly xa = BinPoly::xn_minus_1(s.alpha);
    const BinPoly xb = BinPoly::xn_minus_1(s.beta);
    add("f | x^alpha-1", divides(s.f, xa));
    add("g | x^beta-1", divides(s.g, xb));
    add("a | g", divides(s.a, s.g));
    add("deg l < deg f", s.l.is_zero() || (!s.f.is_zero() && s.l.degree() < s.f.degree()));

    const bool a_ok = divides(s.a, xb);
    if (a_ok && !s.f.is_zero()) {
        const BinPoly hal = (xb / s.a) * s.l;
        add("f | ((x^beta-1)/a) l", divides(s.f, hal));
        add("f != ((x^beta-1)/a) l", s.f != hal, true);
    } else {
        add("f | ((x^beta-1)/a) l", false);
    }
    return rep;
}

void require_valid(const CyclicCodeSpec& spec) {
    const auto rep = validate_spec(spec);
    if (rep.ok()) return;
    std::string msg = "invalid generator quadruple:";
    for (const auto& f : rep.failures()) msg += " [" + f + "]";
    throw InvalidSpec(msg);
}

std::string CodeType::to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ";" + std::to_string(k0) + ";" +
           std::to_string(k1) + "," + std::to_string(k2) + ")";
}

CodeType code_type(const CyclicCodeSpec& spec) {
    require_valid(spec);
    const BinPoly d1 = gcd(spec.f, spec.h_g() * spec.l);
    CodeType t;
    t.alpha = spec.alpha;
    t.beta = spec.beta;
    t.t1 = spec.f.degree();
    t.t2 = spec.g.degree();
    t.t3 = spec.a.degree();
    t.t4 = d1.degree();
    t.k0 = spec.alpha - t.t4;
    t.k1 = spec.beta - t.t2;
    t.k2 = t.t2 + t.t4 - t.t1 - t.t3;
    return t;
}

std::vector<MixedWord> SpanningSet::all() const {
    std::vector<MixedWord> out = s1;
    out.insert(out.end(), s2.begin(), s2.end());
    out.insert(out.end(), s3.begin(), s3.end());
    return out;
}

std::vector<MixedWord> SpanningSet::additive_generators() const {
    std::vector<MixedWord> out = s1;
    for (const auto& w : s2) {
        out.push_back(w);
        out.push_back(w.scaled(RElem::u()));
    }
    out.insert(out.end(), s3.begin(), s3.end());
    return out;
}

SpanningSet spanning_set_unchecked(const CyclicCodeSpec& spec) {
    SpanningSet s;
    const int df = spec.f.degree();
    const int dg = spec.g.degree();
    const int da = spec.a.degree();
    const MixedWord gf = spec.generator_f();
    const MixedWord gl = spec.generator_l();
    if (!spec.f.is_zero())
        for (int i = 0; i < spec.alpha - df; ++i) s.s1.push_back(gf.shifted(i));
    if (spec.g.is_zero() || spec.a.is_zero()) throw InvalidSpec("spanning set needs nonzero g and a");
    for (int i = 0; i < spec.beta - dg; ++i) s.s2.push_back(gl.shifted(i));
    if (dg > da) {
        const BinPoly hg = spec.h_g();
        const MixedWord g3(spec.alpha, spec.beta, hg * spec.l, RPoly{{}, hg * spec.a});
        for (int i = 0; i < dg - da; ++i) s.s3.push_back(g3.shifted(i));
    }
    return s;
}

SpanningSet spanning_set(const CyclicCodeSpec& spec) {
    require_valid(spec);
    return spanning_set_unchecked(spec);
}

void enumerate_codewords(const CyclicCodeSpec& spec, const std::function<void(const MixedWord&)>& visit,
                         std::uint64_t budget) {
    const auto gens = spanning_set(spec).additive_generators();

    // Keep an independent subset; with odd beta the generators are already
    // independent, but even beta can introduce dependencies.
    std::vector<MixedWord> basis;
    BitMatrix reduced(static_cast<std::size_t>(spec.alpha + 2 * spec.beta));
    for (const auto& g : gens) {
        BitMatrix trial = reduced;
        trial.add_row(gray_map(g));
        if (rank(trial) > reduced.rows.size()) {
            reduced.add_row(gray_map(g));
            basis.push_back(g);
        }
    }

    const std::size_t k = basis.size();
    if (k >= 64 || (std::uint64_t{1} << k) > budget)
        throw BudgetExceeded("code has 2^" + std::to_string(k) + " codewords, enumeration budget is " +
                                 std::to_string(budget),
                             static_cast<double>(k));
    MixedWord cur(spec.alpha, spec.beta);
    visit(cur);
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur += basis[static_cast<std::size_t>(std::countr_zero(i))];
        visit(cur);
    }
}

std::vector<MixedWord> codewords(const CyclicCodeSpec& spec, std::uint64_t budget) {
    std::vector<MixedWord> out;
    enumerate_codewords(spec, [&](const MixedWord& w) { out.push_back(w); }, budget);
    return out;
}

std::vector<MixedWord> cyclic_module_generators(const std::vector<MixedWord>& gens) {
    std::vector<MixedWord> out;
    for (const auto& g : gens) {
        const int alpha = g.alpha();
        const int beta = g.beta();
        const int m = alpha == 0 ? beta : beta == 0 ? alpha : std::lcm(alpha, beta);
        for (int k = 0; k < m; ++k) {
            MixedWord s = g.shifted(k);
            out.push_back(s.scaled(RElem::u()));
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace z2z2u
