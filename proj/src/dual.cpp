#include "z2z2u/dual.hpp"

#include <numeric>

#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"

namespace z2z2u {

namespace {

BinPoly mod_b(const BinPoly& p, int beta) { return reduce_mod_xn1(p, beta); }

int rev_shift(const BinPoly& p, int n) { return n - 1 - p.degree(); }

/// (x^m - 1)/(x^n - 1) = 1 + x^n + ... + x^(m-n).
BinPoly repunit(int m, int n) {
    BinPoly r;
    for (int k = 0; k < m; k += n) r.set_coeff(k, true);
    return r;
}

}  // namespace

DualChainData dual_chain(const CyclicCodeSpec& spec) {
    require_valid(spec);
    if (spec.beta % 2 == 0) throw InvalidSpec("dual generators need odd beta");
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    const BinPoly xa = BinPoly::xn_minus_1(alpha);
    const BinPoly& f = spec.f;
    const BinPoly& l = spec.l;

    DualChainData c;
    c.h_f = spec.h_f();
    c.h_g = spec.h_g();
    c.h_a = spec.h_a();
    const BinPoly hgl = c.h_g * l;
    c.d1 = gcd(f, hgl);
    c.d = gcd(l, f);
    c.d2 = exact_div(f, c.d1);
    c.Q = exact_div(c.d1, c.d);
    const Bezout b1 = egcd(l, f);
    c.alpha1 = b1.s;
    c.alpha2 = b1.t;
    c.d4 = exact_div(l, c.d);
    c.v1 = exact_div(hgl, c.d1);
    const Bezout b2 = egcd(hgl, f);
    c.alpha3 = b2.s;
    c.alpha4 = b2.t;
    c.beta1 = exact_div(c.h_a * l, f);
    c.theta = mod_b(c.alpha3 * c.h_g * c.beta1 + c.alpha4 * c.h_a, beta);
    c.sigma = mod_b(c.alpha1 * c.v1 + c.alpha2 * c.h_g * c.d2, beta);
    c.M = tilde(reduce_mod_xn1(c.alpha1 * (c.Q + c.d2) * c.h_f, alpha), alpha);
    c.h_d = exact_div(xa, c.d);
    c.m = std::lcm(alpha, beta);
    if (!c.theta.is_zero()) {
        c.i = rev_shift(c.theta, beta);
    } else if (!c.sigma.is_zero()) {
        c.i = rev_shift(c.sigma, beta);
    }
    c.j = c.sigma.is_zero() ? c.i : rev_shift(c.sigma, beta);
    return c;
}

std::vector<ValidationCheck> check_chain_identities(const CyclicCodeSpec& spec, const DualChainData& c) {
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    const BinPoly xa = BinPoly::xn_minus_1(alpha);
    const BinPoly xb = BinPoly::xn_minus_1(beta);
    const BinPoly& f = spec.f;
    const BinPoly& l = spec.l;
    const BinPoly hgl = c.h_g * l;
    std::vector<ValidationCheck> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok, false}); };
    add("f h_f = x^alpha - 1", f * c.h_f == xa);
    add("g h_g = x^beta - 1", spec.g * c.h_g == xb);
    add("a h_a = x^beta - 1", spec.a * c.h_a == xb);
    add("d1 = gcd(f, h_g l)", c.d1 == gcd(f, hgl));
    add("d = gcd(l, f)", c.d == gcd(l, f));
    add("f = d1 d2", f == c.d1 * c.d2);
    add("d1 = d Q", c.d1 == c.d * c.Q);
    add("alpha1 l + alpha2 f = d", c.alpha1 * l + c.alpha2 * f == c.d);
    add("l = d d4", l == c.d * c.d4);
    add("h_g l = d1 v1", hgl == c.d1 * c.v1);
    add("alpha3 h_g l + alpha4 f = d1", c.alpha3 * hgl + c.alpha4 * f == c.d1);
    add("h_a l = f beta1", c.h_a * l == f * c.beta1);
    add("theta = alpha3 h_g beta1 + alpha4 h_a",
        mod_b(c.theta, beta) == mod_b(c.alpha3 * c.h_g * c.beta1 + c.alpha4 * c.h_a, beta));
    add("sigma = alpha1 v1 + alpha2 h_g d2",
        mod_b(c.sigma, beta) == mod_b(c.alpha1 * c.v1 + c.alpha2 * c.h_g * c.d2, beta));
    add("M = tilde(alpha1 (Q + d2) h_f)", c.M == tilde(reduce_mod_xn1(c.alpha1 * (c.Q + c.d2) * c.h_f, alpha), alpha));
    return out;
}

BinaryLinearCode DualGenerators::gray_code() const {
    return gray_module_code({first, second}, first.alpha(), first.beta());
}

DualGenerators dual_generators(const CyclicCodeSpec& spec) {
    DualChainData c = dual_chain(spec);
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    const CodeType t = code_type(spec);
    MixedWord first(alpha, beta, tilde(reduce_mod_xn1(c.h_d, alpha), alpha), RPoly{});
    MixedWord second(alpha, beta, c.M, RPoly{tilde(c.theta, beta), tilde(c.sigma, beta)});
    CodeType dt = t;
    dt.k0 = t.t4;
    dt.k1 = t.t1 + t.t3 - t.t4;
    dt.k2 = t.t2 + t.t4 - t.t1 - t.t3;
    return {std::move(first), std::move(second), dt, std::move(c)};
}

std::vector<MixedWord> NormalizedDual::generators() const {
    return {quadruple.generator_f(), quadruple.generator_l()};
}

NormalizedDual normalized_dual(const CyclicCodeSpec& spec) {
    DualChainData c = dual_chain(spec);
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    const BinPoly xb = BinPoly::xn_minus_1(beta);
    NormalizedDual out;
    out.i = c.i;
    out.j = c.j;

    const BinPoly theta_star = reciprocal(c.theta);
    const BinPoly sigma_star = reciprocal(c.sigma);
    if (!c.theta.is_zero() && theta_star.degree() != c.theta.degree())
        out.diagnostics.push_back("deg theta* < deg theta; shift i taken from deg theta");
    if (!c.sigma.is_zero() && sigma_star.degree() != c.sigma.degree())
        out.diagnostics.push_back("deg sigma* < deg sigma; shift j taken from deg sigma");

    // Second tilde generator is exactly (M, x^i (theta* + u x^(j-i) sigma*)).
    const RPoly h{theta_star, mod_b(sigma_star * x_pow_mod(static_cast<long long>(out.j) - out.i, beta), beta)};
    const RPoly target{theta_star, sigma_star};
    if (c.theta.is_zero()) out.diagnostics.push_back("theta = 0; using g' = x^beta - 1");
    if (c.sigma.is_zero()) out.diagnostics.push_back("sigma = 0; u-part of second generator vanishes");

    out.q2 = solve_unit_transfer(h, target, beta);
    out.q1 = rpoly_inverse(out.q2, beta);

    const BinPoly hd_star = reciprocal(c.h_d);
    const long long shift = ((static_cast<long long>(c.m) - out.i) % alpha + alpha) % alpha;
    BinPoly lp = mul_mod(mul_mod(c.M, x_pow_mod(shift, alpha), alpha), reduce_mod_xn1(out.q2.b, alpha), alpha);
    lp = lp % hd_star;

    CyclicCodeSpec& q = out.quadruple;
    q.alpha = alpha;
    q.beta = beta;
    q.f = hd_star;
    q.l = lp;
    q.g = c.theta.is_zero() ? xb : theta_star;
    if (!c.sigma.is_zero()) {
        q.a = sigma_star;
    } else {
        q.a = q.g;
    }
    const ValidationReport vr = validate_spec(q);
    for (const auto& msg : vr.failures()) out.diagnostics.push_back("normalized dual fails: " + msg);
    return out;
}

SpanningSet dual_spanning_set(const NormalizedDual& dual) { return spanning_set(dual.quadruple); }

bool shift_orthogonality(const MixedWord& v, const MixedWord& w) {
    if (v.alpha() != w.alpha() || v.beta() != w.beta())
        throw std::invalid_argument("shift_orthogonality: shape mismatch");
    const int alpha = v.alpha();
    const int beta = v.beta();
    const int m = std::lcm(alpha, beta);
    const BinPoly bin = mul_mod(v.x(), tilde(w.x(), alpha), alpha) * repunit(m, alpha);
    const RPoly r = rpoly_mul_mod(v.y(), tilde(w.y(), beta), beta);
    const BinPoly rb = repunit(m, beta);
    const BinPoly gb = r.b * rb;
    const BinPoly gc = bin + r.c * rb;
    return gb.is_zero() && gc.is_zero();
}

bool is_self_orthogonal(const CyclicCodeSpec& spec) {
    const auto rows = spanning_set(spec).all();
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = p; q < rows.size(); ++q)
            if (!inner_product(rows[p], rows[q]).is_zero()) return false;
    return true;
}

std::string to_string(SelfDualVerdict v) {
    switch (v) {
        case SelfDualVerdict::SelfDual: return "self-dual";
        case SelfDualVerdict::NotSelfDual: return "not self-dual";
        case SelfDualVerdict::StructurallyImpossible: return "structurally impossible (alpha odd)";
    }
    return "?";
}

SelfDualAssessment assess_self_duality(const CyclicCodeSpec& spec) {
    require_valid(spec);
    if (spec.beta % 2 == 0) throw InvalidSpec("self-duality test needs odd beta");
    SelfDualAssessment s;
    s.self_orthogonal = is_self_orthogonal(spec);
    if (spec.alpha % 2 != 0) {
        s.verdict = SelfDualVerdict::StructurallyImpossible;
        return s;
    }
    s.cardinality_matches = code_type(spec).log2_size() == (spec.alpha + 2 * spec.beta) / 2;
    s.verdict = s.self_orthogonal && s.cardinality_matches ? SelfDualVerdict::SelfDual : SelfDualVerdict::NotSelfDual;
    const BinaryLinearCode primal = gray_generator_matrix(spec);
    const BinaryLinearCode dual = dual_generators(spec).gray_code();
    s.gray_witness = canonical_form(primal) == canonical_form(dual);
    return s;
}

bool is_self_dual(const CyclicCodeSpec& spec) {
    return assess_self_duality(spec).verdict == SelfDualVerdict::SelfDual;
}

std::string to_string(IdentityResult r) {
    switch (r) {
        case IdentityResult::Holds: return "holds";
        case IdentityResult::Fails: return "fails";
        case IdentityResult::NotApplicable: return "n/a";
    }
    return "?";
}

IdentityResult selfdual_degree_identity(const CyclicCodeSpec& spec) {
    if (!is_self_dual(spec)) return IdentityResult::NotApplicable;
    const CodeType t = code_type(spec);
    const bool ok = spec.beta + spec.alpha / 2 == t.t1 + t.t2 + t.t3 && spec.alpha == 2 * t.t4;
    return ok ? IdentityResult::Holds : IdentityResult::Fails;
}

std::vector<ValidationCheck> selfdual_divisibility_checks(const CyclicCodeSpec& spec) {
    require_valid(spec);
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    const int m = std::lcm(alpha, beta);
    const BinPoly h_f = spec.h_f();
    const BinPoly h_g = spec.h_g();
    auto rev = [](const BinPoly& p, int n) { return reciprocal(p).shifted(n - p.degree() - 1); };
    std::vector<ValidationCheck> out;
    out.push_back({"h_f | x^(alpha-deg f-1) f*", h_f.is_one() || divides(h_f, rev(spec.f, alpha)), false});
    out.push_back({"h_f | x^(alpha-deg l-1) l*", spec.l.is_zero() || divides(h_f, rev(spec.l, alpha)), false});
    const BinPoly g = mod_b(spec.g, beta);
    out.push_back({"h_g | x^(beta-deg g-1) g*", h_g.is_one() || g.is_zero() || divides(h_g, rev(g, beta)), false});

    const BinPoly ll = mul_mod(spec.l, tilde(spec.l, alpha), alpha);
    const BinPoly a = mod_b(spec.a, beta);
    const BinPoly ag = mod_b(a * tilde(g, beta) + g * tilde(a, beta), beta);
    const BinPoly xa = BinPoly::xn_minus_1(alpha);
    const BinPoly xb = BinPoly::xn_minus_1(beta);
    const bool branch_a = ll.is_zero() && ag.is_zero();
    const bool branch_b = reduce_mod_xn1(ll * xb, m) == reduce_mod_xn1(ag * xa, m);
    out.push_back({"l l~ and a g~ + g a~ relation", branch_a || branch_b, false});
    const bool weighted = reduce_mod_xn1(ll * repunit(m, alpha) + ag * repunit(m, beta), m).is_zero();
    out.push_back({"l l~ (x^m-1)/(x^alpha-1) = (a g~ + g a~)(x^m-1)/(x^beta-1)", weighted, false});
    return out;
}

}  // namespace z2z2u
