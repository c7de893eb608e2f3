#include "z2z2u/report.hpp"

#include <algorithm>
#include <sstream>

#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"
#include "z2z2u/oracle.hpp"
#include "z2z2u/search.hpp"

namespace z2z2u {

using nlohmann::json;

namespace {

int read_int(const json& j, const char* field) {
    if (!j.contains(field)) throw ParseError(field, "missing field");
    const json& v = j.at(field);
    if (!v.is_number_integer()) throw ParseError(field, "expected an integer");
    const int n = v.get<int>();
    if (n < 0) throw ParseError(field, "must be non-negative");
    return n;
}

BinPoly read_poly(const json& j, const char* field) {
    if (!j.contains(field)) throw ParseError(field, "missing field");
    const json& v = j.at(field);
    if (!v.is_string()) throw ParseError(field, "expected an exponent-list string");
    return parse_exponent_string(v.get<std::string>(), field);
}

std::string bracket(int n, int k, const std::optional<int>& d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : "?") + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json checks_to_json(const std::vector<ValidationCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"informational", c.informational}});
    return arr;
}

json word_to_json(const MixedWord& w) {
    return {{"x", to_exponent_string(w.x())}, {"y", to_exponent_string(w.y())}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

/// Every word of the binary code mapped back through the Gray map.
std::vector<MixedWord> span_words(const BinaryLinearCode& code, int alpha, int beta) {
    const std::size_t k = code.dimension();
    if (k >= 40) throw BudgetExceeded("code too large to list", static_cast<double>(k));
    std::vector<MixedWord> out;
    out.reserve(std::size_t{1} << k);
    BitVec cur(code.length());
    out.push_back(gray_inverse(cur, alpha, beta));
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        cur ^= code.rows()[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(gray_inverse(cur, alpha, beta));
    }
    return out;
}

CyclicCodeSpec make(int alpha, int beta, std::initializer_list<int> f, std::initializer_list<int> l,
                    std::initializer_list<int> g, std::initializer_list<int> a) {
    return {alpha, beta, BinPoly::from_exponents(f), BinPoly::from_exponents(l), BinPoly::from_exponents(g),
            BinPoly::from_exponents(a)};
}

}  // namespace

CyclicCodeSpec parse_spec_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("spec", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec", "expected a JSON object");
    CyclicCodeSpec s;
    s.alpha = read_int(j, "alpha");
    s.beta = read_int(j, "beta");
    s.f = read_poly(j, "f");
    s.l = read_poly(j, "l");
    s.g = read_poly(j, "g");
    s.a = read_poly(j, "a");
    return s;
}

json spec_to_json(const CyclicCodeSpec& s) {
    return {{"alpha", s.alpha},
            {"beta", s.beta},
            {"f", to_exponent_string(s.f)},
            {"l", to_exponent_string(s.l)},
            {"g", to_exponent_string(s.g)},
            {"a", to_exponent_string(s.a)}};
}

std::string ReportRow::gray_string() const { return bracket(gray_n, gray_k, gray_distance.d); }

ReportRow verify(const CyclicCodeSpec& spec, const VerifyOptions& opts, std::string label) {
    ReportRow row;
    row.label = std::move(label);
    row.spec = spec;
    row.validation = validate_spec(spec);
    if (!row.validation.ok()) {
        row.diagnostics = row.validation.failures();
        return row;
    }
    row.type = code_type(spec);
    const BinaryLinearCode gray = gray_generator_matrix(spec);
    row.gray_n = spec.alpha + 2 * spec.beta;
    row.gray_k = static_cast<int>(gray.dimension());
    if (row.gray_k != row.type->log2_size())
        row.diagnostics.push_back("Gray image dimension " + std::to_string(row.gray_k) + " differs from log2|C| " +
                                  std::to_string(row.type->log2_size()));
    if (opts.compute_distance) {
        row.gray_distance = compute_distance(gray, opts.distance_budget, 4, opts.collision_first);
        if (!row.gray_distance.note.empty()) row.diagnostics.push_back(row.gray_distance.note);
    } else {
        row.gray_distance.method = "skipped";
    }
    row.self_orthogonal = is_self_orthogonal(spec);
    if (spec.beta % 2 == 1) {
        row.self_dual = assess_self_duality(spec);
    } else {
        row.diagnostics.push_back("beta even: type formula and self-duality test not applicable");
    }
    if (row.self_dual.gray_witness && *row.self_dual.gray_witness != (row.self_dual.verdict == SelfDualVerdict::SelfDual))
        row.diagnostics.push_back("Gray-RREF witness disagrees with the self-dual verdict");
    if (row.self_dual.verdict == SelfDualVerdict::SelfDual) {
        const CodeType& t = *row.type;
        const bool ok = spec.beta + spec.alpha / 2 == t.t1 + t.t2 + t.t3 && spec.alpha == 2 * t.t4;
        row.degree_identity = ok ? IdentityResult::Holds : IdentityResult::Fails;
    } else {
        row.degree_identity = IdentityResult::NotApplicable;
    }
    row.dual_gray_k = row.gray_n - row.gray_k;
    if (row.self_orthogonal) {
        row.divisibility = selfdual_divisibility_checks(spec);
        row.css = css_params(spec, opts.distance_budget, opts.compute_distance, opts.collision_first);
        for (const auto& d : row.css->diagnostics) row.diagnostics.push_back(d);
    }
    return row;
}

json row_to_json(const ReportRow& r) {
    json j;
    j["label"] = r.label;
    j["spec"] = spec_to_json(r.spec);
    j["valid"] = r.valid();
    j["validation"] = checks_to_json(r.validation.checks);
    j["diagnostics"] = r.diagnostics;
    if (!r.valid()) return j;
    const CodeType& t = *r.type;
    j["type"] = t.to_string();
    j["k0"] = t.k0;
    j["k1"] = t.k1;
    j["k2"] = t.k2;
    j["t"] = {t.t1, t.t2, t.t3, t.t4};
    j["log2_size"] = t.log2_size();
    j["self_orthogonal"] = r.self_orthogonal;
    j["self_dual"] = r.self_dual.verdict == SelfDualVerdict::SelfDual;
    j["self_dual_verdict"] = to_string(r.self_dual.verdict);
    j["cardinality_matches"] = r.self_dual.cardinality_matches;
    j["gray_witness"] = r.self_dual.gray_witness ? json(*r.self_dual.gray_witness) : json(nullptr);
    j["degree_identity"] = r.degree_identity ? to_string(*r.degree_identity) : "n/a";
    j["gray"] = {{"n", r.gray_n},
                 {"k", r.gray_k},
                 {"d", r.gray_distance.d ? json(*r.gray_distance.d) : json(nullptr)},
                 {"method", r.gray_distance.method}};
    if (r.dual_gray_k) j["dual_gray_k"] = *r.dual_gray_k;
    if (!r.divisibility.empty()) j["divisibility"] = checks_to_json(r.divisibility);
    if (r.css) {
        j["css"] = {{"N", r.css->N},
                    {"K", r.css->K},
                    {"Kq", r.css->Kq},
                    {"dq", r.css->dq ? json(*r.css->dq) : json(nullptr)},
                    {"text", r.css->to_string()}};
    } else {
        j["css"] = nullptr;
    }
    return j;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "label,alpha,beta,f,l,g,a,type,log2_size,self_orthogonal,self_dual,gray,css,diagnostics\n";
    for (const auto& r : rows) {
        os << csv_field(r.label) << ',' << r.spec.alpha << ',' << r.spec.beta << ','
           << csv_field(to_exponent_string(r.spec.f)) << ',' << csv_field(to_exponent_string(r.spec.l)) << ','
           << csv_field(to_exponent_string(r.spec.g)) << ',' << csv_field(to_exponent_string(r.spec.a)) << ',';
        if (r.valid()) {
            os << csv_field(r.type->to_string()) << ',' << r.type->log2_size() << ',' << r.self_orthogonal << ','
               << (r.self_dual.verdict == SelfDualVerdict::SelfDual) << ',' << csv_field(r.gray_string()) << ','
               << csv_field(r.css ? r.css->to_string() : "");
        } else {
            os << ",,,,,";
        }
        os << ',' << csv_field(join(r.diagnostics, "; ")) << '\n';
    }
    return os.str();
}

std::string rows_to_table(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.label.empty() ? std::string("code") : r.label) << "\n";
        os << "  f = " << to_pretty_string(r.spec.f) << "\n  l = " << to_pretty_string(r.spec.l)
           << "\n  g = " << to_pretty_string(r.spec.g) << "\n  a = " << to_pretty_string(r.spec.a) << "\n";
        if (!r.valid()) {
            os << "  INVALID: " << join(r.diagnostics, "; ") << "\n";
            continue;
        }
        os << "  type            " << r.type->to_string() << "\n";
        os << "  |C|             2^" << r.type->log2_size() << "\n";
        os << "  self-orthogonal " << yes_no(r.self_orthogonal) << "\n";
        os << "  self-dual       " << to_string(r.self_dual.verdict) << "\n";
        os << "  Gray image      " << r.gray_string() << " (" << r.gray_distance.method << ")\n";
        if (r.css) os << "  CSS             " << r.css->to_string() << "\n";
        for (const auto& c : r.divisibility)
            os << "  check           " << c.name << ": " << (c.passed ? "pass" : "FAIL")
               << (c.informational ? " (informational)" : "") << "\n";
        for (const auto& d : r.diagnostics) os << "  note            " << d << "\n";
    }
    return os.str();
}

std::string export_binary_code(const BinaryLinearCode& code, const std::optional<int>& d) {
    const json header = {{"n", code.length()}, {"k", code.dimension()}, {"d", d ? json(*d) : json(nullptr)}};
    return header.dump() + "\n" + code.matrix_text();
}

json dual_report(const CyclicCodeSpec& spec) {
    const DualGenerators dg = dual_generators(spec);
    const DualChainData& c = dg.chain;
    json j;
    j["spec"] = spec_to_json(spec);
    auto p = [](const BinPoly& x) { return to_exponent_string(x); };
    j["chain"] = {{"h_f", p(c.h_f)},       {"h_g", p(c.h_g)},       {"h_a", p(c.h_a)},       {"d1", p(c.d1)},
                  {"d", p(c.d)},           {"d2", p(c.d2)},         {"Q", p(c.Q)},           {"alpha1", p(c.alpha1)},
                  {"alpha2", p(c.alpha2)}, {"alpha3", p(c.alpha3)}, {"alpha4", p(c.alpha4)}, {"beta1", p(c.beta1)},
                  {"v1", p(c.v1)},         {"d4", p(c.d4)},         {"theta", p(c.theta)},   {"sigma", p(c.sigma)},
                  {"M", p(c.M)},           {"h_d", p(c.h_d)},       {"m", c.m},              {"i", c.i},
                  {"j", c.j}};
    j["identities"] = checks_to_json(check_chain_identities(spec, c));
    j["tilde_generators"] = {word_to_json(dg.first), word_to_json(dg.second)};
    j["dual_type"] = {{"k0", dg.type.k0}, {"k1", dg.type.k1}, {"k2", dg.type.k2}};
    const BinaryLinearCode dual_gray = dg.gray_code();
    j["dual_gray"] = {{"n", dual_gray.length()}, {"k", dual_gray.dimension()}};
    try {
        const NormalizedDual nd = normalized_dual(spec);
        j["normalized"] = spec_to_json(nd.quadruple);
        j["q1"] = to_exponent_string(nd.q1);
        j["q2"] = to_exponent_string(nd.q2);
        j["i"] = nd.i;
        j["j"] = nd.j;
        j["normalized_diagnostics"] = nd.diagnostics;
        const BinaryLinearCode norm_gray = gray_module_code(nd.generators(), spec.alpha, spec.beta);
        j["normalized_matches_tilde"] = canonical_form(norm_gray) == canonical_form(dual_gray);
        if (validate_spec(nd.quadruple).ok()) {
            const SpanningSet t = dual_spanning_set(nd);
            json rows = json::array();
            for (const auto& w : t.all()) rows.push_back(w.to_string());
            j["dual_spanning_set"] = rows;
        }
    } catch (const std::exception& e) {
        j["normalized_error"] = e.what();
    }
    return j;
}

const std::vector<KnownInstance>& known_instances() {
    static const std::vector<KnownInstance> instances = [] {
        std::vector<KnownInstance> v;
        v.push_back({"example1", make(14, 21, {0, 1, 3, 7, 8, 10}, {0, 3, 5, 6}, {0, 1, 2, 3, 7, 9, 11, 12}, {0, 2, 4, 5, 6}),
                     "(14,21;7;9,3)", "[56,28,6]", true, "", ""});
        v.push_back({"table1-row1", make(14, 21, {0, 1, 3, 7, 8, 10}, {0, 3, 5, 6}, {0, 3, 6, 12}, {0, 1, 2, 4, 6}),
                     "(14,21;7;9,3)", "[56,28,6]", true, "", ""});
        v.push_back({"table1-row2",
                     make(14, 35, {0, 2, 3, 7, 9, 10}, {0, 1, 3, 6}, {0, 1, 4, 8, 9, 11, 12, 14, 17, 18, 19, 20},
                          {0, 1, 2, 4, 7, 8, 9, 10, 12}),
                     "(14,35;7;15,15)", "[84,52,6]", true, "", ""});
        v.push_back({"table1-row3",
                     make(28, 35, {0, 1, 3, 14, 15, 17}, {0, 3, 5, 6, 7, 10, 12, 13}, {0, 10, 15, 20},
                          {0, 2, 3, 4, 5, 8, 10, 11, 12}),
                     "(28,35;7;15,5)", "[98,42,6]", true, "", ""});
        v.push_back({"example2", make(14, 21, {0, 1, 3, 7, 8, 10}, {0, 4, 6, 8}, {0, 1, 3, 6, 7, 10, 13, 15}, {0, 2, 4, 5, 6}),
                     "", "[56,25,6]", std::nullopt, "[56,31,6]", "[[56,6,6]]"});
        v.push_back({"example3", make(6, 5, {0, 6}, {0, 1, 2, 3, 4, 5}, {0, 5}, {0, 1, 2, 3, 4}), "", "[16,1,16]",
                     std::nullopt, "[16,15,2]", "[[16,14,2]]"});
        v.push_back({"example4", make(8, 5, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 2, 4, 6}, {0, 5}, {0, 1, 2, 3, 4}), "",
                     "[18,2,8]", std::nullopt, "[18,16,2]", "[[18,14,2]]"});
        return v;
    }();
    return instances;
}

const KnownInstance& known_instance(std::string_view label) {
    for (const auto& k : known_instances())
        if (k.label == label) return k;
    throw std::out_of_range("unknown instance: " + std::string(label));
}

std::vector<TableEntry> table_report(const VerifyOptions& opts) {
    std::vector<TableEntry> out;
    for (const auto& inst : known_instances()) {
        TableEntry e{inst, verify(inst.spec, opts, inst.label), {}};
        const ReportRow& r = e.row;
        auto cmp = [&](std::string field, const std::string& claimed, std::string computed) {
            if (claimed.empty()) return;
            e.comparisons.push_back({std::move(field), claimed, computed, claimed == computed});
        };
        cmp("type", inst.claimed_type, r.type ? r.type->to_string() : "invalid");
        cmp("gray", inst.claimed_gray, r.gray_string());
        if (inst.claimed_self_dual)
            cmp("self_dual", *inst.claimed_self_dual ? "true" : "false",
                r.self_dual.verdict == SelfDualVerdict::SelfDual ? "true" : "false");
        cmp("dual_gray", inst.claimed_dual_gray,
            r.dual_gray_k ? bracket(r.gray_n, *r.dual_gray_k, r.css ? r.css->dq : std::nullopt) : "?");
        cmp("css", inst.claimed_css, r.css ? r.css->to_string() : "none");
        out.push_back(std::move(e));
    }
    return out;
}

json table_to_json(const std::vector<TableEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json j = row_to_json(e.row);
        json cmp = json::array();
        for (const auto& c : e.comparisons)
            cmp.push_back({{"field", c.field}, {"claimed", c.claimed}, {"computed", c.computed}, {"agrees", c.agrees}});
        j["comparisons"] = cmp;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string table_to_text(const std::vector<TableEntry>& entries) {
    std::ostringstream os;
    os << "instance      field      claimed          computed         status\n";
    for (const auto& e : entries) {
        for (const auto& c : e.comparisons) {
            os << e.instance.label << std::string(14 - std::min<std::size_t>(13, e.instance.label.size()), ' ')
               << c.field << std::string(11 - std::min<std::size_t>(10, c.field.size()), ' ') << c.claimed
               << std::string(17 - std::min<std::size_t>(16, c.claimed.size()), ' ') << c.computed
               << std::string(17 - std::min<std::size_t>(16, c.computed.size()), ' ') << (c.agrees ? "agree" : "DISAGREE")
               << "\n";
        }
        for (const auto& d : e.row.diagnostics) os << "  " << e.instance.label << ": " << d << "\n";
    }
    return os.str();
}

std::string table_to_csv(const std::vector<TableEntry>& entries) {
    std::ostringstream os;
    os << "instance,field,claimed,computed,agrees\n";
    for (const auto& e : entries)
        for (const auto& c : e.comparisons)
            os << csv_field(e.instance.label) << ',' << csv_field(c.field) << ',' << csv_field(c.claimed) << ','
               << csv_field(c.computed) << ',' << (c.agrees ? "true" : "false") << '\n';
    return os.str();
}

Requirement parse_requirement(std::string_view s) {
    if (s == "any") return Requirement::Any;
    if (s == "self-orthogonal") return Requirement::SelfOrthogonal;
    if (s == "self-dual") return Requirement::SelfDual;
    throw ParseError("require", "expected self-dual, self-orthogonal or any");
}

std::string to_string(Requirement r) {
    switch (r) {
        case Requirement::Any: return "any";
        case Requirement::SelfOrthogonal: return "self-orthogonal";
        case Requirement::SelfDual: return "self-dual";
    }
    return "?";
}

json OracleSummary::to_json() const {
    return {{"alpha", alpha},
            {"beta", beta},
            {"quadruples", quadruples},
            {"self_dual_codes", self_dual_codes},
            {"dual_failures", dual_failures},
            {"closure_failures", closure_failures},
            {"size_failures", size_failures},
            {"distance_failures", distance_failures},
            {"normalized_failures", normalized_failures},
            {"notices", notices},
            {"failure_details", failure_details}};
}

OracleSummary oracle_check(int alpha, int beta, Requirement require) {
    OracleSummary s;
    s.alpha = alpha;
    s.beta = beta;
    if (require == Requirement::SelfDual && alpha % 2 != 0) {
        s.notices.push_back("alpha odd: alpha + 2 beta is odd, so no self-dual code exists");
        return s;
    }
    const AmbientIndex amb(alpha, beta);
    if (amb.total() > OracleLimits{}.max_ambient)
        throw BudgetExceeded("ambient space 2^" + std::to_string(alpha + 2 * beta) + " over the oracle limit",
                             alpha + 2 * beta);
    const bool odd_beta = beta % 2 == 1;
    if (!odd_beta)
        s.notices.push_back("beta even: checked against the binary dual of the Gray image only; "
                            "type formula and self-duality not asserted");
    SearchConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.require = Requirement::Any;
    const std::uint64_t full = std::uint64_t{1} << (alpha + 2 * beta);
    auto fail = [&](std::uint64_t& counter, const CyclicCodeSpec& spec, const std::string& what) {
        ++counter;
        if (s.failure_details.size() < 20) s.failure_details.push_back(what + " at " + spec_to_json(spec).dump());
    };
    for_each_candidate(cfg, [&](const CyclicCodeSpec& spec) {
        if (!validate_spec(spec).ok()) return;
        if (require == Requirement::SelfOrthogonal && !is_self_orthogonal(spec)) return;
        if (require == Requirement::SelfDual && (!odd_beta || !is_self_dual(spec))) return;
        ++s.quadruples;
        const std::vector<MixedWord> words = codewords(spec);
        const CodeType t = code_type(spec);
        if (odd_beta && words.size() != (std::uint64_t{1} << t.log2_size())) fail(s.size_failures, spec, "|C| differs from type");
        if (!brute_force_cyclic_closure(words)) fail(s.closure_failures, spec, "C not cyclic");
        const std::vector<MixedWord> bf = brute_force_dual(words, alpha, beta);
        if (words.size() * bf.size() != full) fail(s.size_failures, spec, "|C||C-perp| != 2^(alpha+2beta)");
        if (!brute_force_cyclic_closure(bf)) fail(s.closure_failures, spec, "oracle dual not cyclic");
        const auto bf_set = index_set(bf, alpha, beta);

        BinaryLinearCode dual_gray;
        if (odd_beta) {
            const DualGenerators dg = dual_generators(spec);
            dual_gray = dg.gray_code();
            const auto dual_words = span_words(dual_gray, alpha, beta);
            if (index_set(dual_words, alpha, beta) != bf_set) fail(s.dual_failures, spec, "dual generators != oracle dual");
            if (!brute_force_cyclic_closure(dual_words)) fail(s.closure_failures, spec, "dual not cyclic");
            try {
                const NormalizedDual nd = normalized_dual(spec);
                const auto ng = gray_module_code(nd.generators(), alpha, beta);
                if (!(canonical_form(ng) == canonical_form(dual_gray)))
                    fail(s.normalized_failures, spec, "normalized dual != tilde dual");
                if (!validate_spec(nd.quadruple).ok())
                    fail(s.normalized_failures, spec, "normalized dual quadruple fails the generator conditions");
            } catch (const std::exception& e) {
                fail(s.normalized_failures, spec, std::string("normalized dual: ") + e.what());
            }
        } else {
            dual_gray = gray_generator_matrix(spec).dual();
            if (index_set(span_words(dual_gray, alpha, beta), alpha, beta) != bf_set)
                fail(s.dual_failures, spec, "binary dual != oracle dual");
        }

        const BinaryLinearCode gray = gray_generator_matrix(spec);
        if (brute_force_min_weight(words) != min_distance(gray)) fail(s.distance_failures, spec, "weight of C");
        if (brute_force_min_weight(bf) != min_distance(dual_gray)) fail(s.distance_failures, spec, "weight of C-perp");

        if (!odd_beta) return;
        if (is_self_dual(spec)) {
            ++s.self_dual_codes;
            if (index_set(words, alpha, beta) != bf_set) fail(s.dual_failures, spec, "self-dual verdict but C != C-perp");
        } else if (alpha % 2 == 0 && index_set(words, alpha, beta) == bf_set) {
            fail(s.dual_failures, spec, "C == C-perp but verdict is not self-dual");
        }
    });
    return s;
}

}  // namespace z2z2u
