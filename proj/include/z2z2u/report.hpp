#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "z2z2u/binary_code.hpp"
#include "z2z2u/css.hpp"
#include "z2z2u/cyclic_code.hpp"
#include "z2z2u/dual.hpp"

namespace z2z2u {

/// {"alpha": int, "beta": int, "f": "exps", "l": "exps", "g": "exps", "a": "exps"}.
/// Throws ParseError naming the offending field.
CyclicCodeSpec parse_spec_json(std::string_view text);
nlohmann::json spec_to_json(const CyclicCodeSpec& spec);

struct VerifyOptions {
    std::uint64_t distance_budget = std::uint64_t{1} << 32;
    bool compute_distance = true;
    /// Try the syndrome-collision search before enumeration.
    bool collision_first = false;
};

/// Everything a verification run reports about one quadruple.
struct ReportRow {
    std::string label;
    CyclicCodeSpec spec;
    ValidationReport validation;
    std::optional<CodeType> type;
    bool self_orthogonal = false;
    SelfDualAssessment self_dual;
    std::optional<IdentityResult> degree_identity;
    std::vector<ValidationCheck> divisibility;
    int gray_n = 0;
    int gray_k = 0;
    DistanceResult gray_distance;
    std::optional<QuantumParams> css;
    std::optional<int> dual_gray_k;
    std::vector<std::string> diagnostics;

    bool valid() const { return validation.ok(); }
    std::string gray_string() const;  // "[56,28,6]"
};

ReportRow verify(const CyclicCodeSpec& spec, const VerifyOptions& opts = {}, std::string label = {});

nlohmann::json row_to_json(const ReportRow& row);
std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_table(const std::vector<ReportRow>& rows);

/// JSON header line {"n","k","d"} followed by one '0'/'1' row per generator.
std::string export_binary_code(const BinaryLinearCode& code, const std::optional<int>& d);

/// Chain values, tilde-form and normalized dual quadruples, dual type and
/// the dual spanning-set matrix.
nlohmann::json dual_report(const CyclicCodeSpec& spec);

/// A built-in instance with the parameters claimed for it.
struct KnownInstance {
    std::string label;
    CyclicCodeSpec spec;
    std::string claimed_type;  // "" when none was claimed
    std::string claimed_gray;
    std::optional<bool> claimed_self_dual;
    std::string claimed_dual_gray;
    std::string claimed_css;
};

/// Example 1, Table 1 rows 1-3 and quantum Examples 2-4.
const std::vector<KnownInstance>& known_instances();
const KnownInstance& known_instance(std::string_view label);

struct FieldComparison {
    std::string field;
    std::string claimed;
    std::string computed;
    bool agrees = false;
};

struct TableEntry {
    KnownInstance instance;
    ReportRow row;
    std::vector<FieldComparison> comparisons;
};

std::vector<TableEntry> table_report(const VerifyOptions& opts = {});
nlohmann::json table_to_json(const std::vector<TableEntry>& entries);
std::string table_to_text(const std::vector<TableEntry>& entries);
std::string table_to_csv(const std::vector<TableEntry>& entries);

enum class Requirement { Any, SelfOrthogonal, SelfDual };
Requirement parse_requirement(std::string_view s);
std::string to_string(Requirement r);

struct OracleSummary {
    int alpha = 0;
    int beta = 0;
    std::uint64_t quadruples = 0;
    std::uint64_t dual_failures = 0;
    std::uint64_t closure_failures = 0;
    std::uint64_t size_failures = 0;
    std::uint64_t distance_failures = 0;
    std::uint64_t normalized_failures = 0;
    std::uint64_t self_dual_codes = 0;
    std::vector<std::string> notices;
    std::vector<std::string> failure_details;

    std::uint64_t failures() const {
        return dual_failures + closure_failures + size_failures + distance_failures + normalized_failures;
    }
    nlohmann::json to_json() const;
};

/// Runs the brute-force suite over every valid quadruple at (alpha, beta):
/// dual equality, cyclic closure of C and C-perp, |C||C-perp| = 2^(alpha+2beta),
/// and weight agreement with the Gray-image distance.
OracleSummary oracle_check(int alpha, int beta, Requirement require = Requirement::Any);

}  // namespace z2z2u
