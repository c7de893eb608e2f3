// Command-line front end: verify, search, dual, table, oracle-check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "z2z2u/errors.hpp"
#include "z2z2u/gray.hpp"
#include "z2z2u/report.hpp"
#include "z2z2u/search.hpp"

namespace {

using namespace z2z2u;
using nlohmann::json;

enum Exit { kOk = 0, kValidation = 1, kBudget = 2, kParse = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("spec", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string format_rows(const std::vector<ReportRow>& rows, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        return arr.dump(2);
    }
    if (format == "csv") return rows_to_csv(rows);
    return rows_to_table(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic codes over Z2 x (Z2 + uZ2): verification, duals, Gray images and CSS parameters"};
    app.require_subcommand(1);

    std::string spec_path, out_path, format = "table", require = "any", matrix_path;
    int alpha = 0, beta = 0, min_distance = 0;
    std::uint64_t budget = 1'000'000;
    std::uint64_t distance_budget = std::uint64_t{1} << 32;
    const std::vector<std::string> formats{"table", "json", "csv"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out_path, "Write the report to a file");
        sub->add_option("--distance-budget", distance_budget, "Largest 2^k enumerated for minimum distance");
    };

    auto* verify_cmd = app.add_subcommand("verify", "Validate a spec file and report its parameters");
    verify_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    verify_cmd->add_option("--matrix", matrix_path, "Write the Gray-image generator matrix here");
    add_common(verify_cmd);

    auto* search_cmd = app.add_subcommand("search", "Search the divisor lattice for codes");
    search_cmd->add_option("--alpha", alpha)->required();
    search_cmd->add_option("--beta", beta)->required();
    search_cmd->add_option("--require", require)->check(CLI::IsMember({"self-dual", "self-orthogonal", "any"}));
    search_cmd->add_option("--budget", budget, "Maximum number of candidate quadruples");
    search_cmd->add_option("--min-distance", min_distance, "Only report Gray images with at least this distance");
    add_common(search_cmd);

    auto* dual_cmd = app.add_subcommand("dual", "Dual generators and chain values for a spec file");
    dual_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    dual_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* table_cmd = app.add_subcommand("table", "Recompute the built-in instances against their claimed parameters");
    add_common(table_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Brute-force cross-check of every quadruple at (alpha, beta)");
    oracle_cmd->add_option("--alpha", alpha)->required();
    oracle_cmd->add_option("--beta", beta)->required();
    oracle_cmd->add_option("--require", require)->check(CLI::IsMember({"self-dual", "self-orthogonal", "any"}));
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    oracle_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*verify_cmd) {
            const CyclicCodeSpec spec = parse_spec_json(read_file(spec_path));
            VerifyOptions opts;
            opts.distance_budget = distance_budget;
            const ReportRow row = verify(spec, opts, spec_path);
            emit(format_rows({row}, format), out_path);
            if (!matrix_path.empty() && row.valid())
                emit(export_binary_code(gray_generator_matrix(spec), row.gray_distance.d), matrix_path);
            return row.valid() ? kOk : kValidation;
        }
        if (*search_cmd) {
            SearchConfig cfg;
            cfg.alpha = alpha;
            cfg.beta = beta;
            cfg.require = parse_requirement(require);
            cfg.max_candidates = budget;
            cfg.min_gray_distance = min_distance;
            cfg.distance_budget = distance_budget;
            const SearchResult res = search(cfg);
            for (const auto& n : res.notices) std::cerr << "note: " << n << "\n";
            std::cerr << res.candidates << " candidates, " << res.matched << " matched, " << res.rows.size()
                      << " distinct codes\n";
            if (format == "json")
                emit(res.to_json().dump(2), out_path);
            else
                emit(format_rows(res.rows, format), out_path);
            return kOk;
        }
        if (*dual_cmd) {
            const CyclicCodeSpec spec = parse_spec_json(read_file(spec_path));
            emit(dual_report(spec).dump(2), out_path);
            return kOk;
        }
        if (*table_cmd) {
            VerifyOptions opts;
            opts.distance_budget = distance_budget;
            const auto entries = table_report(opts);
            if (format == "json")
                emit(table_to_json(entries).dump(2), out_path);
            else if (format == "csv")
                emit(table_to_csv(entries), out_path);
            else
                emit(table_to_text(entries), out_path);
            return kOk;
        }
        if (*oracle_cmd) {
            const OracleSummary s = oracle_check(alpha, beta, parse_requirement(require));
            if (format == "json") {
                emit(s.to_json().dump(2), out_path);
            } else {
                std::ostringstream os;
                os << "(" << s.alpha << "," << s.beta << "): " << s.quadruples << " quadruples, " << s.self_dual_codes
                   << " self-dual, " << s.failures() << " failures\n";
                for (const auto& n : s.notices) os << "note: " << n << "\n";
                for (const auto& d : s.failure_details) os << "fail: " << d << "\n";
                emit(os.str(), out_path);
            }
            return s.failures() == 0 ? kOk : kValidation;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (log2 size " << e.required_log2() << ")\n";
        return kBudget;
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kOk;
}
