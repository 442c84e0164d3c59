#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcombin/checks.hpp"

namespace {

using qcombin::checks::CheckResult;
using qcombin::checks::Params;
using qcombin::checks::Profile;
using qcombin::checks::Report;
using qcombin::checks::Status;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_result(const CheckResult& result) {
    std::cout << "[" << qcombin::checks::status_name(result.status) << "] " << result.id << " (";
    bool first = true;
    for (const auto& [name, value] : result.params) {
        std::cout << (first ? "" : ", ") << name << "=" << value;
        first = false;
    }
    std::cout << ") " << result.millis << " ms\n";
    if (!result.witness.empty()) std::cout << result.witness << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcombin: exact verification of q-series, Dyck path, and tableau identities"};
    app.require_subcommand(1);

    // check <id> [--n-max] [--order] [--k] [--depth] [--json]
    auto* check_cmd = app.add_subcommand("check", "run a single identity check");
    std::string check_id;
    check_cmd->add_option("id", check_id, "check id (see `qcombin suite` output)")->required();
    std::optional<long> n_max, order, k_opt, depth;
    check_cmd->add_option("--n-max", n_max, "index bound parameter");
    check_cmd->add_option("--order", order, "truncation order parameter");
    check_cmd->add_option("--k", k_opt, "k parameter");
    check_cmd->add_option("--depth", depth, "continued fraction depth parameter");
    bool check_json = false;
    check_cmd->add_flag("--json", check_json, "emit the result record as JSON");

    // suite [--profile quick|full] [--json] [--out FILE]
    auto* suite_cmd = app.add_subcommand("suite", "run the full identity registry");
    std::string profile_name = "quick";
    suite_cmd->add_option("--profile", profile_name, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    bool suite_json = false;
    suite_cmd->add_flag("--json", suite_json, "emit the report as JSON on stdout");
    std::string out_file;
    suite_cmd->add_option("--out", out_file, "write the JSON report to a file");

    // table <kind> [--n-max] [--format md|csv|json] [--k]
    auto* table_cmd = app.add_subcommand("table", "print exact value tables");
    std::string kind_name;
    table_cmd->add_option("kind", kind_name, "euler | q_euler | f_poly | path_counts")
        ->required()
        ->check(CLI::IsMember({"euler", "q_euler", "f_poly", "path_counts"}));
    long table_n_max = 8;
    table_cmd->add_option("--n-max", table_n_max, "last row index");
    std::string format_name = "md";
    table_cmd->add_option("--format", format_name, "md, csv, or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    long table_k = 3;
    table_cmd->add_option("--k", table_k, "k for the f_poly table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check_cmd->parsed()) {
            Params overrides;
            if (n_max) overrides["n_max"] = *n_max;
            if (order) overrides["order"] = *order;
            if (k_opt) overrides["k"] = *k_opt;
            if (depth) overrides["depth"] = *depth;
            CheckResult result = qcombin::checks::run_check(check_id, overrides);
            if (check_json)
                std::cout << qcombin::checks::result_to_json(result) << "\n";
            else
                print_result(result);
            return result.status == Status::Fail ? kExitFail : kExitPass;
        }

        if (suite_cmd->parsed()) {
            Profile profile = profile_name == "full" ? Profile::Full : Profile::Quick;
            Report report = qcombin::checks::run_suite(profile);
            if (suite_json)
                std::cout << qcombin::checks::report_to_json(report) << "\n";
            else
                std::cout << qcombin::checks::report_to_text(report);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                if (!out) {
                    std::cerr << "cannot write " << out_file << "\n";
                    return kExitUsage;
                }
                out << qcombin::checks::report_to_json(report) << "\n";
            }
            return report.suite_passed() ? kExitPass : kExitFail;
        }

        // table
        qcombin::checks::TableKind kind = qcombin::checks::TableKind::Euler;
        if (kind_name == "q_euler") kind = qcombin::checks::TableKind::QEuler;
        if (kind_name == "f_poly") kind = qcombin::checks::TableKind::FPoly;
        if (kind_name == "path_counts") kind = qcombin::checks::TableKind::PathCounts;
        qcombin::checks::TableFormat format = qcombin::checks::TableFormat::Md;
        if (format_name == "csv") format = qcombin::checks::TableFormat::Csv;
        if (format_name == "json") format = qcombin::checks::TableFormat::Json;
        std::cout << qcombin::checks::emit_table(kind, static_cast<int>(table_n_max), format,
                                                 static_cast<int>(table_k));
        return kExitPass;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
