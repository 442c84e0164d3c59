#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcombin/qfun.hpp"

namespace qcombin::checks {

/// Named integer parameters of a check (n_max, order, k, depth).
using Params = std::map<std::string, long>;

enum class Status { Pass, Fail, Exploratory };

std::string status_name(Status s);

struct CheckResult {
    std::string id;
    Params params;
    Status status = Status::Pass;
    std::string witness;  // first counterexample, or the exploratory report
    long long millis = 0;
};

struct CheckDef {
    std::string id;
    std::string summary;
    bool exploratory = false;
    Params quick_params;
    Params full_params;
    Params max_params;  // feasibility ceiling, enforced before running
    std::function<void(const Params&)> validate;  // optional extra validation
    std::function<qfun::CheckWitness(const Params&)> run;
};

/// All registered checks, in fixed report order.
const std::vector<CheckDef>& registry();

/// Throws std::invalid_argument listing the valid ids when unknown.
const CheckDef& find_check(const std::string& id);

/// Runs one check with the full-profile defaults overridden by `overrides`.
/// Unknown parameter names and values beyond the feasibility ceiling are
/// rejected before any computation starts.
CheckResult run_check(const std::string& id, const Params& overrides = {});

enum class Profile { Quick, Full };

struct Report {
    Profile profile = Profile::Quick;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int exploratory = 0;
    bool suite_passed() const { return failed == 0; }
};

/// Runs the registry in order at the profile's parameters. Without a
/// selection every check runs; an explicitly empty selection runs none.
Report run_suite(Profile profile,
                 const std::optional<std::vector<std::string>>& selection = std::nullopt);

std::string result_to_json(const CheckResult& result);
std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

enum class TableKind { Euler, QEuler, FPoly, PathCounts };
enum class TableFormat { Md, Csv, Json };

/// Renders exact value tables (Euler numbers, q-Euler polynomials, f
/// polynomials for a given k, Dyck path counts).
std::string emit_table(TableKind kind, int n_max, TableFormat format, int k = 3);

}  // namespace qcombin::checks
