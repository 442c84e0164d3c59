// Acceptance suite: one line per criterion, every comparison exact, each
// criterion carrying its own wall-clock budget. Exit status 0 only when all
// gating criteria hold.

#include <cstdio>
#include <string>
#include <vector>

#include "qcombin/checks.hpp"

namespace {

using qcombin::checks::CheckResult;
using qcombin::checks::Params;
using qcombin::checks::Status;

struct Criterion {
    int number;
    std::string title;
    long budget_ms;
    std::vector<std::pair<std::string, Params>> checks;  // id + pinned params
    bool gating = true;
};

const std::vector<Criterion> kCriteria = {
    {1,
     "D_3 weights 1/(2h+1) sum to 272 = E_7",
     1000,
     {{"fig2-e7", {}}}},
    {2,
     "tangent identity, n = 0..5, against both enumerations",
     60000,
     {{"thm5-tangent", {{"n_max", 5}}}}},
    {3,
     "secant identities (star and plain), n = 0..5",
     60000,
     {{"thm6-secant-star", {{"n_max", 5}}}, {"thm6-secant-plain", {{"n_max", 5}}}}},
    {4,
     "E*_n(q) = q^C(n,2) E_n(1/q), n = 0..10",
     60000,
     {{"eq-imp", {{"n_max", 10}}}}},
    {5,
     "q-hook, skew hook, and hook formulas on all shapes with |lambda| <= 7",
     300000,
     {{"mpp-qhook", {{"n_max", 7}}}, {"naruse", {{"n_max", 7}}}, {"frt-hook", {{"n_max", 7}}}}},
    {6,
     "staircase strips: Catalan-many excited diagrams (n <= 6), tmaj matches",
     60000,
     {{"strip-bijection", {{"n_max", 6}}}}},
    {7,
     "tangent fraction depth 8 through z^17; q-tangent fraction through z^11",
     10000,
     {{"lambert-cf", {{"depth", 8}, {"order", 17}}}, {"tanq-cf", {{"depth", 5}, {"order", 11}}}}},
    {8,
     "contiguous relations: 0Phi1 for i = 1..4 and 0F1 at a = 3/2, 5/2, order 8",
     10000,
     {{"lemma5-contiguous", {{"n_max", 4}, {"order", 8}}}, {"lemma3-contiguous", {{"order", 8}}}}},
    {9,
     "shifted path series equals the 0Phi1 ratio, h = 0..3, order 8",
     30000,
     {{"eq-sdf", {{"n_max", 3}, {"order", 8}}}}},
    {10,
     "Cauchy binomial theorem with the (1;q^2)_n collapse, n <= 8",
     5000,
     {{"cauchy-binomial", {{"n_max", 8}}}}},
    {11,
     "k-alternating generating functions, k = 2,3,4, through t^12",
     300000,
     {{"ky", {{"k", 4}, {"order", 12}}}}},
    {12,
     "q=1 differential system, k = 2,3, order 10, with the classical collapse",
     10000,
     {{"deriv-system", {{"k", 3}, {"order", 10}}}}},
    {13,
     "star/unstar identities order 8; tan*_q = tan_q through z^9",
     10000,
     {{"star-unstar", {{"order", 8}}}}},
    {14,
     "exploratory k-Dyck weighted formula, three vertex ranges, k = 3, L <= 7",
     60000,
     {{"kpath-exploratory", {{"k", 3}, {"n_max", 7}}}},
     false},
};

}  // namespace

int main() {
    int failures = 0;
    for (const auto& criterion : kCriteria) {
        long total_ms = 0;
        bool pass = true;
        std::string witness;
        std::string detail;
        for (const auto& [id, params] : criterion.checks) {
            CheckResult result = qcombin::checks::run_check(id, params);
            total_ms += result.millis;
            if (result.status == Status::Fail) {
                pass = false;
                witness = id + ": " + result.witness;
                break;
            }
            if (result.status == Status::Exploratory) detail = result.witness;
        }
        if (pass && total_ms > criterion.budget_ms) {
            pass = false;
            witness = "time budget exceeded: " + std::to_string(total_ms) + " ms > " +
                      std::to_string(criterion.budget_ms) + " ms";
        }
        if (!pass && criterion.gating) ++failures;
        std::printf("[%s] criterion %2d: %s (%ld ms)\n", pass ? "PASS" : "FAIL", criterion.number,
                    criterion.title.c_str(), total_ms);
        if (!pass) std::printf("       %s\n", witness.c_str());
        if (!detail.empty()) {
            std::printf("       exploratory report:\n");
            size_t start = 0;
            while (start < detail.size()) {
                size_t end = detail.find('\n', start);
                if (end == std::string::npos) end = detail.size();
                std::printf("         %s\n", detail.substr(start, end - start).c_str());
                start = end + 1;
            }
        }
    }
    if (failures > 0) {
        std::printf("acceptance: %d criteria failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
