// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every criterion runs twice (1 worker, then 2) and the canonical reports
// must match byte for byte; criterion 11 aggregates those comparisons.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dibc/check.hpp"

using namespace dibc;

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;
    bool deterministic = true;
};

struct TimedReport {
    CheckReport report;
    double seconds = 0.0;
    bool deterministic = true;
};

TimedReport run_twice(const std::string& id, int enumerate_n, int trials) {
    CheckSpec spec;
    spec.id = id;
    spec.enumerate_n = enumerate_n;
    spec.trials = trials;
    spec.seed = 0;
    spec.artifact_dir = ".";

    TimedReport out;
    try {
        spec.workers = 1;
        const CheckReport first = run_check(spec);

        spec.workers = 2;
        const auto t0 = std::chrono::steady_clock::now();
        CheckReport second = run_check(spec);
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.deterministic = first.canonical_text() == second.canonical_text();
        out.report = std::move(second);
    } catch (const std::exception& e) {
        out.report.id = id;
        Violation v;
        v.key = "exception";
        v.message = e.what();
        out.report.violations.push_back(std::move(v));
    }
    return out;
}

std::string summary(const CheckReport& r) {
    return std::to_string(r.instances) + " instances, " + std::to_string(r.violations.size()) +
           " violations";
}

}  // namespace

int main() {
    std::vector<CriterionResult> results;
    bool all_deterministic = true;
    auto record = [&](int number, const std::string& label, const TimedReport& tr,
                      double budget_seconds) {
        CriterionResult res;
        res.pass = tr.report.violations.empty();
        if (budget_seconds > 0 && tr.seconds > budget_seconds) res.pass = false;
        res.detail = summary(tr.report);
        res.deterministic = tr.deterministic;
        all_deterministic = all_deterministic && tr.deterministic;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1fs", tr.seconds);
        std::printf("criterion %2d [%s]: %s (%s, %s)\n", number, label.c_str(),
                    res.pass ? "PASS" : "FAIL", res.detail.c_str(), buf);
        for (const auto& v : tr.report.violations)
            std::printf("    violation %s: %s\n", v.key.c_str(), v.message.c_str());
        std::fflush(stdout);
        results.push_back(res);
    };

    record(1, "irreducible reduction of minimum colorings; dc <= dib on all n <= 4",
           run_twice("theorem-2", 4, 0), 300.0);
    record(2, "dib <= n - beta + 1 on all n <= 4 plus 500 random n <= 7",
           run_twice("corollary-4", 4, 500), 600.0);
    {
        const TimedReport l5 = run_twice("lemma-5", 0, 1000);
        const TimedReport l6 = run_twice("lemma-6", 0, 1000);
        CriterionResult res;
        res.pass = l5.report.violations.empty() && l6.report.violations.empty();
        res.deterministic = l5.deterministic && l6.deterministic;
        all_deterministic = all_deterministic && res.deterministic;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1fs", l5.seconds + l6.seconds);
        std::printf("criterion  3 [dib <= min side + 1 and side color spread, 1000 connected bipartite]: %s (%s; %s, %s)\n",
                    res.pass ? "PASS" : "FAIL", summary(l5.report).c_str(), summary(l6.report).c_str(), buf);
        for (const auto& v : l5.report.violations)
            std::printf("    violation %s: %s\n", v.key.c_str(), v.message.c_str());
        for (const auto& v : l6.report.violations)
            std::printf("    violation %s: %s\n", v.key.c_str(), v.message.c_str());
        std::fflush(stdout);
        results.push_back(res);
    }
    record(4, "disconnected equivalence: predicate <=> dib > 2, 300 instances + 2 fixed",
           run_twice("theorem-7", 0, 300), 0.0);
    record(5, "union/intersection cover implications, 300 connected instances",
           run_twice("theorem-8", 0, 300), 0.0);
    record(6, "3-coloring construction and dib >= 3; circulants have dib = 3",
           run_twice("theorem-9", 0, 200), 900.0);
    record(7, "balanced-partition coloring and the partition census up to m = 12",
           run_twice("theorem-10", 0, 100), 0.0);
    record(8, "staged greedy coloring with stage budgets, 100 instances",
           run_twice("theorem-12", 0, 100), 0.0);
    record(9, "cross-pair coloring with c+1 colors, 50 engineered instances",
           run_twice("theorem-13", 0, 50), 0.0);
    record(10, "one-directional bicliques and star colorings, K(16,16) and K(40,40)",
           run_twice("theorem-14", 0, 100), 600.0);

    const bool det_pass = all_deterministic;
    std::printf("criterion 11 [byte-identical reports across reruns and worker counts]: %s\n",
                det_pass ? "PASS" : "FAIL");
    std::fflush(stdout);

    bool all = det_pass;
    for (const auto& r : results) all = all && r.pass;
    std::printf("%s\n", all ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT");
    return all ? 0 : 1;
}
