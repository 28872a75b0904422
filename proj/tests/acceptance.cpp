// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "gblab/example1.hpp"
#include "gblab/regularity.hpp"
#include "gblab/survey.hpp"
#include "gblab/tables.hpp"

using namespace gblab;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The published bound tables, integer for integer. The D entry at
// (table 2, n = 9, m = 16) is 5: the printed 6 contradicts the same
// column's 2D-1 = 9 and the defining formula.
const char* kExpectedTables =
    "# table1 n=9 degrees=2,...,2\n"
    "m,10,11,12,13,14,15,16,17,18\n"
    "lazard,11,11,11,11,11,11,11,11,11\n"
    "thm12,11,11,11,11,11,11,11,11,11\n"
    "dnew,11,6,6,5,5,4,4,4,4\n"
    "D,6,5,5,4,4,4,4,4,4\n"
    "2D-1,11,9,9,7,7,7,7,7,7\n"
    "\n"
    "# table1 n=10 degrees=2,...,2\n"
    "m,11,12,13,14,15,16,17,18,19,20\n"
    "lazard,12,12,12,12,12,12,12,12,12,12\n"
    "thm12,12,12,12,12,12,12,12,12,12,12\n"
    "dnew,12,7,6,5,5,5,5,4,4,4\n"
    "D,6,6,5,5,4,4,4,4,4,4\n"
    "2D-1,11,11,9,9,7,7,7,7,7,7\n"
    "\n"
    "# table2 n=9 degrees=3^n,2,...,2\n"
    "m,10,11,12,13,14,15,16,17,18\n"
    "lazard,20,20,20,20,20,20,20,20,20\n"
    "thm12,20,19,18,17,16,15,14,13,12\n"
    "dnew,20,11,9,8,7,7,6,6,5\n"
    "D,10,9,8,7,6,6,5,5,5\n"
    "2D-1,19,17,15,13,11,11,9,9,9\n"
    "\n"
    "# table2 n=10 degrees=3^n,2,...,2\n"
    "m,11,12,13,14,15,16,17,18,19,20\n"
    "lazard,22,22,22,22,22,22,22,22,22,22\n"
    "thm12,22,21,20,19,18,17,16,15,14,13\n"
    "dnew,22,12,10,9,8,7,7,6,6,6\n"
    "D,11,10,9,8,7,6,6,6,5,5\n"
    "2D-1,21,19,17,15,13,11,11,11,9,9\n"
    "\n";

struct ViolationCounts {
    long thm11 = 0, lemma4x = 0, chain = 0, bounds = 0, dehom = 0, telemetry = 0;
    long failures = 0;
    int csrTrials = 0, skipped = 0, completed = 0, gcsrTrials = 0;
};

ViolationCounts countViolations(const SurveyAggregate& agg) {
    ViolationCounts c;
    const std::vector<std::string> chainStrings = {
        "sd cap exceeded on affine system", "solving-degree chain violated (affine)",
        "sd cap exceeded on homogenized system",
        "homogeneous solving degrees differ from max.GB.deg",
        "sd_mac(F) differs from max.GB.deg(F^h)"};
    const std::vector<std::string> boundStrings = {
        "max.GB.deg(F^h) exceeds Lazard's bound",
        "max.GB.deg(F^h) exceeds the ascending-degree bound",
        "max.GB.deg(F^h) exceeds D + S_0",
        "max.GB.deg(F^h) exceeds D_new on a generalized-CSR trial",
        "D' >= D - 1 violated",
        "weakly-revlex equality max.GB.deg = max{D, D'} violated",
        "max.GB.deg(F^top) exceeds d_reg"};
    const std::vector<std::string> dehomStrings = {
        "dehomogenized basis fails the Groebner test",
        "dehomogenized basis inter-reduces to a different reduced GB"};
    const std::vector<std::string> telemetryStrings = {
        "max.GB.deg(F) exceeds D", "strict solving degree exceeds 2D - 2",
        "step solving degree exceeds 2D - 1"};
    auto matches = [](const std::string& v, const std::vector<std::string>& set) {
        for (const auto& s : set)
            if (v == s) return true;
        return false;
    };
    for (const auto& t : agg.perTrial) {
        if (t.failed) {
            ++c.failures;
            continue;
        }
        ++c.completed;
        c.csrTrials += t.csr;
        c.gcsrTrials += t.gcsr;
        c.skipped += !t.csr;
        c.thm11 += t.thm11Applicable && !t.thm11Pass;
        c.lemma4x += !t.lemma4xPass;
        for (const auto& v : t.violations) {
            if (matches(v, chainStrings))
                ++c.chain;
            else if (matches(v, boundStrings))
                ++c.bounds;
            else if (matches(v, dehomStrings))
                ++c.dehom;
            else if (matches(v, telemetryStrings))
                ++c.telemetry;
        }
    }
    return c;
}

} // namespace

int main() {
    const int jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    // Criterion 1: table reproduction, exact, under a second.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string got = reproduceAllTables();
        const double dt = seconds(t0);
        const bool exact = got == kExpectedTables;
        const bool fast = dt < 1.0;
        report(1, exact && fast,
               "tables 1-2 reproduced exactly in " + std::to_string(dt) + "s" +
                   (exact ? "" : " (mismatch)"));
        if (!exact) {
            std::printf("--- expected ---\n%s--- got ---\n%s", kExpectedTables, got.c_str());
        }
    }

    // Criterion 2: the F_73 reference regression.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const FixtureVerdict v = example1Fixture();
        report(2, v.pass, "reference-system regression (" +
                              std::to_string(v.checks.size()) + " checks, " +
                              std::to_string(seconds(t0)) + "s)");
        if (!v.pass)
            for (const auto& d : v.diffs) std::printf("%s\n", d.c_str());
    }

    // Criteria 3, 4, 5, 7, 8: three 50-trial surveys.
    struct Cell {
        int n, m;
    };
    const std::vector<Cell> cells = {{3, 5}, {4, 6}, {5, 7}};
    ViolationCounts total;
    bool surveysOk = true;
    std::string surveyNote;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        SurveyConfig cfg;
        cfg.n = cells[i].n;
        cfg.degrees.assign(static_cast<std::size_t>(cells[i].m), 2);
        cfg.q = 31;
        cfg.trials = 50;
        cfg.seed = 20240901 + i;
        cfg.jobs = jobs;
        const auto t0 = std::chrono::steady_clock::now();
        const SurveyAggregate agg = runSurvey(cfg);
        const ViolationCounts c = countViolations(agg);
        surveysOk &= c.failures == 0;
        total.thm11 += c.thm11;
        total.lemma4x += c.lemma4x;
        total.chain += c.chain;
        total.bounds += c.bounds;
        total.dehom += c.dehom;
        total.telemetry += c.telemetry;
        total.failures += c.failures;
        total.csrTrials += c.csrTrials;
        total.gcsrTrials += c.gcsrTrials;
        total.skipped += c.skipped;
        total.completed += c.completed;
        surveyNote += "(" + std::to_string(cells[i].n) + "," + std::to_string(cells[i].m) +
                      "): csr " + std::to_string(c.csrTrials) + "/50, gcsr " +
                      std::to_string(c.gcsrTrials) + "/50, " + std::to_string(seconds(t0)) +
                      "s; ";
    }

    report(3, surveysOk && total.thm11 == 0 && total.lemma4x == 0,
           "Hilbert recursion / unimodality / y-map ranks / congruence: " +
               std::to_string(total.thm11) + " violations, correspondence lemmas: " +
               std::to_string(total.lemma4x) + " violations, " +
               std::to_string(total.skipped) + " non-CSR trials skipped -- " + surveyNote);
    report(4, surveysOk && total.chain == 0,
           "solving-degree chain and homogeneous equalities: " + std::to_string(total.chain) +
               " violations over " + std::to_string(total.completed) + " trials");
    report(5, surveysOk && total.bounds == 0,
           "bound suite (Lazard, ascending, D+S_0, D_new, D' >= D-1, weakly-revlex equality): " +
               std::to_string(total.bounds) + " violations, " + std::to_string(total.csrTrials) +
               " CSR trials");

    // Criterion 6: d-regularity vs the Koszul H1 oracle on a 100-trial pool.
    {
        const auto t0 = std::chrono::steady_clock::now();
        long disagreements = 0;
        int pool = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + trial % 3;
            const int m = 1 + (trial / 3) % 4;
            std::vector<int> degs;
            for (int k = 0; k < m; ++k) degs.push_back(2 + (trial + k) % 2);
            const PolySystem F =
                topParts(randomSystem(n, degs, 31, 777000 + static_cast<std::uint64_t>(trial)));
            ++pool;
            const int maxd = *std::max_element(degs.begin(), degs.end());
            std::vector<bool> h1Zero(7, true);
            for (int t = 0; t <= 5; ++t) {
                const SyzygySlice s = koszulH1Dim(F, t);
                if (s.dimH1 != 0)
                    for (int d = t + 1; d <= 6; ++d) h1Zero[static_cast<std::size_t>(d)] = false;
            }
            for (int d = maxd; d <= 6; ++d)
                if (isDRegular(F, d) != h1Zero[static_cast<std::size_t>(d)]) ++disagreements;
        }
        report(6, disagreements == 0,
               "d-regularity vs Koszul H1 oracle on " + std::to_string(pool) + " systems: " +
                   std::to_string(disagreements) + " disagreements (" +
                   std::to_string(seconds(t0)) + "s)");
    }

    report(7, surveysOk && total.dehom == 0,
           "dehomogenized bases pass the Groebner test and inter-reduce to G: " +
               std::to_string(total.dehom) + " violations");
    report(8, surveysOk && total.telemetry == 0,
           "max.GB.deg(F) <= D and strict solving degree <= 2D-2 on CSR trials: " +
               std::to_string(total.telemetry) + " violations");

    const double gcsrRate = total.completed ? 100.0 * total.gcsrTrials / total.completed : 0.0;
    std::printf("info: generalized-CSR rate across surveys: %.1f%% (informational)\n", gcsrRate);
    std::printf("%s\n", failures == 0 ? "acceptance: ALL PASS" : "acceptance: FAILURES");
    return failures == 0 ? 0 : 1;
}
