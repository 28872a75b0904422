#ifndef GBLAB_SURVEY_HPP
#define GBLAB_SURVEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gblab/regularity.hpp"

namespace gblab {

struct SurveyConfig {
    int n = 0;
    std::vector<int> degrees; // one entry per generator
    std::uint32_t q = 31;
    int trials = 0;
    std::uint64_t seed = 1;
    int jobs = 1;

    int m() const { return static_cast<int>(degrees.size()); }
};

// One random trial: classification, solving degrees, saturation, and every
// bound / correspondence check. Violation strings are empty on a clean
// trial; a thrown error is isolated into `error`.
struct TrialRecord {
    int index = 0;
    std::uint64_t trialSeed = 0;
    bool failed = false;
    std::string error;

    bool csr = false, semiregular = false, gcsr = false;
    bool wrlHom = false, wrlTop = false;
    std::optional<int> D, DPrime;
    std::optional<long long> projectiveZeros;

    int maxGbDegF = 0, maxGbDegTop = 0, maxGbDegHom = 0;
    int sdStepF = 0, sdStrictF = 0;
    long stepsF = 0; // pairs processed computing G
    long zeroReductionsF = 0;
    int sdMacF = -1, sdMutF = -1, sdMacH = -1, sdMutH = -1; // -1 = exceeded cap
    int s0 = 0;
    int lazard = 0, dNew = 0;
    std::optional<int> thm12Main;

    bool thm11Applicable = false, thm11Pass = true;
    bool lemma4xPass = true;

    std::vector<std::string> violations;
};

struct SurveyAggregate {
    SurveyConfig config;
    int completed = 0, failures = 0;
    int csrCount = 0, semiregularCount = 0, gcsrCount = 0, wrlHomCount = 0;
    int skippedNonCsr = 0; // trials whose CSR-gated checks were skipped
    int jointGcsrWrl[2][2] = {{0, 0}, {0, 0}}; // [gcsr][wrlHom]
    long thm11Violations = 0, lemma4xViolations = 0;
    long boundViolations = 0, chainViolations = 0, dehomViolations = 0;
    std::uint64_t totalStepCount = 0, totalZeroReductions = 0;
    std::vector<TrialRecord> perTrial; // sorted by index
};

// Runs one full pipeline over a given system (no randomness); the building
// block for both the survey and the regression fixtures.
TrialRecord runTrial(const PolySystem& F, int index, std::uint64_t seedUsed);

SurveyAggregate runSurvey(const SurveyConfig& cfg);

// Deterministic JSON rendering (no timing fields).
std::string surveyToJson(const SurveyAggregate& agg);
std::string trialToJson(const TrialRecord& t);

std::uint64_t trialSeed(std::uint64_t surveySeed, int index);

} // namespace gblab

#endif
