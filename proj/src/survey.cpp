#include "gblab/survey.hpp"

#include "gblab/bounds.hpp"
#include "gblab/macaulay.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <nlohmann/json.hpp>

namespace gblab {

std::uint64_t trialSeed(std::uint64_t surveySeed, int index) {
    return surveySeed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1));
}

TrialRecord runTrial(const PolySystem& F, int index, std::uint64_t seedUsed) {
    TrialRecord t;
    t.index = index;
    t.trialSeed = seedUsed;
    auto flag = [&t](const std::string& v) { t.violations.push_back(v); };

    const int n = static_cast<int>(F.ring.nvars);
    const int m = static_cast<int>(F.gens.size());
    const auto degrees = F.degrees();
    const int maxDeg = *std::max_element(degrees.begin(), degrees.end());

    const SystemAnalysis a = analyzeSystem(F);
    const RegularityReport rep = classify(a);
    t.csr = rep.isCryptoSemiregular;
    t.semiregular = rep.isSemiregular;
    t.gcsr = rep.isGeneralizedCsr;
    t.wrlHom = rep.wrlHom;
    t.wrlTop = rep.wrlTop;
    t.D = rep.D;
    t.DPrime = rep.DPrime;
    t.projectiveZeros = rep.projectiveZeroCount;

    t.maxGbDegF = a.traceF.maxGbDegree;
    t.maxGbDegTop = a.traceTop.maxGbDegree;
    t.maxGbDegHom = a.traceHom.maxGbDegree;
    t.sdStepF = a.traceF.sdStep;
    t.sdStrictF = a.traceF.sdStrict;
    t.stepsF = static_cast<long>(a.traceF.stepDegrees.size());
    t.zeroReductionsF = a.traceF.zeroReductions;

    t.lazard = lazardBound(n, degrees);
    t.dNew = dNewBound(n, degrees);
    if (m > n) t.thm12Main = thm12Bound(n, degrees).main;

    // Solving degrees, capped at the Lazard bound.
    const int dmax = t.lazard;
    const auto macF = sdMac(F, dmax, a.traceF.reducedBasis);
    const auto mutF = sdMut(F, dmax, a.traceF.reducedBasis);
    const auto macH = sdMac(a.Fh, dmax, a.traceHom.reducedBasis);
    const auto mutH = sdMut(a.Fh, dmax, a.traceHom.reducedBasis);
    t.sdMacF = macF.exceeded ? -1 : macF.degree;
    t.sdMutF = mutF.exceeded ? -1 : mutF.degree;
    t.sdMacH = macH.exceeded ? -1 : macH.degree;
    t.sdMutH = mutH.exceeded ? -1 : mutH.degree;

    // max.GB.deg <= sd_mut <= sd_mac on every trial with both reached.
    if (t.sdMacF < 0 || t.sdMutF < 0)
        flag("sd cap exceeded on affine system");
    else if (!(t.maxGbDegF <= t.sdMutF && t.sdMutF <= t.sdMacF))
        flag("solving-degree chain violated (affine)");
    if (t.sdMacH < 0 || t.sdMutH < 0)
        flag("sd cap exceeded on homogenized system");
    else if (!(t.sdMacH == t.sdMutH && t.sdMutH == t.maxGbDegHom))
        flag("homogeneous solving degrees differ from max.GB.deg");
    // sd_mac over the DRL order is blind to homogenization.
    if (t.sdMacF >= 0 && t.sdMacF != t.maxGbDegHom)
        flag("sd_mac(F) differs from max.GB.deg(F^h)");

    // Dehomogenization: GB(F^h)|_{y=1} must be a GB of <F> and inter-reduce
    // to the reduced basis of F.
    {
        std::vector<Polynomial> dehom;
        dehom.reserve(a.traceHom.reducedBasis.size());
        for (const auto& g : a.traceHom.reducedBasis) dehom.push_back(dehomogenize(g));
        if (!isGroebner(dehom)) flag("dehomogenized basis fails the Groebner test");
        if (interreduce(dehom) != a.traceF.reducedBasis)
            flag("dehomogenized basis inter-reduces to a different reduced GB");
    }

    const auto sat = saturationExponent(F, a.traceF.reducedBasis, a.traceHom.reducedBasis);
    t.s0 = sat.s0;

    // max.GB.deg <= d_reg for Artinian homogeneous quotients.
    if (a.hilbTop.artinian && a.hilbTop.dReg && t.maxGbDegTop > *a.hilbTop.dReg)
        flag("max.GB.deg(F^top) exceeds d_reg");

    const Thm11Verdict thm11 = verifyTheorem11(a, rep);
    t.thm11Applicable = thm11.applicable;
    t.thm11Pass = thm11.pass();
    if (!t.thm11Pass) flag("Theorem 1.1 checks failed");

    const Lemma4xVerdict l4 = verifyLemmas4x(a, rep);
    t.lemma4xPass = l4.pass();
    if (!t.lemma4xPass) flag("degree-D correspondence lemmas failed");

    // Bound suite, gated on crypto semi-regularity.
    if (t.csr && t.D) {
        const int D = *t.D;
        if (t.maxGbDegHom > t.lazard) flag("max.GB.deg(F^h) exceeds Lazard's bound");
        if (t.semiregular && t.thm12Main && t.maxGbDegHom > *t.thm12Main)
            flag("max.GB.deg(F^h) exceeds the ascending-degree bound");
        if (t.maxGbDegHom > D + t.s0) flag("max.GB.deg(F^h) exceeds D + S_0");
        if (t.gcsr && t.projectiveZeros.value_or(0) >= 1 && t.maxGbDegHom > t.dNew)
            flag("max.GB.deg(F^h) exceeds D_new on a generalized-CSR trial");
        if (!t.DPrime || *t.DPrime < D - 1) flag("D' >= D - 1 violated");
        if (t.wrlHom && t.DPrime &&
            t.maxGbDegHom != std::max(D, *t.DPrime))
            flag("weakly-revlex equality max.GB.deg = max{D, D'} violated");
        if (D >= maxDeg) {
            if (t.maxGbDegF > D) flag("max.GB.deg(F) exceeds D");
            if (t.sdStrictF > 2 * D - 2) flag("strict solving degree exceeds 2D - 2");
            if (t.sdStepF > 2 * D - 1) flag("step solving degree exceeds 2D - 1");
        }
    }
    return t;
}

SurveyAggregate runSurvey(const SurveyConfig& cfg) {
    SurveyAggregate agg;
    agg.config = cfg;
    agg.perTrial.resize(static_cast<std::size_t>(std::max(cfg.trials, 0)));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.trials) return;
            const std::uint64_t s = trialSeed(cfg.seed, i);
            TrialRecord t;
            try {
                const PolySystem F = randomSystem(cfg.n, cfg.degrees, cfg.q, s);
                t = runTrial(F, i, s);
            } catch (const std::exception& e) {
                t.index = i;
                t.trialSeed = s;
                t.failed = true;
                t.error = e.what();
            }
            agg.perTrial[static_cast<std::size_t>(i)] = std::move(t);
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& t : agg.perTrial) {
        if (t.failed) {
            ++agg.failures;
            continue;
        }
        ++agg.completed;
        agg.csrCount += t.csr;
        agg.semiregularCount += t.semiregular;
        agg.gcsrCount += t.gcsr;
        agg.wrlHomCount += t.wrlHom;
        agg.skippedNonCsr += !t.csr;
        ++agg.jointGcsrWrl[t.gcsr ? 1 : 0][t.wrlHom ? 1 : 0];
        agg.thm11Violations += t.thm11Applicable && !t.thm11Pass;
        agg.lemma4xViolations += !t.lemma4xPass;
        agg.totalStepCount += static_cast<std::uint64_t>(t.stepsF);
        agg.totalZeroReductions += static_cast<std::uint64_t>(t.zeroReductionsF);
        for (const auto& v : t.violations) {
            const bool chain = v.find("chain") != std::string::npos ||
                               v.find("differ from max.GB.deg") != std::string::npos ||
                               v.find("differs from max.GB.deg") != std::string::npos ||
                               v.find("cap exceeded") != std::string::npos;
            const bool dehom = v.find("dehomogenized") != std::string::npos;
            const bool thm = v.find("Theorem 1.1") != std::string::npos ||
                             v.find("correspondence lemmas") != std::string::npos;
            if (chain)
                ++agg.chainViolations;
            else if (dehom)
                ++agg.dehomViolations;
            else if (!thm)
                ++agg.boundViolations;
        }
    }
    return agg;
}

namespace {

using nlohmann::json;

json optInt(const std::optional<int>& v) { return v ? json(*v) : json("inf"); }

json trialJson(const TrialRecord& t) {
    json j;
    j["index"] = t.index;
    j["seed"] = t.trialSeed;
    if (t.failed) {
        j["error"] = t.error;
        return j;
    }
    j["csr"] = t.csr;
    j["semiregular"] = t.semiregular;
    j["gcsr"] = t.gcsr;
    j["wrl_hom"] = t.wrlHom;
    j["wrl_top"] = t.wrlTop;
    j["D"] = optInt(t.D);
    j["D_prime"] = optInt(t.DPrime);
    j["projective_zeros"] = t.projectiveZeros ? json(*t.projectiveZeros) : json(nullptr);
    j["max_gb_deg"] = {{"F", t.maxGbDegF}, {"F_top", t.maxGbDegTop}, {"F_h", t.maxGbDegHom}};
    j["sd"] = {{"step", t.sdStepF},
               {"strict", t.sdStrictF},
               {"mac", t.sdMacF},
               {"mut", t.sdMutF},
               {"mac_hom", t.sdMacH},
               {"mut_hom", t.sdMutH}};
    j["s0"] = t.s0;
    j["bounds"] = {{"lazard", t.lazard},
                   {"thm12", t.thm12Main ? json(*t.thm12Main) : json(nullptr)},
                   {"d_new", t.dNew}};
    j["steps"] = t.stepsF;
    j["zero_reductions"] = t.zeroReductionsF;
    j["thm11"] = {{"applicable", t.thm11Applicable}, {"pass", t.thm11Pass}};
    j["lemma4x_pass"] = t.lemma4xPass;
    j["violations"] = t.violations;
    return j;
}

} // namespace

std::string trialToJson(const TrialRecord& t) { return trialJson(t).dump(2); }

std::string surveyToJson(const SurveyAggregate& agg) {
    json j;
    j["schema"] = "gblab-survey-v1";
    j["config"] = {{"n", agg.config.n},
                   {"m", agg.config.m()},
                   {"degrees", agg.config.degrees},
                   {"q", agg.config.q},
                   {"trials", agg.config.trials},
                   {"seed", agg.config.seed},
                   {"wrl_convention", "precedes = strictly greater under DRL"}};
    j["completed"] = agg.completed;
    j["failures"] = agg.failures;
    const double denom = agg.completed > 0 ? agg.completed : 1;
    j["csr_rate"] = agg.csrCount / denom;
    j["semiregular_rate"] = agg.semiregularCount / denom;
    j["gcsr_rate"] = agg.gcsrCount / denom;
    j["wrl_rate"] = agg.wrlHomCount / denom;
    j["skipped_non_csr"] = agg.skippedNonCsr;
    j["joint_gcsr_wrl"] = {{"both", agg.jointGcsrWrl[1][1]},
                           {"gcsr_only", agg.jointGcsrWrl[1][0]},
                           {"wrl_only", agg.jointGcsrWrl[0][1]},
                           {"neither", agg.jointGcsrWrl[0][0]}};
    j["thm11_violations"] = agg.thm11Violations;
    j["lemma4x_violations"] = agg.lemma4xViolations;
    j["bound_violations"] = agg.boundViolations;
    j["chain_violations"] = agg.chainViolations;
    j["dehom_violations"] = agg.dehomViolations;
    j["steps_total"] = agg.totalStepCount;
    j["zero_reductions_total"] = agg.totalZeroReductions;
    json trials = json::array();
    for (const auto& t : agg.perTrial) trials.push_back(trialJson(t));
    j["per_trial"] = trials;
    return j.dump(2);
}

} // namespace gblab
