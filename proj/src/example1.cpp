#include "gblab/example1.hpp"

#include "gblab/regularity.hpp"
#include "gblab/survey.hpp"

#include <algorithm>
#include <sstream>

namespace gblab {

void FixtureVerdict::record(const std::string& name, bool ok, const std::string& detail) {
    checks.emplace_back(name, ok);
    if (!ok) {
        pass = false;
        if (!detail.empty()) diffs.push_back(name + ": " + detail);
    }
}

NamedSystem example1System(bool corruptCoefficient) {
    std::string text =
        "ring q=73 vars=x1,x2,x3\n"
        "x1^2 + 3*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2 - x1 - 2*x2 + x3\n"
        "4*x1^2 + 3*x1*x2 + 4*x1*x3 + x3^2 - 2*x1 - x2 + 2*x3\n"
        "3*x1^2 + 9*x2^2 - 6*x2*x3 + x3^2 - x1 + x2 - x3\n"
        "x1^2 - 6*x1*x2 + 9*x2^2 + 2*x1*x3 - 6*x2*x3 + 2*x3^2 - 2*x1 + x2\n";
    if (corruptCoefficient) {
        const auto pos = text.find("9*x2^2 - 6*x2*x3");
        text.replace(pos, 1, "8"); // perturb one coefficient of f_3
    }
    return parseSystemText(text);
}

namespace {

std::vector<std::string> sortedPolyStrings(const std::vector<Polynomial>& polys,
                                           const std::vector<std::string>& names) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(polyToString(p, names));
    std::sort(out.begin(), out.end());
    return out;
}

std::string joined(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += "  " + s + "\n";
    return out;
}

} // namespace

FixtureVerdict example1Fixture(bool corruptCoefficient) {
    FixtureVerdict verdict;
    const NamedSystem sys = example1System(corruptCoefficient);
    const auto namesTop = sys.varNames;
    const auto namesHom = homogenizedNames(sys.varNames);

    const SystemAnalysis a = analyzeSystem(sys.system);

    auto expectSet = [&](const std::string& name, const std::vector<Polynomial>& got,
                         const std::vector<std::string>& names,
                         std::vector<std::string> expected) {
        auto gotS = sortedPolyStrings(got, names);
        std::sort(expected.begin(), expected.end());
        verdict.record(name, gotS == expected,
                       "expected:\n" + joined(expected) + "got:\n" + joined(gotS));
    };

    expectSet("reduced GB of <F> is {x1, x2, x3}", a.traceF.reducedBasis, namesTop,
              {"x1", "x2", "x3"});

    expectSet("reduced GB of <F_top> (6 elements)", a.traceTop.reducedBasis, namesTop,
              {
                  "x2*x3^2",
                  "x3^3",
                  "x1^2 + 68*x2*x3 + 55*x3^2",
                  "x1*x2 + 27*x2*x3 + 29*x3^2",
                  "x2^2 + x2*x3 + 71*x3^2",
                  "x1*x3 + 3*x2*x3 + 33*x3^2",
              });

    expectSet("reduced GB of <F_h> (11 elements)", a.traceHom.reducedBasis, namesHom,
              {
                  "x1*y^3",
                  "x2*y^3",
                  "x3*y^3",
                  "x2*x3^2 + 60*x1*y^2 + 22*x2*y^2 + 39*x3*y^2",
                  "x3^3 + 72*x1*y^2 + 14*x2*y^2 + 56*x3*y^2",
                  "x2*x3*y + 16*x1*y^2 + 55*x2*y^2 + 38*x3*y^2",
                  "x3^2*y + 72*x1*y^2 + 66*x2*y^2 + 70*x3*y^2",
                  "x1^2 + 68*x2*x3 + 55*x3^2 + 72*x1*y + 40*x2*y + 14*x3*y",
                  "x1*x2 + 27*x2*x3 + 29*x3^2 + 20*x1*y + 37*x2*y + 12*x3*y",
                  "x2^2 + x2*x3 + 71*x3^2 + 57*x1*y + 3*x2*y + 52*x3*y",
                  "x1*x3 + 3*x2*x3 + 33*x3^2 + 22*x1*y + 5*x2*y + 14*x3*y",
              });

    // Hilbert data: HS_{R/<F_top>} = 1 + 3z + 2z^2 and D = 3.
    const auto& hfTop = a.hilbTop.hf;
    verdict.record("HF of R/<F_top> is (1, 3, 2, 0)",
                   hfTop.size() > 3 && hfTop[0] == 1 && hfTop[1] == 3 && hfTop[2] == 2 &&
                       hfTop[3] == 0);
    verdict.record("D = 3", a.hilbTop.dReg && *a.hilbTop.dReg == 3);

    const auto& hfHom = a.hilbHom.hf;
    verdict.record("HF of R'/<F_h> at 0..2 is (1, 4, 6)",
                   hfHom.size() > 2 && hfHom[0] == 1 && hfHom[1] == 4 && hfHom[2] == 6);
    verdict.record("HF of R'/<F_h>(3) = 4", hfHom.size() > 3 && hfHom[3] == 4);
    verdict.record("HF of R'/<F_h>(4) = 1", hfHom.size() > 4 && hfHom[4] == 1);

    // Degree-slice correspondence below D.
    const RegularityReport rep = classify(a);
    const Lemma4xVerdict l4 = verifyLemmas4x(a, rep);
    verdict.record("LM(G_hom)_d = LM(G_top)_d for d < 3",
                   l4.lmSlicesApplicable && l4.lmSlicesEqualOk);
    verdict.record("F_top is semi-regular", rep.isSemiregular);
    verdict.record("F_top is cryptographic semi-regular", rep.isCryptoSemiregular);

    verdict.record("max.GB.deg(F_h) = 4", a.traceHom.maxGbDegree == 4);
    const auto sat = saturationExponent(sys.system);
    verdict.record("D + S_0 covers max.GB.deg(F_h)",
                   3 + sat.s0 >= a.traceHom.maxGbDegree);
    verdict.record("S_0 = 3", sat.s0 == 3);

    // Step-degree telemetry for G stays within 2D - 1 = 5.
    verdict.record("step degrees of G bounded by 5", a.traceF.sdStep <= 5);
    return verdict;
}

} // namespace gblab
