#include <doctest.h>

#include "gblab/example1.hpp"
#include "gblab/io.hpp"
#include "gblab/regularity.hpp"

using namespace gblab;

namespace {

PolySystem homSys(const std::string& text) { return parseSystemText(text).system; }

} // namespace

TEST_CASE("d-regularity") {
    // (x1^2, x1*x2): the syzygy x2 e1 - x1 e2 lives in degree 3, so the
    // sequence is 3-regular but not 4-regular.
    const PolySystem F = homSys("ring q=7 vars=x1,x2\nx1^2\nx1*x2\n");
    CHECK(isDRegular(F, 3));
    CHECK_FALSE(isDRegular(F, 4));

    // a single nonzero polynomial is regular at every degree
    const PolySystem single = homSys("ring q=7 vars=x1,x2\nx1^2 + x2^2\n");
    for (int d = 2; d <= 6; ++d) CHECK(isDRegular(single, d));

    CHECK_THROWS_AS(isDRegular(homSys("ring q=7 vars=x1,x2\nx1^2 + x1\n"), 3),
                    std::invalid_argument);

    const PolySystem Ftop = topParts(example1System().system);
    CHECK(isDRegular(Ftop, 3));
}

TEST_CASE("koszul H1 slices") {
    const PolySystem F = homSys("ring q=7 vars=x1,x2\nx1^2\nx1*x2\n");
    const SyzygySlice s3 = koszulH1Dim(F, 3);
    CHECK(s3.dimSyz == 1);
    CHECK(s3.dimTsyz == 0);
    CHECK(s3.dimH1 == 1);

    // the trivial syzygy arrives in degree 4
    const SyzygySlice s4 = koszulH1Dim(F, 4);
    CHECK(s4.dimTsyz == 1);

    // regular sequences have vanishing H1 everywhere
    const PolySystem reg = homSys("ring q=7 vars=x1,x2\nx1 + x2\nx2^2\n");
    for (int d = 1; d <= 6; ++d) CHECK(koszulH1Dim(reg, d).dimH1 == 0);
    const PolySystem vars = homSys("ring q=7 vars=x1,x2\nx1\nx2\n");
    for (int d = 1; d <= 6; ++d) CHECK(koszulH1Dim(vars, d).dimH1 == 0);

    // degree-2 slice of the reference top parts is clean (3-regularity)
    const PolySystem Ftop = topParts(example1System().system);
    CHECK(koszulH1Dim(Ftop, 2).dimH1 == 0);

    CHECK_THROWS_AS(koszulH1Dim(reg, 40, /*entryCap=*/10), std::runtime_error);
}

TEST_CASE("d-regularity agrees with the Koszul oracle on small systems") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        const int n = 1 + static_cast<int>(seed % 3);
        const int m = 1 + static_cast<int>((seed / 3) % 4);
        const PolySystem F =
            topParts(randomSystem(n, std::vector<int>(static_cast<std::size_t>(m), 2), 31, seed));
        const int maxd = 2;
        for (int d = maxd; d <= 6; ++d) {
            bool h1Clean = true;
            for (int t = 0; t <= d - 1; ++t)
                if (koszulH1Dim(F, t).dimH1 != 0) h1Clean = false;
            CHECK(isDRegular(F, d) == h1Clean);
        }
    }
}

TEST_CASE("weakly reverse lexicographic ideals") {
    // <x1, x2^2> in two variables: initial segments at each degree
    MonomialIdeal J1(2, {Monomial::variable(2, 0), Monomial::variable(2, 1, 2)});
    CHECK(isWeaklyRevlex(J1));

    // <x2^2> misses x1^2 which precedes it
    MonomialIdeal J2(2, {Monomial::variable(2, 1, 2)});
    CHECK_FALSE(isWeaklyRevlex(J2));

    // the reference homogenized LM ideal is weakly reverse lexicographic
    const SystemAnalysis a = analyzeSystem(example1System().system);
    CHECK(isWeaklyRevlex(lmIdeal(a.traceHom.reducedBasis, 4)));
    const RegularityReport rep = classify(a);
    CHECK(rep.wrlHom);
}

TEST_CASE("classification of the reference system") {
    const RegularityReport rep = classify(example1System().system);
    CHECK(rep.isSemiregular);
    CHECK(rep.isCryptoSemiregular);
    REQUIRE(rep.D.has_value());
    CHECK(*rep.D == 3);
    REQUIRE(rep.DPrime.has_value());
    CHECK(*rep.DPrime == 4);
    CHECK(rep.isGeneralizedCsr);
    CHECK(rep.isDRegularUpTo >= 3);
    CHECK(rep.projectiveZeroCount == 1);
}

TEST_CASE("classification below the zero-dimensional regime") {
    // m < n: a regular sequence is semi-regular with d_reg = infinity
    const PolySystem F = parseSystemText(
        "ring q=31 vars=x1,x2,x3\n"
        "x1^2 + x2^2\n"
        "x2*x3 + x3^2\n").system;
    const RegularityReport rep = classify(F);
    CHECK(rep.isSemiregular);
    CHECK(rep.isCryptoSemiregular);
    CHECK_FALSE(rep.D.has_value()); // not Artinian
}

TEST_CASE("a dependent pair is not cryptographic semi-regular") {
    // f2 = x1 * f1 kills injectivity immediately
    const PolySystem F = homSys("ring q=7 vars=x1,x2\nx1^2 + x2^2\nx1^3 + x1*x2^2\n");
    const RegularityReport rep = classify(F);
    CHECK_FALSE(rep.isCryptoSemiregular);
    CHECK_FALSE(rep.isSemiregular);
}

TEST_CASE("theorem 1.1 checks on the reference system") {
    const SystemAnalysis a = analyzeSystem(example1System().system);
    const RegularityReport rep = classify(a);
    const Thm11Verdict v = verifyTheorem11(a, rep);
    REQUIRE(v.applicable);
    CHECK(v.hfRecursionOk);
    CHECK(v.cumulativeOk);
    CHECK(v.unimodalOk);
    CHECK(v.yMapRanksOk);
    CHECK(v.congruenceOk);
    CHECK(v.pass());
    CHECK(v.D == 3);
}

TEST_CASE("m = n regular case gives D' = D - 1") {
    const PolySystem F = parseSystemText(
        "ring q=31 vars=x1,x2\n"
        "x1^2 + x2\n"
        "x2^2 + x1\n").system;
    const SystemAnalysis a = analyzeSystem(F);
    const RegularityReport rep = classify(a);
    REQUIRE(rep.D.has_value());
    CHECK(*rep.D == 3);
    REQUIRE(rep.DPrime.has_value());
    CHECK(*rep.DPrime == 2);
    const Thm11Verdict v = verifyTheorem11(a, rep);
    CHECK(v.applicable);
    CHECK(v.mEqualsNOk);
    CHECK(v.pass());
}

TEST_CASE("degree-D correspondence lemmas") {
    const SystemAnalysis a = analyzeSystem(example1System().system);
    const RegularityReport rep = classify(a);
    const Lemma4xVerdict v = verifyLemmas4x(a, rep);
    CHECK(v.lmSlicesApplicable);
    CHECK(v.degreeDApplicable);
    CHECK(v.lmSlicesEqualOk);
    CHECK(v.rDCoveredOk);
    CHECK(v.topPartsSingleTermOk);

    // homogeneous input: G_hom and G_top coincide under the embedding
    const PolySystem Ftop = topParts(example1System().system);
    const SystemAnalysis ah = analyzeSystem(Ftop);
    const RegularityReport reph = classify(ah);
    const Lemma4xVerdict vh = verifyLemmas4x(ah, reph);
    CHECK(vh.lmSlicesEqualOk);
    CHECK(vh.pass());
}
