#ifndef GBLAB_REGULARITY_HPP
#define GBLAB_REGULARITY_HPP

#include <optional>
#include <vector>

#include "gblab/groebner.hpp"
#include "gblab/hilbert.hpp"
#include "gblab/polynomial.hpp"
#include "gblab/series.hpp"

namespace gblab {

// Everything the per-system checks share: the three reduced bases, their
// Hilbert data, and the raw comparison series.
struct SystemAnalysis {
    PolySystem F;    // the affine (or homogeneous) input
    PolySystem Ftop; // top parts, same ring
    PolySystem Fh;   // homogenization, extended ring

    GroebnerTrace traceF;   // sugar strategy wrt DRL
    GroebnerTrace traceTop; // normal strategy (homogeneous)
    GroebnerTrace traceHom; // normal strategy wrt the homogenized DRL

    HilbertSummary hilbTop; // of <F^top> via its LM ideal
    HilbertSummary hilbHom; // of <F^h> via its LM ideal

    int cap = 0;                 // shared series/HF cap
    TruncatedSeries rawOverN;    // prod (1-z^{d_i}) / (1-z)^n
    TruncatedSeries rawOverN1;   // prod (1-z^{d_i}) / (1-z)^{n+1}

    std::optional<int> D() const { return hilbTop.dReg; }
    std::optional<int> DPrime() const { return hilbHom.genDReg; }
};

SystemAnalysis analyzeSystem(const PolySystem& F);

// d-regularity of a homogeneous sequence: HF_{R/<F>}(t) matches the raw
// series coefficient for every t < d (Theorem on truncated Hilbert series).
bool isDRegular(const PolySystem& homogeneousF, int d);

// Largest d <= cap+1 for which d-regularity is verified (the first HF /
// series mismatch bounds it).
int dRegularUpTo(const std::vector<long long>& hf, const TruncatedSeries& raw, int cap);

struct RegularityReport {
    int isDRegularUpTo = 0;        // of F^top, capped at cap+1
    bool isCryptoSemiregular = false;
    bool isSemiregular = false;
    bool isGeneralizedCsr = false;
    std::optional<int> D;          // d_reg(<F^top>); empty = infinity
    std::optional<int> DPrime;     // gen. d_reg(<F^h>); empty = infinity
    bool wrlHom = false;           // <LM(<F^h>)> weakly reverse lexicographic
    bool wrlTop = false;
    std::optional<long long> projectiveZeroCount; // of <F^h>, with multiplicity
};

RegularityReport classify(const SystemAnalysis& a);
RegularityReport classify(const PolySystem& F);

struct SyzygySlice {
    int degree = 0;
    long long dimSyz = 0;
    long long dimTsyz = 0;
    long long dimH1 = 0;
};

// Degree-d slice of H_1 of the Koszul complex: dim syz from the kernel of
// the first differential, dim tsyz from the span of the multiples of the
// f_i e_j - f_j e_i.
SyzygySlice koszulH1Dim(const PolySystem& homogeneousF, int d,
                        std::size_t entryCap = 500000);

// For each minimal generator u, every monomial of the same degree strictly
// greater than u under the order must lie in J.
bool isWeaklyRevlex(const MonomialIdeal& J);

struct Thm11Verdict {
    bool applicable = false; // <F^top> Artinian and F^top crypto semi-regular
    bool hfRecursionOk = true;
    bool cumulativeOk = true;
    bool unimodalOk = true;
    bool yMapRanksOk = true;
    bool congruenceOk = true;   // HS mod z^D matches prod/(1-z)^{n+1}
    bool mEqualsNOk = true;     // D' = D - 1 when m = n
    int D = 0;
    std::optional<int> DPrime;

    bool pass() const {
        return !applicable || (hfRecursionOk && cumulativeOk && unimodalOk &&
                               yMapRanksOk && congruenceOk && mEqualsNOk);
    }
};

Thm11Verdict verifyTheorem11(const SystemAnalysis& a, const RegularityReport& rep);

struct Lemma4xVerdict {
    bool lmSlicesApplicable = false; // needs crypto semi-regularity
    bool degreeDApplicable = false;  // needs only D < infinity
    bool lmSlicesEqualOk = true;     // LM(G_hom)_d = LM(G_top)_d for d < D
    bool rDCoveredOk = true;         // every degree-D monomial in X covered
    bool topPartsSingleTermOk = true;

    bool pass() const {
        return (!lmSlicesApplicable || lmSlicesEqualOk) &&
               (!degreeDApplicable || (rDCoveredOk && topPartsSingleTermOk));
    }
};

Lemma4xVerdict verifyLemmas4x(const SystemAnalysis& a, const RegularityReport& rep);

} // namespace gblab

#endif
