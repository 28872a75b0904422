#include "gblab/regularity.hpp"

#include "gblab/bounds.hpp"
#include "gblab/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gblab {

namespace {

// p *= (1 - z^d), exact.
std::vector<long long> polyMulOneMinusPower(std::vector<long long> p, int d) {
    p.resize(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(d);) p[i] -= p[i - d];
    return p;
}

void trimZeros(std::vector<long long>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact test of HS = [prod (1-z^{d_j}) / (1-z)^n] for a quotient with
// Hilbert numerator N (so HS = N/(1-z)^n). If the raw series shows a
// non-positive coefficient within the cap, the bracket is the polynomial B
// and the claim reads N = B*(1-z)^n; otherwise the claim is full series
// equality, i.e. N = prod (1-z^{d_j}) as polynomials. The cap is chosen
// large enough (degree-sum) that any truncation point of a true Hilbert
// series is visible.
bool hsEqualsBracket(const std::vector<long long>& numerator, int n,
                     const std::vector<int>& degrees, int cap) {
    const TruncatedSeries raw = seriesProductOver(n, degrees, cap);
    bool truncated = false;
    for (int k = 0; k <= cap; ++k)
        if (raw.coeff(k) <= 0) {
            truncated = true;
            break;
        }
    std::vector<long long> expected;
    if (truncated) {
        const TruncatedSeries b = bracketTruncate(raw);
        for (int k = 0; k <= b.degree(); ++k) expected.push_back(b.coeffLL(k));
        for (int r = 0; r < n; ++r) expected = polyMulOneMinusPower(std::move(expected), 1);
    } else {
        expected = {1};
        for (int d : degrees) expected = polyMulOneMinusPower(std::move(expected), d);
    }
    trimZeros(expected);
    std::vector<long long> got = numerator;
    trimZeros(got);
    return got == expected;
}

} // namespace

SystemAnalysis analyzeSystem(const PolySystem& F) {
    const int n = static_cast<int>(F.ring.nvars);
    const auto degrees = F.degrees();
    const int cap = defaultSeriesCap(n, degrees);

    SystemAnalysis a{F,
                     topParts(F),
                     homogenized(F),
                     {},
                     {},
                     {},
                     {},
                     {},
                     cap,
                     TruncatedSeries(cap),
                     TruncatedSeries(cap)};
    a.traceF = buchberger(F, SelectionStrategy::Sugar);
    a.traceTop = buchberger(a.Ftop, SelectionStrategy::Normal);
    a.traceHom = buchberger(a.Fh, SelectionStrategy::Normal);
    a.hilbTop = regularityDegrees(lmIdeal(a.traceTop.reducedBasis, F.ring.nvars), cap);
    a.hilbHom = regularityDegrees(lmIdeal(a.traceHom.reducedBasis, F.ring.nvars + 1), cap);
    a.rawOverN = seriesProductOver(n, degrees, cap);
    a.rawOverN1 = seriesProductOver(n + 1, degrees, cap);
    return a;
}

int dRegularUpTo(const std::vector<long long>& hf, const TruncatedSeries& raw, int cap) {
    for (int t = 0; t <= cap; ++t)
        if (hf[static_cast<std::size_t>(t)] != raw.coeff(t)) return t;
    return cap + 1;
}

bool isDRegular(const PolySystem& homogeneousF, int d) {
    if (!homogeneousF.isHomogeneous())
        throw std::invalid_argument("isDRegular: input must be homogeneous");
    const int n = static_cast<int>(homogeneousF.ring.nvars);
    const auto degrees = homogeneousF.degrees();
    const int cap = std::max(defaultSeriesCap(n, degrees), d);
    const auto gb = buchberger(homogeneousF, SelectionStrategy::Normal).reducedBasis;
    const auto hf = expandHilbertSeries(hilbertNumerator(lmIdeal(gb, homogeneousF.ring.nvars)),
                                        homogeneousF.ring.nvars, cap);
    const TruncatedSeries raw = seriesProductOver(n, degrees, cap);
    return dRegularUpTo(hf, raw, cap) >= d;
}

RegularityReport classify(const SystemAnalysis& a) {
    RegularityReport rep;
    const int n = static_cast<int>(a.F.ring.nvars);
    const auto degrees = a.F.degrees();

    rep.D = a.hilbTop.dReg;
    rep.DPrime = a.hilbHom.genDReg;
    rep.projectiveZeroCount = a.hilbHom.hilbertPolyConstant;
    rep.isDRegularUpTo = dRegularUpTo(a.hilbTop.hf, a.rawOverN, a.cap);

    // Cryptographic semi-regularity via the exact Hilbert series
    // characterization (covers the non-Artinian case as well).
    rep.isCryptoSemiregular = hsEqualsBracket(a.hilbTop.numerator, n, degrees, a.cap);
    if (a.hilbTop.dReg && rep.isCryptoSemiregular != (rep.isDRegularUpTo >= *a.hilbTop.dReg))
        throw std::logic_error("crypto semi-regularity characterizations disagree");

    // Semi-regularity prefix by prefix, each proper prefix with its own
    // reduced basis; the full prefix is the crypto test above.
    rep.isSemiregular = rep.isCryptoSemiregular;
    for (std::size_t i = 1; i < a.Ftop.gens.size() && rep.isSemiregular; ++i) {
        std::vector<int> prefDegs(degrees.begin(), degrees.begin() + i);
        PolySystem prefix(a.Ftop.ring, std::vector<Polynomial>(a.Ftop.gens.begin(),
                                                               a.Ftop.gens.begin() + i));
        const auto gb = buchberger(prefix, SelectionStrategy::Normal).reducedBasis;
        const auto num = hilbertNumerator(lmIdeal(gb, a.Ftop.ring.nvars));
        rep.isSemiregular = hsEqualsBracket(num, n, prefDegs, a.cap);
    }

    // Generalized cryptographic semi-regularity of F^h: D'-regularity.
    if (rep.DPrime) {
        const auto hfHom = a.hilbHom.hf;
        rep.isGeneralizedCsr = dRegularUpTo(hfHom, a.rawOverN1, a.cap) >= *rep.DPrime;
    }

    rep.wrlHom = isWeaklyRevlex(lmIdeal(a.traceHom.reducedBasis, a.Fh.ring.nvars));
    rep.wrlTop = isWeaklyRevlex(lmIdeal(a.traceTop.reducedBasis, a.Ftop.ring.nvars));
    return rep;
}

RegularityReport classify(const PolySystem& F) { return classify(analyzeSystem(F)); }

SyzygySlice koszulH1Dim(const PolySystem& homogeneousF, int d, std::size_t entryCap) {
    if (!homogeneousF.isHomogeneous())
        throw std::invalid_argument("koszulH1Dim: input must be homogeneous");
    const Ring& ring = homogeneousF.ring;
    const std::size_t nv = ring.nvars;
    const auto& gens = homogeneousF.gens;
    const auto degs = homogeneousF.degrees();

    SyzygySlice slice;
    slice.degree = d;

    // Kernel of phi_1 in degree d: columns (u, j) with deg(u) = d - d_j,
    // rows the degree-d monomials of R.
    const auto rowsMons = monomialsOfDegreeDesc(nv, static_cast<std::uint32_t>(d));
    std::unordered_map<Monomial, std::size_t, MonomialHash> rowIdx;
    for (std::size_t i = 0; i < rowsMons.size(); ++i) rowIdx.emplace(rowsMons[i], i);

    struct Col {
        Monomial u;
        std::size_t j;
    };
    std::vector<Col> cols;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (d < degs[j]) continue;
        for (const auto& u : monomialsOfDegreeDesc(nv, static_cast<std::uint32_t>(d - degs[j])))
            cols.push_back(Col{u, j});
    }
    if (rowsMons.size() * cols.size() > entryCap)
        throw std::runtime_error("koszulH1Dim: matrix entry cap exceeded");

    FqMatrix phi1(cols.size(), rowsMons.size(), ring.modulus);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Polynomial uf = gens[cols[c].j].mulTerm(1, cols[c].u);
        for (const auto& t : uf.terms()) phi1.at(c, rowIdx.at(t.mono)) = t.coeff;
    }
    slice.dimSyz = static_cast<long long>(cols.size()) -
                   static_cast<long long>(rank(phi1));

    // Degree-d slice of tsyz: multiples u * (f_i e_j - f_j e_i) with
    // deg(u) = d - d_i - d_j, coordinates over the (monomial, index) basis
    // of (K_1)_d.
    std::vector<std::size_t> offset(gens.size() + 1, 0);
    std::vector<std::vector<Monomial>> componentMons(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        offset[j + 1] = offset[j];
        if (d >= degs[j]) {
            componentMons[j] =
                monomialsOfDegreeDesc(nv, static_cast<std::uint32_t>(d - degs[j]));
            offset[j + 1] += componentMons[j].size();
        }
    }
    const std::size_t k1Dim = offset[gens.size()];
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> compIdx(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < componentMons[j].size(); ++i)
            compIdx[j].emplace(componentMons[j][i], i);

    auto monomialCount = [&](int deg) {
        std::size_t r = 1;
        for (int i = 1; i < static_cast<int>(nv); ++i) r = r * (deg + i) / i;
        return r; // C(nv - 1 + deg, deg)
    };
    std::size_t tsyzRowCount = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const int rem = d - degs[i] - degs[j];
            if (rem >= 0) tsyzRowCount += monomialCount(rem);
        }
    if (tsyzRowCount * k1Dim > entryCap)
        throw std::runtime_error("koszulH1Dim: matrix entry cap exceeded");

    std::vector<std::vector<std::uint32_t>> tsyzRows;
    const PrimeField field = ring.field();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const int rem = d - degs[i] - degs[j];
            if (rem < 0) continue;
            for (const auto& u : monomialsOfDegreeDesc(nv, static_cast<std::uint32_t>(rem))) {
                std::vector<std::uint32_t> row(k1Dim, 0);
                const Polynomial ufi = gens[i].mulTerm(1, u); // component e_j
                for (const auto& t : ufi.terms())
                    row[offset[j] + compIdx[j].at(t.mono)] = t.coeff;
                const Polynomial ufj = gens[j].mulTerm(1, u); // component e_i, negated
                for (const auto& t : ufj.terms())
                    row[offset[i] + compIdx[i].at(t.mono)] = field.neg(t.coeff);
                tsyzRows.push_back(std::move(row));
            }
        }
    FqMatrix tsyz(0, k1Dim, ring.modulus);
    for (auto& r : tsyzRows) tsyz.appendRow(r);
    slice.dimTsyz = tsyzRows.empty() ? 0 : static_cast<long long>(rank(tsyz));

    slice.dimH1 = slice.dimSyz - slice.dimTsyz;
    if (slice.dimH1 < 0)
        throw std::logic_error("koszulH1Dim: trivial syzygies exceed syzygies");
    return slice;
}

bool isWeaklyRevlex(const MonomialIdeal& J) {
    for (const auto& u : J.gens()) {
        bool ok = true;
        forEachMonomialOfDegree(J.nvars(), u.degree(), [&](const Monomial& v) {
            if (ok && drlGreater(v, u) && !J.contains(v)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

namespace {

// Matrix of multiplication by y between the standard monomial bases of
// consecutive degrees of R'/<F^h>.
FqMatrix yMultiplicationMatrix(const SystemAnalysis& a,
                               const std::vector<Monomial>& fromBase,
                               const std::vector<Monomial>& toBase) {
    const Ring& rh = a.Fh.ring;
    std::unordered_map<Monomial, std::size_t, MonomialHash> toIdx;
    for (std::size_t i = 0; i < toBase.size(); ++i) toIdx.emplace(toBase[i], i);
    const Monomial y = Monomial::variable(rh.nvars, rh.nvars - 1);
    FqMatrix m(toBase.size(), fromBase.size(), rh.modulus);
    for (std::size_t c = 0; c < fromBase.size(); ++c) {
        const Polynomial yt = Polynomial::monomial(rh, fromBase[c] * y);
        const Polynomial nf = normalForm(yt, a.traceHom.reducedBasis);
        for (const auto& t : nf.terms()) m.at(toIdx.at(t.mono), c) = t.coeff;
    }
    return m;
}

std::vector<Monomial> standardMonomials(const MonomialIdeal& J, int d) {
    std::vector<Monomial> out;
    forEachMonomialOfDegree(J.nvars(), static_cast<std::uint32_t>(d), [&](const Monomial& m) {
        if (!J.contains(m)) out.push_back(m);
    });
    return out;
}

} // namespace

Thm11Verdict verifyTheorem11(const SystemAnalysis& a, const RegularityReport& rep) {
    Thm11Verdict v;
    v.applicable = a.hilbTop.artinian && rep.isCryptoSemiregular;
    v.DPrime = rep.DPrime;
    if (!v.applicable) return v;
    v.D = *a.hilbTop.dReg;
    const int D = v.D;
    const int hi = std::min(a.cap, std::max(D + 2, rep.DPrime ? *rep.DPrime + 2 : D + 2));

    const auto& hfTop = a.hilbTop.hf;
    const auto& hfHom = a.hilbHom.hf;

    long long cum = 0;
    for (int d = 0; d < D; ++d) {
        const long long prev = d >= 1 ? hfHom[static_cast<std::size_t>(d) - 1] : 0;
        if (hfHom[static_cast<std::size_t>(d)] != hfTop[static_cast<std::size_t>(d)] + prev)
            v.hfRecursionOk = false;
        cum += hfTop[static_cast<std::size_t>(d)];
        if (hfHom[static_cast<std::size_t>(d)] != cum) v.cumulativeOk = false;
        if (a.rawOverN1.coeff(d) != hfHom[static_cast<std::size_t>(d)]) v.congruenceOk = false;
    }

    // Unimodal with the peak at D-1: increasing below D, non-increasing after.
    for (int d = 1; d <= hi; ++d) {
        const long long prev = hfHom[static_cast<std::size_t>(d) - 1];
        const long long cur = hfHom[static_cast<std::size_t>(d)];
        if (d < D ? cur < prev : cur > prev) v.unimodalOk = false;
    }

    const MonomialIdeal Jhom = lmIdeal(a.traceHom.reducedBasis, a.Fh.ring.nvars);
    std::vector<Monomial> below = standardMonomials(Jhom, 0);
    for (int d = 1; d <= hi; ++d) {
        std::vector<Monomial> at = standardMonomials(Jhom, d);
        FqMatrix m = yMultiplicationMatrix(a, below, at);
        const std::size_t r = m.rows() && m.cols() ? rank(m) : 0;
        if (d < D) {
            if (r != below.size()) v.yMapRanksOk = false; // injectivity
        } else {
            if (r != at.size()) v.yMapRanksOk = false; // surjectivity
        }
        below = std::move(at);
    }

    if (a.F.gens.size() == a.F.ring.nvars)
        v.mEqualsNOk = rep.DPrime && *rep.DPrime == D - 1;
    return v;
}

Lemma4xVerdict verifyLemmas4x(const SystemAnalysis& a, const RegularityReport& rep) {
    Lemma4xVerdict v;
    v.lmSlicesApplicable = a.hilbTop.artinian && rep.isCryptoSemiregular;
    v.degreeDApplicable = a.hilbTop.artinian;
    if (!v.degreeDApplicable && !v.lmSlicesApplicable) return v;
    const int D = *a.hilbTop.dReg;
    const std::size_t nv = a.Fh.ring.nvars;

    if (v.lmSlicesApplicable) {
        for (int d = 0; d < D; ++d) {
            std::unordered_set<Monomial, MonomialHash> topSlice, homSlice;
            for (const auto& g : a.traceTop.reducedBasis)
                if (static_cast<int>(g.degree()) == d) {
                    auto e = g.lm().exponents();
                    e.push_back(0); // embed into R[y]
                    topSlice.insert(Monomial(std::move(e)));
                }
            for (const auto& g : a.traceHom.reducedBasis)
                if (static_cast<int>(g.degree()) == d) homSlice.insert(g.lm());
            if (topSlice != homSlice) v.lmSlicesEqualOk = false;
        }
    }

    if (v.degreeDApplicable) {
        // Every degree-D monomial in X alone is divisible by some LM of
        // (G_hom)_{<= D}.
        std::vector<Monomial> lowLMs;
        for (const auto& g : a.traceHom.reducedBasis)
            if (static_cast<int>(g.degree()) <= D) lowLMs.push_back(g.lm());
        forEachMonomialOfDegree(nv - 1, static_cast<std::uint32_t>(D), [&](const Monomial& mx) {
            auto e = mx.exponents();
            e.push_back(0);
            const Monomial m(std::move(e));
            bool covered = false;
            for (const auto& p : lowLMs)
                if (p.divides(m)) {
                    covered = true;
                    break;
                }
            if (!covered) v.rDCoveredOk = false;
        });

        for (const auto& g : a.traceHom.reducedBasis) {
            if (static_cast<int>(g.degree()) != D) continue;
            const Polynomial gt = topPart(g);
            if (gt.isZero()) continue;
            if (gt.terms().size() != 1 || gt.lm() != g.lm() || gt.lc() != g.lc())
                v.topPartsSingleTermOk = false;
        }
    }
    return v;
}

} // namespace gblab
