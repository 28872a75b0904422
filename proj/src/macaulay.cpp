#include "gblab/macaulay.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gblab {

namespace {

using ColumnIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

ColumnIndex indexColumns(const std::vector<Monomial>& cols) {
    ColumnIndex idx;
    idx.reserve(cols.size() * 2);
    for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], i);
    return idx;
}

std::vector<std::uint32_t> polyRow(const Polynomial& f, const ColumnIndex& idx,
                                   std::size_t ncols) {
    std::vector<std::uint32_t> row(ncols, 0);
    for (const auto& t : f.terms()) row[idx.at(t.mono)] = t.coeff;
    return row;
}

Polynomial rowPoly(const std::uint32_t* row, const std::vector<Monomial>& cols,
                   const Ring& ring) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (row[j]) terms.push_back(Term{cols[j], row[j]});
    return Polynomial(ring, std::move(terms));
}

// Every LM of the oracle reduced GB is divisible by some row LM; since the
// rows lie in <F>, this is exactly "the rows contain a Groebner basis".
bool coversOracle(const std::vector<Monomial>& rowLMs,
                  const std::vector<Polynomial>& oracleReducedGB) {
    for (const auto& g : oracleReducedGB) {
        bool covered = false;
        for (const auto& p : rowLMs)
            if (p.divides(g.lm())) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<Monomial> pivotMonomials(const std::vector<std::size_t>& pivotCols,
                                     const std::vector<Monomial>& cols) {
    std::vector<Monomial> out;
    out.reserve(pivotCols.size());
    for (auto c : pivotCols) out.push_back(cols[c]);
    return out;
}

} // namespace

MacaulayMatrix buildMacaulay(const PolySystem& F, int d, bool homogeneousSlice) {
    MacaulayMatrix M;
    M.ring = F.ring;
    M.degree = d;
    M.homogeneousSlice = homogeneousSlice;
    M.columns = homogeneousSlice
                    ? monomialsOfDegreeDesc(F.ring.nvars, static_cast<std::uint32_t>(d))
                    : monomialsUpToDegreeDesc(F.ring.nvars, static_cast<std::uint32_t>(d));
    const auto idx = indexColumns(M.columns);

    M.mat = FqMatrix(0, M.columns.size(), F.ring.modulus);
    for (std::size_t j = 0; j < F.gens.size(); ++j) {
        const auto& f = F.gens[j];
        const int df = static_cast<int>(f.degree());
        if (df > d) continue;
        if (homogeneousSlice && !f.isHomogeneous())
            throw std::invalid_argument("homogeneous Macaulay slice needs homogeneous input");
        const auto multipliers =
            homogeneousSlice ? monomialsOfDegreeDesc(F.ring.nvars,
                                                     static_cast<std::uint32_t>(d - df))
                             : monomialsUpToDegreeDesc(F.ring.nvars,
                                                       static_cast<std::uint32_t>(d - df));
        for (const auto& t : multipliers) {
            M.mat.appendRow(polyRow(f.mulTerm(1, t), idx, M.columns.size()));
            M.rowLabels.emplace_back(t, static_cast<int>(j));
        }
    }
    if (M.mat.rows() == 0) throw std::invalid_argument("Macaulay degree below every generator");
    return M;
}

MacaulayRref rrefMacaulay(const MacaulayMatrix& M) {
    RrefSummary s;
    FqMatrix r = rref(M.mat, s);
    MacaulayRref out;
    out.pivotCols = s.pivotCols;
    out.rank = s.rank;
    out.basisPolys.reserve(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i)
        out.basisPolys.push_back(rowPoly(r.row(i), M.columns, M.ring));
    return out;
}

SolveDegreeResult sdMac(const PolySystem& F, int dmax,
                        const std::vector<Polynomial>& oracleReducedGB) {
    SolveDegreeResult res;
    const auto degs = F.degrees();
    const int dmin = *std::min_element(degs.begin(), degs.end());
    if (dmax < dmin) throw std::invalid_argument("sdMac: dmax below every generator degree");

    if (F.isHomogeneous()) {
        // M_{<=d} is block-diagonal by degree; pool the slice pivots.
        std::vector<Monomial> pooled;
        for (int d = dmin; d <= dmax; ++d) {
            MacaulayMatrix M = buildMacaulay(F, d, /*homogeneousSlice=*/true);
            res.dimsPerDegree.push_back(
                {static_cast<std::size_t>(d), M.mat.rows(), M.columns.size()});
            RrefSummary s;
            rref(M.mat, s);
            auto pivots = pivotMonomials(s.pivotCols, M.columns);
            pooled.insert(pooled.end(), pivots.begin(), pivots.end());
            if (coversOracle(pooled, oracleReducedGB)) {
                res.degree = d;
                res.witnessPivots = pooled;
                return res;
            }
        }
        res.exceeded = true;
        return res;
    }

    for (int d = dmin; d <= dmax; ++d) {
        MacaulayMatrix M = buildMacaulay(F, d);
        res.dimsPerDegree.push_back(
            {static_cast<std::size_t>(d), M.mat.rows(), M.columns.size()});
        RrefSummary s;
        rref(M.mat, s);
        auto pivots = pivotMonomials(s.pivotCols, M.columns);
        if (coversOracle(pivots, oracleReducedGB)) {
            res.degree = d;
            res.witnessPivots = std::move(pivots);
            return res;
        }
    }
    res.exceeded = true;
    return res;
}

SolveDegreeResult sdMut(const PolySystem& F, int dmax,
                        const std::vector<Polynomial>& oracleReducedGB) {
    SolveDegreeResult res;
    const auto degs = F.degrees();
    const int dstart = *std::max_element(degs.begin(), degs.end());
    if (dmax < dstart) throw std::invalid_argument("sdMut: dmax below the top generator degree");

    for (int d = dstart; d <= dmax; ++d) {
        MacaulayMatrix M = buildMacaulay(F, d);
        res.dimsPerDegree.push_back(
            {static_cast<std::size_t>(d), M.mat.rows(), M.columns.size()});
        const auto idx = indexColumns(M.columns);

        RrefSummary s;
        FqMatrix r0 = rref(M.mat, s);
        RrefAccumulator acc(M.columns.size(), F.ring.modulus);
        for (std::size_t i = 0; i < r0.rows(); ++i)
            acc.addRow(std::vector<std::uint32_t>(r0.row(i), r0.row(i) + r0.cols()));

        // Leading monomials already present as rows of the matrix.
        std::unordered_set<Monomial, MonomialHash> rowLMs;
        for (std::size_t k = 0; k < M.rowLabels.size(); ++k) {
            const auto& [t, j] = M.rowLabels[k];
            rowLMs.insert(t * F.gens[static_cast<std::size_t>(j)].lm());
        }

        std::unordered_set<Monomial, MonomialHash> expanded;
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Polynomial> mutants;
            for (std::size_t k = 0; k < acc.rows().size(); ++k) {
                Polynomial f = rowPoly(acc.rows()[k].data(), M.columns, M.ring);
                if (static_cast<int>(f.degree()) >= d) continue;
                if (rowLMs.count(f.lm()) || expanded.count(f.lm())) continue;
                mutants.push_back(std::move(f));
            }
            for (const auto& f : mutants) {
                expanded.insert(f.lm());
                const int room = d - static_cast<int>(f.degree());
                for (const auto& t : monomialsUpToDegreeDesc(F.ring.nvars,
                                                             static_cast<std::uint32_t>(room))) {
                    Polynomial tf = f.mulTerm(1, t);
                    if (acc.addRow(polyRow(tf, idx, M.columns.size()))) {
                        rowLMs.insert(t * f.lm());
                        changed = true;
                    }
                }
            }
        }

        auto pivots = pivotMonomials(acc.pivotCols(), M.columns);
        if (coversOracle(pivots, oracleReducedGB)) {
            res.degree = d;
            res.witnessPivots = std::move(pivots);
            return res;
        }
    }
    res.exceeded = true;
    return res;
}

} // namespace gblab
