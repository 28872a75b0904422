#ifndef GBLAB_MACAULAY_HPP
#define GBLAB_MACAULAY_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gblab/matrix.hpp"
#include "gblab/polynomial.hpp"

namespace gblab {

// The degree-d Macaulay matrix M_{<=d}(F): one row per multiple t*f_j with
// deg(t*f_j) <= d, columns the monomials of degree <= d in descending
// order (the monomial 1 last). The homogeneous slice variant restricts
// rows and columns to degree exactly d.
struct MacaulayMatrix {
    Ring ring;
    int degree = 0;
    bool homogeneousSlice = false;
    std::vector<Monomial> columns;                    // descending
    std::vector<std::pair<Monomial, int>> rowLabels;  // (multiplier, generator index)
    FqMatrix mat{0, 0, 3};
};

MacaulayMatrix buildMacaulay(const PolySystem& F, int d, bool homogeneousSlice = false);

struct MacaulayRref {
    std::vector<std::size_t> pivotCols;
    std::vector<Polynomial> basisPolys; // nonzero RREF rows read back
    std::size_t rank = 0;
};

// Exact RREF of the Macaulay matrix (blocked sweep when very tall).
MacaulayRref rrefMacaulay(const MacaulayMatrix& M);

struct SolveDegreeResult {
    int degree = -1;   // the solving degree, when reached
    bool exceeded = false;
    std::vector<std::array<std::size_t, 3>> dimsPerDegree; // {d, rows, cols}
    std::vector<Monomial> witnessPivots; // LMs of the witness RREF rows
};

// sd^mac: the least d <= dmax at which the RREF of M_{<=d}(F) produces a
// Groebner basis of <F>. Detection: every LM of the oracle reduced GB is
// divisible by the LM of some RREF row.
SolveDegreeResult sdMac(const PolySystem& F, int dmax,
                        const std::vector<Polynomial>& oracleReducedGB);

// sd^mut: the mutant strategy of definition (III). At each degree d the
// row space is closed under appending multiples t*f of lower-degree RREF
// rows f with a fresh leading monomial, to a fixpoint; the GB test runs at
// the fixpoint, then the degree advances.
SolveDegreeResult sdMut(const PolySystem& F, int dmax,
                        const std::vector<Polynomial>& oracleReducedGB);

} // namespace gblab

#endif
