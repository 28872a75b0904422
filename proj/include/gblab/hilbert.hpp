#ifndef GBLAB_HILBERT_HPP
#define GBLAB_HILBERT_HPP

#include <optional>
#include <vector>

#include "gblab/monomial.hpp"
#include "gblab/polynomial.hpp"

namespace gblab {

// A monomial ideal held by its minimal generators (an antichain under
// divisibility).
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool contains(const Monomial& m) const;
    bool isZeroIdeal() const { return gens_.empty(); }
    bool containsOne() const { return gens_.size() == 1 && gens_[0].isOne(); }

private:
    std::size_t nvars_;
    std::vector<Monomial> gens_; // minimal, sorted ascending under DRL
};

// {LM(g) : g in G} for a reduced basis G.
MonomialIdeal lmIdeal(const std::vector<Polynomial>& reducedBasis, std::size_t nvars);

// dim_K (R/J)_d: the number of degree-d monomials outside J, counted by
// enumeration. Serves as the independent oracle for the series expansion.
long long hilbertFunction(const MonomialIdeal& J, int d);

// Exact numerator N(z) with HS_{R/J} = N(z)/(1-z)^n, via the pivot-variable
// recursion N(J) = N(J + <x>) + z * N(J : x); pivot = most frequent
// variable among the minimal generators.
std::vector<long long> hilbertNumerator(const MonomialIdeal& J);

// HF values obtained by expanding N(z)/(1-z)^n up to degree cap.
std::vector<long long> expandHilbertSeries(const std::vector<long long>& numerator,
                                           std::size_t nvars, int cap);

struct HilbertSummary {
    std::vector<long long> hf;               // degrees 0..cap
    std::vector<long long> numerator;        // N(z) over (1-z)^n
    std::vector<long long> reducedNumerator; // h(z) with HS = h/(1-z)^dim, h(1) != 0
    int dim = 0;                             // denominator power after reduction
    std::optional<int> dReg;                 // min{d : R_d = J_d}; empty = infinity
    std::optional<int> genDReg;              // index of regularity; empty = infinity
    std::optional<long long> hilbertPolyConstant; // projective zero count w/ multiplicity
    bool artinian = false;
    bool zeroDimensional = false; // Hilbert polynomial constant
};

HilbertSummary regularityDegrees(const MonomialIdeal& J, int hfCap);

} // namespace gblab

#endif
