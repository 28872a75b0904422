#ifndef GBLAB_GROEBNER_HPP
#define GBLAB_GROEBNER_HPP

#include <vector>

#include "gblab/polynomial.hpp"

namespace gblab {

enum class SelectionStrategy { Normal, Sugar };

// Reduced basis plus per-step degree telemetry.
struct GroebnerTrace {
    std::vector<Polynomial> reducedBasis; // monic, inter-reduced, LM-ascending
    std::vector<int> stepDegrees;         // strategy degree of each processed pair
    std::vector<int> spolyDegrees;        // degrees of nonzero S-polynomials formed
    int maxGbDegree = 0;                  // max degree over the reduced basis
    int sdStep = 0;                       // highest step degree
    int sdStrict = 0;                     // highest S-polynomial degree
    long zeroReductions = 0;              // S-polynomials that reduced to zero
};

// t1*f/lc(f) - t2*g/lc(g) with LCM(LM f, LM g) = LM(t1 f) = LM(t2 g); the
// leading terms cancel.
Polynomial spoly(const Polynomial& f, const Polynomial& g);

// Full normal form: deterministic multivariate division trying reducers in
// basis order; no term of the remainder is divisible by any LM(g).
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis);

// Buchberger with the first criterion; pairs processed in ascending
// (strategy degree, LCM under the order, creation age).
GroebnerTrace buchberger(const PolySystem& F,
                         SelectionStrategy strategy = SelectionStrategy::Normal);

// The unique reduced Groebner basis of the ideal generated by a Groebner
// basis G: monic, minimal, tails reduced, sorted LM-ascending.
std::vector<Polynomial> interreduce(const std::vector<Polynomial>& basis);

// Buchberger criterion as an oracle: all S-polynomials reduce to zero.
bool isGroebner(const std::vector<Polynomial>& basis);

struct SaturationResult {
    int s0 = 0;                             // saturation exponent of (<F^h> : y^inf)
    std::vector<Polynomial> saturationBasis; // G^h, a reduced GB of <F>^h
};

// Computes the reduced GB G of <F> wrt DRL, homogenizes it into a GB of the
// saturation <F>^h, and returns the least s with y^s * G^h inside <F^h>
// (membership via normal form against a GB of <F^h>).
SaturationResult saturationExponent(const PolySystem& F);

// Same, with the two reduced bases already at hand.
SaturationResult saturationExponent(const PolySystem& F,
                                    const std::vector<Polynomial>& reducedGbF,
                                    const std::vector<Polynomial>& reducedGbFh);

} // namespace gblab

#endif
