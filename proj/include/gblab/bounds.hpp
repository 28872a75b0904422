#ifndef GBLAB_BOUNDS_HPP
#define GBLAB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gblab {

using BigInt = boost::multiprecision::cpp_int;

// Series cap sufficient for every closed-form degree bound: Lazard + 2,
// raised to the full degree-sum when that is larger so that Artinian prefix
// truncations are always visible.
int defaultSeriesCap(int n, const std::vector<int>& degrees);

// Macaulay/Lazard bound: sort degrees descending, sum the top
// l = min(m, n+1), subtract l, add 1. Hypothesis m >= n is the caller's to
// check (boundReport records it).
int lazardBound(int n, const std::vector<int>& degrees);

// deg(semiregularSeries) + 1; the degree of regularity of a cryptographic
// semi-regular ideal with these generator degrees.
int dRegFormula(int n, const std::vector<int>& degrees);

// deg([prod (1 - z^{d_i}) / (1 - z)^{n+1}]) + 1.
int dNewBound(int n, const std::vector<int>& degrees);

struct Thm12Bound {
    int main;                 // d_1 + ... + d_n + d_m - n, degrees ascending
    std::optional<int> refined; // d_1 + ... + d_{n+1} - n, present iff d_m <= D_1
    int dOne;                 // D_1 = floor((d_1+...+d_{n+1}-n-1)/2) + 1
};

// Requires m > n (throws otherwise); sorts degrees ascending internally.
Thm12Bound thm12Bound(int n, const std::vector<int>& degrees);

struct BoundReport {
    int lazard = 0;
    int thm12Main = 0;
    std::optional<int> thm12Refined;
    int dRegFormula = 0;   // D
    int dNew = 0;
    int tentiMinus1 = 0;   // 2D - 1
    int tentiMinus2 = 0;   // 2D - 2
    std::optional<int> dPlusS0; // filled by callers that computed S_0
    bool zeroDimHypothesis = true; // m >= n; Lazard's hypothesis
};

// Evaluates every closed-form bound; checks d_new <= lazard and the
// m = n+1 equality case.
BoundReport boundReport(int n, const std::vector<int>& degrees);

struct ComplexityEstimate {
    BigInt full;       // m*C(n+D,D)^w + C(n+D,D)^2 C(n+D-1,D-1)^2 C(n+2D-2,2D-2)
    BigInt noZeroRed;  // m*C(n+D,D)^w + C(n+D-1,D-1)^2 C(n+2D-2,2D-2)
};

BigInt binomial(unsigned long n, unsigned long k);

// Exact binomials, power rounded to the nearest integer; 2 <= omega <= 3.
ComplexityEstimate complexityEstimate(int n, int m, int D, double omega);

} // namespace gblab

#endif
