#include "gblab/bounds.hpp"

#include "gblab/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace gblab {

int defaultSeriesCap(int n, const std::vector<int>& degrees) {
    int lb = lazardBound(n, degrees);
    int degSum = std::accumulate(degrees.begin(), degrees.end(), 0);
    int m = static_cast<int>(degrees.size());
    return std::max(lb + 2, degSum - m + 2);
}

int lazardBound(int n, const std::vector<int>& degrees) {
    if (n < 1 || degrees.empty()) throw std::invalid_argument("need n >= 1 and m >= 1");
    std::vector<int> d = degrees;
    std::sort(d.rbegin(), d.rend());
    const std::size_t l = std::min(d.size(), static_cast<std::size_t>(n) + 1);
    int sum = std::accumulate(d.begin(), d.begin() + l, 0);
    return sum - static_cast<int>(l) + 1;
}

int dRegFormula(int n, const std::vector<int>& degrees) {
    return semiregularSeries(n, degrees).degree() + 1;
}

int dNewBound(int n, const std::vector<int>& degrees) {
    const int cap = defaultSeriesCap(n, degrees);
    return bracketTruncate(seriesProductOver(n + 1, degrees, cap)).degree() + 1;
}

Thm12Bound thm12Bound(int n, const std::vector<int>& degrees) {
    const int m = static_cast<int>(degrees.size());
    if (m <= n) throw std::invalid_argument("thm12Bound requires m > n");
    std::vector<int> d = degrees;
    std::sort(d.begin(), d.end());
    Thm12Bound b{};
    b.main = std::accumulate(d.begin(), d.begin() + n, 0) + d.back() - n;
    const int sumN1 = std::accumulate(d.begin(), d.begin() + n + 1, 0);
    b.dOne = (sumN1 - n - 1) / 2 + 1;
    if (d.back() <= b.dOne) b.refined = sumN1 - n;
    return b;
}

BoundReport boundReport(int n, const std::vector<int>& degrees) {
    const int m = static_cast<int>(degrees.size());
    BoundReport r;
    r.lazard = lazardBound(n, degrees);
    r.zeroDimHypothesis = m >= n;
    if (m > n) {
        auto t = thm12Bound(n, degrees);
        r.thm12Main = t.main;
        r.thm12Refined = t.refined;
    }
    r.dRegFormula = dRegFormula(n, degrees);
    r.tentiMinus1 = 2 * r.dRegFormula - 1;
    r.tentiMinus2 = 2 * r.dRegFormula - 2;
    if (m >= n) {
        // The bracket only truncates in the zero-dimensional regime.
        r.dNew = dNewBound(n, degrees);
        if (r.dNew > r.lazard)
            throw std::logic_error("bound check failed: d_new exceeds Lazard's bound");
        if (m == n + 1 && r.dNew != r.lazard)
            throw std::logic_error("bound check failed: m = n+1 but d_new != Lazard's bound");
    }
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

ComplexityEstimate complexityEstimate(int n, int m, int D, double omega) {
    if (D < 1 || n < 1 || m < 1) throw std::invalid_argument("need n, m, D >= 1");
    if (omega < 2.0 || omega > 3.0) throw std::invalid_argument("omega must be in [2, 3]");
    using Float = boost::multiprecision::cpp_dec_float_100;
    const BigInt c1 = binomial(n + D, D);
    const BigInt c2 = binomial(n + D - 1, D - 1);
    const BigInt c3 = binomial(n + 2 * D - 2, 2 * D - 2);
    const Float p = boost::multiprecision::pow(Float(c1), Float(omega));
    const BigInt pr = BigInt(boost::multiprecision::round(p));
    ComplexityEstimate est;
    est.full = m * pr + c1 * c1 * c2 * c2 * c3;
    est.noZeroRed = m * pr + c2 * c2 * c3;
    return est;
}

} // namespace gblab
