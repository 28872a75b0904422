#ifndef GBLAB_SERIES_HPP
#define GBLAB_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gblab {

struct SeriesOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Exact integer power series truncated at a cap. Coefficients are 128-bit
// with checked arithmetic; overflow throws, never wraps.
class TruncatedSeries {
public:
    using Int = __int128;

    explicit TruncatedSeries(int cap) : c_(static_cast<std::size_t>(cap) + 1, 0) {
        if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
    }

    static TruncatedSeries one(int cap) {
        TruncatedSeries s(cap);
        s.c_[0] = 1;
        return s;
    }

    int cap() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const { return i >= 0 && i <= cap() ? c_[static_cast<std::size_t>(i)] : 0; }
    long long coeffLL(int i) const;

    void setCoeff(int i, Int v) { c_.at(static_cast<std::size_t>(i)) = v; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Multiplies by (1 - z^d): c_k -= c_{k-d}, exact.
    void mulOneMinusPower(int d);

    // Divides by (1 - z)^k via repeated prefix sums, exact.
    void divideOneMinusZ(int k = 1);

    // Largest index with a nonzero coefficient; -1 for the zero series.
    int degree() const;

    bool isZero() const { return degree() < 0; }

    bool operator==(const TruncatedSeries& o) const;

    std::string str() const; // "1 + 3z + 2z^2" style, for diagnostics

private:
    std::vector<Int> c_;
};

// Keeps the prefix c_0..c_k where k is the largest index such that
// c_0,...,c_k are all positive (k = -1 yields the zero series); everything
// above k is zeroed. Idempotent.
TruncatedSeries bracketTruncate(const TruncatedSeries& s);

// prod_i (1 - z^{d_i}) / (1 - z)^denomPower, truncated at cap, exact.
TruncatedSeries seriesProductOver(int denomPower, const std::vector<int>& degrees, int cap);

// [ prod_i (1 - z^{d_i}) / (1 - z)^n ], the semi-regular Hilbert series
// shape of Prop. 2.2(4). Default cap: see bounds.hpp (Lazard + 2).
TruncatedSeries semiregularSeries(int n, const std::vector<int>& degrees, int cap);
TruncatedSeries semiregularSeries(int n, const std::vector<int>& degrees);

} // namespace gblab

#endif
