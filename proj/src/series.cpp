#include "gblab/series.hpp"

#include "gblab/bounds.hpp"

#include <algorithm>

namespace gblab {

namespace {

using Int = TruncatedSeries::Int;

const Int kMaxInt = ~(Int(1) << 127); // 2^127 - 1

Int checkedAdd(Int a, Int b) {
    if (b > 0 && a > kMaxInt - b) throw SeriesOverflow("series coefficient overflow (+)");
    if (b < 0 && a < -kMaxInt - 1 - b) throw SeriesOverflow("series coefficient overflow (+)");
    return a + b;
}

Int checkedMul(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int r = a * b;
    if (r / b != a) throw SeriesOverflow("series coefficient overflow (*)");
    return r;
}

} // namespace

long long TruncatedSeries::coeffLL(int i) const {
    Int v = coeff(i);
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
        throw SeriesOverflow("series coefficient exceeds 64 bits");
    return static_cast<long long>(v);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::max(cap(), o.cap()));
    for (int i = 0; i <= r.cap(); ++i) r.c_[i] = checkedAdd(coeff(i), o.coeff(i));
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r(std::max(cap(), o.cap()));
    for (int i = 0; i <= r.cap(); ++i) r.c_[i] = checkedAdd(coeff(i), -o.coeff(i));
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::max(cap(), o.cap()));
    for (int i = 0; i <= cap() && i <= r.cap(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j <= o.cap() && i + j <= r.cap(); ++j)
            r.c_[i + j] = checkedAdd(r.c_[i + j], checkedMul(c_[i], o.coeff(j)));
    }
    return r;
}

void TruncatedSeries::mulOneMinusPower(int d) {
    if (d <= 0) throw std::invalid_argument("mulOneMinusPower: d must be positive");
    for (int k = cap(); k >= d; --k) c_[k] = checkedAdd(c_[k], -c_[k - d]);
}

void TruncatedSeries::divideOneMinusZ(int k) {
    for (int r = 0; r < k; ++r)
        for (int i = 1; i <= cap(); ++i) c_[i] = checkedAdd(c_[i], c_[i - 1]);
}

int TruncatedSeries::degree() const {
    for (int i = cap(); i >= 0; --i)
        if (c_[i] != 0) return i;
    return -1;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    for (int i = 0; i <= std::max(cap(), o.cap()); ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (int i = 0; i <= cap(); ++i) {
        if (c_[i] == 0) continue;
        Int v = c_[i];
        if (!out.empty()) {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        } else if (v < 0) {
            out += "-";
            v = -v;
        }
        // 128-bit to decimal
        std::string digits;
        if (v == 0) digits = "0";
        while (v > 0) {
            digits.insert(digits.begin(), static_cast<char>('0' + int(v % 10)));
            v /= 10;
        }
        if (i == 0) {
            out += digits;
        } else {
            if (digits != "1") out += digits + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries bracketTruncate(const TruncatedSeries& s) {
    TruncatedSeries r(s.cap());
    for (int i = 0; i <= s.cap(); ++i) {
        if (s.coeff(i) <= 0) break;
        r.setCoeff(i, s.coeff(i));
    }
    return r;
}

TruncatedSeries seriesProductOver(int denomPower, const std::vector<int>& degrees, int cap) {
    TruncatedSeries s = TruncatedSeries::one(cap);
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("degrees must be >= 1");
        s.mulOneMinusPower(d);
    }
    s.divideOneMinusZ(denomPower);
    return s;
}

TruncatedSeries semiregularSeries(int n, const std::vector<int>& degrees, int cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return bracketTruncate(seriesProductOver(n, degrees, cap));
}

TruncatedSeries semiregularSeries(int n, const std::vector<int>& degrees) {
    return semiregularSeries(n, degrees, defaultSeriesCap(n, degrees));
}

} // namespace gblab
