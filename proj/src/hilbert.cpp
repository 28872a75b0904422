#include "gblab/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gblab {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), drlLess);
    std::vector<Monomial> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars), gens_(minimalize(std::move(gens))) {
    for (const auto& g : gens_)
        if (g.nvars() != nvars_) throw std::invalid_argument("generator variable count mismatch");
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal lmIdeal(const std::vector<Polynomial>& reducedBasis, std::size_t nvars) {
    std::vector<Monomial> gens;
    gens.reserve(reducedBasis.size());
    for (const auto& g : reducedBasis)
        if (!g.isZero()) gens.push_back(g.lm());
    return MonomialIdeal(nvars, std::move(gens));
}

long long hilbertFunction(const MonomialIdeal& J, int d) {
    if (d < 0) return 0;
    long long count = 0;
    forEachMonomialOfDegree(J.nvars(), static_cast<std::uint32_t>(d), [&](const Monomial& m) {
        if (!J.contains(m)) ++count;
    });
    return count;
}

namespace {

using Poly1 = std::vector<long long>; // univariate integer polynomial, c[0..deg]

long long checkedAddLL(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator overflow");
    return r;
}

void addShifted(Poly1& dst, const Poly1& src, int shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i + shift] = checkedAddLL(dst[i + shift], src[i]);
}

void mulOneMinusPower(Poly1& p, int d) {
    p.resize(p.size() + d, 0);
    for (std::size_t k = p.size(); k-- > static_cast<std::size_t>(d);)
        p[k] = checkedAddLL(p[k], -p[k - d]);
}

Poly1 numeratorRec(const std::vector<Monomial>& gens, std::size_t nvars) {
    if (gens.empty()) return Poly1{1};
    if (gens.size() == 1 && gens[0].isOne()) return Poly1{0};

    // Base case: pairwise coprime generators (covers pure powers of
    // distinct variables and any other disjoint supports).
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        Poly1 p{1};
        for (const auto& g : gens) mulOneMinusPower(p, static_cast<int>(g.degree()));
        return p;
    }

    // Pivot: the variable occurring in the most minimal generators.
    std::vector<int> freq(nvars, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g.exp(v)) ++freq[v];
    std::size_t pivot =
        static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // J + <x_pivot>: generators not involving the pivot, plus the pivot.
    std::vector<Monomial> plus;
    for (const auto& g : gens)
        if (g.exp(pivot) == 0) plus.push_back(g);
    plus.push_back(Monomial::variable(nvars, pivot));

    // J : x_pivot: decrement the pivot exponent where positive.
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.exp(pivot) == 0) {
            colon.push_back(g);
        } else {
            auto e = g.exponents();
            --e[pivot];
            colon.push_back(Monomial(std::move(e)));
        }
    }

    Poly1 a = numeratorRec(minimalize(std::move(plus)), nvars);
    Poly1 b = numeratorRec(minimalize(std::move(colon)), nvars);
    addShifted(a, b, 1); // N(J) = N(J + <x>) + z * N(J : x)
    return a;
}

void trimTrailingZeros(Poly1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

std::vector<long long> hilbertNumerator(const MonomialIdeal& J) {
    Poly1 n = numeratorRec(J.gens(), J.nvars());
    trimTrailingZeros(n);
    return n;
}

std::vector<long long> expandHilbertSeries(const std::vector<long long>& numerator,
                                           std::size_t nvars, int cap) {
    std::vector<long long> c(static_cast<std::size_t>(cap) + 1, 0);
    for (std::size_t i = 0; i < numerator.size() && i <= static_cast<std::size_t>(cap); ++i)
        c[i] = numerator[i];
    for (std::size_t r = 0; r < nvars; ++r)
        for (int i = 1; i <= cap; ++i) c[i] = checkedAddLL(c[i], c[i - 1]);
    return c;
}

HilbertSummary regularityDegrees(const MonomialIdeal& J, int hfCap) {
    HilbertSummary s;
    s.numerator = hilbertNumerator(J);
    s.hf = expandHilbertSeries(s.numerator, J.nvars(), hfCap);

    if (s.numerator.empty()) {
        // R/J = 0: HS is identically zero.
        s.reducedNumerator = {};
        s.dim = 0;
        s.artinian = s.zeroDimensional = true;
        s.dReg = s.genDReg = 0;
        s.hilbertPolyConstant = 0;
        return s;
    }

    // Factor (1-z)^k out of the numerator: HS = h(z)/(1-z)^{n-k}, h(1) != 0.
    Poly1 h = s.numerator;
    int stripped = 0;
    auto valueAtOne = [](const Poly1& p) {
        long long v = 0;
        for (long long c : p) v = checkedAddLL(v, c);
        return v;
    };
    while (stripped < static_cast<int>(J.nvars()) && valueAtOne(h) == 0) {
        // divide by (1-z): synthetic division, exact when h(1) == 0
        Poly1 q(h.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            carry = checkedAddLL(carry, h[i]);
            q[i] = carry;
        }
        h = std::move(q);
        trimTrailingZeros(h);
        ++stripped;
    }
    s.reducedNumerator = h;
    s.dim = static_cast<int>(J.nvars()) - stripped;
    s.artinian = s.dim == 0;
    s.zeroDimensional = s.dim <= 1;

    if (s.artinian) {
        // HS is the polynomial h; HF vanishes from deg(h)+1 on.
        s.dReg = static_cast<int>(h.size()); // deg(h) + 1
        s.genDReg = s.dReg;
        s.hilbertPolyConstant = 0;
    } else if (s.dim == 1) {
        s.genDReg = static_cast<int>(h.size()) - 1; // deg(h)
        s.hilbertPolyConstant = valueAtOne(h);
    }

#ifndef NDEBUG
    // Expansion must agree with direct monomial counting.
    for (int d = 0; d <= std::min(hfCap, 8); ++d)
        assert(s.hf[static_cast<std::size_t>(d)] == hilbertFunction(J, d));
#endif
    return s;
}

} // namespace gblab
