#include "gblab/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gblab {

Polynomial::Polynomial(const Ring& ring, std::vector<Term> terms)
    : ring_(ring), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return drlGreater(a.mono, b.mono); });
    const PrimeField F = ring_.field();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        std::uint32_t c = t.coeff % ring_.modulus;
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = F.add(merged.back().coeff, c);
            if (merged.back().coeff == 0) merged.pop_back();
        } else if (c != 0) {
            merged.push_back(Term{t.mono, c});
        }
    }
    terms_ = std::move(merged);
}

void Polynomial::requireSameRing(const Polynomial& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch");
}

const Monomial& Polynomial::lm() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.front().mono;
}

std::uint32_t Polynomial::lc() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.front().coeff;
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

bool Polynomial::isHomogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != degree()) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    requireSameRing(o);
    const PrimeField F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            std::uint32_t c = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (c) r.terms_.push_back(Term{terms_[i].mono, c});
            ++i, ++j;
        } else if (drlGreater(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    const PrimeField F = ring_.field();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    requireSameRing(o);
    Polynomial r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    for (const auto& t : o.terms_) r.addScaledMul(t.coeff, t.mono, *this);
    return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const PrimeField F = ring_.field();
    c %= ring_.modulus;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, F.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_.field().inv(lc()));
}

Polynomial Polynomial::mulTerm(std::uint32_t c, const Monomial& t) const {
    const PrimeField F = ring_.field();
    c %= ring_.modulus;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) r.terms_.push_back(Term{s.mono * t, F.mul(s.coeff, c)});
    return r;
}

void Polynomial::addScaledMul(std::uint32_t c, const Monomial& t, const Polynomial& g) {
    requireSameRing(g);
    const PrimeField F = ring_.field();
    c %= ring_.modulus;
    if (c == 0 || g.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * t;
        if (terms_[i].mono == gm) {
            std::uint32_t cc = F.add(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
            if (cc) merged.push_back(Term{terms_[i].mono, cc});
            ++i, ++j;
        } else if (drlGreater(terms_[i].mono, gm)) {
            merged.push_back(terms_[i++]);
        } else {
            merged.push_back(Term{std::move(gm), F.mul(c, g.terms_[j].coeff)});
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        merged.push_back(Term{g.terms_[j].mono * t, F.mul(c, g.terms_[j].coeff)});
    terms_ = std::move(merged);
}

void Polynomial::dropLeadingTerm() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
}

std::uint32_t Polynomial::coefficientOf(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) {
                                   return drlGreater(t.mono, mm);
                               });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

Polynomial Polynomial::constant(const Ring& ring, std::uint32_t c) {
    return Polynomial(ring, {Term{Monomial(ring.nvars), c}});
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, std::uint32_t c) {
    return Polynomial(ring, {Term{m, c}});
}

Polynomial homogenize(const Polynomial& f) {
    if (f.isZero()) throw std::invalid_argument("homogenize: zero polynomial");
    if (f.ring().homogenized)
        throw std::invalid_argument("homogenize: input already lives in a homogenized ring");
    const Ring rh = f.ring().extended();
    const std::uint32_t d = f.degree();
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<std::uint16_t> e = t.mono.exponents();
        e.push_back(static_cast<std::uint16_t>(d - t.mono.degree()));
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(rh, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& h) {
    if (!h.ring().homogenized)
        throw std::invalid_argument("dehomogenize: input ring is not homogenized");
    const Ring r = h.ring().base();
    std::vector<Term> terms;
    terms.reserve(h.terms().size());
    for (const auto& t : h.terms()) {
        std::vector<std::uint16_t> e(t.mono.exponents().begin(),
                                     t.mono.exponents().end() - 1);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(r, std::move(terms));
}

Polynomial topPart(const Polynomial& f) {
    if (f.ring().homogenized) {
        // y = 0 slice of a homogeneous polynomial in R[y].
        std::vector<Term> terms;
        for (const auto& t : f.terms())
            if (t.mono.exp(f.ring().nvars - 1) == 0) terms.push_back(t);
        return Polynomial(f.ring(), std::move(terms));
    }
    if (f.isZero()) throw std::invalid_argument("top part of zero polynomial");
    const std::uint32_t d = f.degree();
    std::vector<Term> terms;
    for (const auto& t : f.terms())
        if (t.mono.degree() == d) terms.push_back(t);
    return Polynomial(f.ring(), std::move(terms));
}

namespace {

// Rank of a small square matrix over F_q, for the invertibility check.
bool invertibleOverFq(std::vector<std::vector<std::uint32_t>> a, const PrimeField& F) {
    const std::size_t k = a.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] % F.modulus() == 0) ++piv;
        if (piv == k) return false;
        std::swap(a[col], a[piv]);
        std::uint32_t invp = F.inv(a[col][col] % F.modulus());
        for (std::size_t i = col + 1; i < k; ++i) {
            std::uint32_t factor = F.mul(a[i][col] % F.modulus(), invp);
            if (!factor) continue;
            for (std::size_t j = col; j < k; ++j)
                a[i][j] = F.sub(a[i][j] % F.modulus(), F.mul(factor, a[col][j] % F.modulus()));
        }
    }
    return true;
}

} // namespace

Polynomial applyLinearTransform(const Polynomial& f,
                                const std::vector<std::vector<std::uint32_t>>& P) {
    const std::size_t k = f.ring().nvars;
    if (P.size() != k)
        throw std::invalid_argument("transform matrix size does not match variable count");
    for (const auto& row : P)
        if (row.size() != k) throw std::invalid_argument("transform matrix is not square");
    const PrimeField F = f.ring().field();
    if (!invertibleOverFq(P, F)) throw std::invalid_argument("transform matrix is singular");

    // Variable i is substituted by the linear form (x * P)_i = sum_j P[j][i] x_j.
    std::vector<Polynomial> forms;
    forms.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < k; ++j) {
            std::uint32_t c = P[j][i] % f.ring().modulus;
            if (c) terms.push_back(Term{Monomial::variable(k, j), c});
        }
        forms.push_back(Polynomial(f.ring(), std::move(terms)));
    }

    Polynomial result(f.ring());
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(f.ring(), t.coeff);
        for (std::size_t i = 0; i < k; ++i)
            for (std::uint16_t e = 0; e < t.mono.exp(i); ++e) prod = prod * forms[i];
        result = result + prod;
    }
    return result;
}

PolySystem::PolySystem(Ring r, std::vector<Polynomial> g) : ring(r), gens(std::move(g)) {
    for (const auto& f : gens) {
        if (f.ring() != ring) throw std::invalid_argument("generator ring mismatch");
        if (f.isZero() || f.isConstant())
            throw std::invalid_argument("generators must be nonzero and non-constant");
    }
}

std::vector<int> PolySystem::degrees() const {
    std::vector<int> d;
    d.reserve(gens.size());
    for (const auto& f : gens) d.push_back(static_cast<int>(f.degree()));
    return d;
}

bool PolySystem::isHomogeneous() const {
    for (const auto& f : gens)
        if (!f.isHomogeneous()) return false;
    return true;
}

PolySystem topParts(const PolySystem& F) {
    std::vector<Polynomial> g;
    g.reserve(F.gens.size());
    for (const auto& f : F.gens) g.push_back(topPart(f));
    return PolySystem(F.ring, std::move(g));
}

PolySystem homogenized(const PolySystem& F) {
    std::vector<Polynomial> g;
    g.reserve(F.gens.size());
    for (const auto& f : F.gens) g.push_back(homogenize(f));
    return PolySystem(F.ring.extended(), std::move(g));
}

namespace {

// Unbiased draw in [0, bound) by rejection; keeps output independent of the
// standard library's distribution implementations.
std::uint32_t uniformBelow(std::mt19937_64& rng, std::uint32_t bound) {
    const std::uint64_t threshold = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= threshold);
    return static_cast<std::uint32_t>(r % bound);
}

} // namespace

PolySystem randomSystem(int n, const std::vector<int>& degrees, std::uint32_t q,
                        std::uint64_t seed) {
    if (n < 1 || degrees.empty()) throw std::invalid_argument("need n >= 1 and m >= 1");
    for (int d : degrees)
        if (d < 2) throw std::invalid_argument("generator degrees must be >= 2");
    const Ring ring{static_cast<std::uint32_t>(n), q, false};
    ring.field(); // validates q
    std::mt19937_64 rng(seed);

    std::vector<Polynomial> gens;
    gens.reserve(degrees.size());
    for (int d : degrees) {
        std::vector<Term> lower;
        for (int e = 1; e < d; ++e)
            for (const auto& m : monomialsOfDegreeDesc(n, e)) {
                std::uint32_t c = uniformBelow(rng, q);
                if (c) lower.push_back(Term{m, c});
            }
        const auto topMons = monomialsOfDegreeDesc(n, d);
        std::vector<Term> top;
        do {
            top.clear();
            for (const auto& m : topMons) {
                std::uint32_t c = uniformBelow(rng, q);
                if (c) top.push_back(Term{m, c});
            }
        } while (top.empty());
        std::vector<Term> all = lower;
        all.insert(all.end(), top.begin(), top.end());
        gens.push_back(Polynomial(ring, std::move(all)));
    }
    return PolySystem(ring, std::move(gens));
}

} // namespace gblab
