#ifndef GBLAB_POLYNOMIAL_HPP
#define GBLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gblab/fp.hpp"
#include "gblab/monomial.hpp"

namespace gblab {

// The coefficient ring F_q[x_1..x_n], optionally with a homogenizing
// variable y in the last slot.
struct Ring {
    std::uint32_t nvars = 0;
    std::uint32_t modulus = 0;
    bool homogenized = false;

    PrimeField field() const { return PrimeField(modulus); }
    MonomialOrder order() const { return MonomialOrder{nvars, homogenized}; }

    bool operator==(const Ring& o) const {
        return nvars == o.nvars && modulus == o.modulus && homogenized == o.homogenized;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // The n-variable ring this homogenized ring extends.
    Ring base() const { return Ring{nvars - 1, modulus, false}; }
    Ring extended() const { return Ring{nvars + 1, modulus, true}; }
};

struct Term {
    Monomial mono;
    std::uint32_t coeff; // nonzero canonical residue
};

// A polynomial as a term sequence kept strictly descending under DRL, with
// no zero coefficients. The zero polynomial has an empty sequence.
class Polynomial {
public:
    explicit Polynomial(const Ring& ring) : ring_(ring) {}
    Polynomial(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    const Monomial& lm() const;   // leading monomial (first term)
    std::uint32_t lc() const;     // leading coefficient
    std::uint32_t degree() const; // total degree; 0 for the zero polynomial
    bool isHomogeneous() const;
    bool isConstant() const { return terms_.empty() || terms_.front().mono.isOne(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;

    Polynomial scaled(std::uint32_t c) const;
    Polynomial monic() const;
    Polynomial mulTerm(std::uint32_t c, const Monomial& t) const;

    // *this += c * t * g; the reduction kernel.
    void addScaledMul(std::uint32_t c, const Monomial& t, const Polynomial& g);

    void dropLeadingTerm();

    std::uint32_t coefficientOf(const Monomial& m) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, std::uint32_t c);
    static Polynomial monomial(const Ring& ring, const Monomial& m, std::uint32_t c = 1);

private:
    void normalize(); // sort descending, merge equal monomials, drop zeros
    void requireSameRing(const Polynomial& o) const;

    Ring ring_;
    std::vector<Term> terms_;
};

// f^h in the (n+1)-variable ring: every term padded with y to degree deg(f).
Polynomial homogenize(const Polynomial& f);

// h(x_1..x_n, 1) back in the n-variable ring.
Polynomial dehomogenize(const Polynomial& h);

// Affine input: the maximal-total-degree part. Input from a homogenized
// ring: the y = 0 slice (may be zero), staying in the homogenized ring.
Polynomial topPart(const Polynomial& f);

// f(x * P) for an invertible k x k matrix P over F_q (column i of P gives
// the linear form substituted for the i-th variable).
Polynomial applyLinearTransform(const Polynomial& f,
                                const std::vector<std::vector<std::uint32_t>>& P);

// An ordered generating sequence; generators are nonzero and non-constant.
struct PolySystem {
    Ring ring;
    std::vector<Polynomial> gens;

    PolySystem(Ring r, std::vector<Polynomial> g);

    std::vector<int> degrees() const;
    std::size_t size() const { return gens.size(); }
    bool isHomogeneous() const;
};

PolySystem topParts(const PolySystem& F);    // same ring
PolySystem homogenized(const PolySystem& F); // extended ring

// m random polynomials of exact degrees d_i with zero constant term and
// uniformly random coefficients on all monomials of degree 1..d_i; the
// degree-d_i slice is resampled until the top part is nonzero.
PolySystem randomSystem(int n, const std::vector<int>& degrees, std::uint32_t q,
                        std::uint64_t seed);

} // namespace gblab

#endif
