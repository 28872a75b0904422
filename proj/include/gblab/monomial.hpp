#ifndef GBLAB_MONOMIAL_HPP
#define GBLAB_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gblab {

// A monomial as a dense fixed-length exponent vector with a cached total
// degree. When a ring is homogenized, the homogenizing variable y occupies
// the last slot.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}

    explicit Monomial(std::vector<std::uint16_t> exps)
        : e_(std::move(exps)),
          deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint16_t exp = 1) {
        Monomial m(nvars);
        m.e_.at(i) = exp;
        m.deg_ = exp;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint16_t exp(std::size_t i) const { return e_[i]; }
    bool isOne() const { return deg_ == 0; }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    // Exact quotient; caller guarantees o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        r.deg_ -= o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::uint16_t>& exponents() const { return e_; }

private:
    std::vector<std::uint16_t> e_;
    std::uint32_t deg_;
};

// DRL comparison with x_n < ... < x_1: total degree first, ties broken
// reverse-lexicographically (scanning exponents from the last slot, the
// first difference decides; the larger exponent there loses). Applied to a
// homogenized ring with y in the last slot this is exactly the homogenized
// order, whose restriction to y-free monomials is the DRL on x_1..x_n.
inline bool drlLess(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] > eb[i];
    return false;
}

inline bool drlGreater(const Monomial& a, const Monomial& b) { return drlLess(b, a); }

// The active order for a ring: DRL on n variables or its homogenization.
// Both compare through the same exponent scan; the flag records which ring
// the order lives on.
struct MonomialOrder {
    std::size_t nvars = 0;
    bool homogenized = false;

    bool less(const Monomial& a, const Monomial& b) const { return drlLess(a, b); }
    bool greater(const Monomial& a, const Monomial& b) const { return drlLess(b, a); }
};

// Enumerates all monomials in nvars variables of total degree exactly d.
void forEachMonomialOfDegree(std::size_t nvars, std::uint32_t d,
                             const std::function<void(const Monomial&)>& fn);

// All monomials of degree exactly d, sorted descending under DRL.
std::vector<Monomial> monomialsOfDegreeDesc(std::size_t nvars, std::uint32_t d);

// All monomials of degree <= d, sorted descending under DRL (so the
// monomial 1 comes last).
std::vector<Monomial> monomialsUpToDegreeDesc(std::size_t nvars, std::uint32_t d);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exponents()) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace gblab

#endif
