#ifndef GBLAB_FP_HPP
#define GBLAB_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace gblab {

// Arithmetic in the prime field F_q for an odd prime q < 2^31.
// Elements are canonical residues in [0, q) stored as uint32_t; all
// operations go through a PrimeField instance carrying the modulus.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q) : q_(q) {
        if (q < 3 || q % 2 == 0 || !isPrime(q) || q >= (1u << 31))
            throw std::invalid_argument("modulus must be an odd prime < 2^31");
    }

    std::uint32_t modulus() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;            // < 2^32, no overflow for q < 2^31
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % q_);
    }

    // Modular inverse via extended Euclid; inv(0) is an error.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_q");
        std::int64_t t = 0, newT = 1;
        std::int64_t r = q_, newR = a % q_;
        while (newR != 0) {
            std::int64_t qq = r / newR;
            std::int64_t tmp = t - qq * newT;
            t = newT; newT = tmp;
            tmp = r - qq * newR;
            r = newR; newR = tmp;
        }
        if (t < 0) t += q_;
        return static_cast<std::uint32_t>(t);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % q_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    // Canonical residue of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<std::uint32_t>(r);
    }

    static bool isPrime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p)
            if (n % p == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

private:
    std::uint32_t q_;
};

} // namespace gblab

#endif
