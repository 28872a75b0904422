#include <doctest.h>

#include <random>

#include "gblab/io.hpp"
#include "gblab/polynomial.hpp"

using namespace gblab;

namespace {

const Ring r2_7{2, 7, false};
const Ring r3_7{3, 7, false};

Polynomial var(const Ring& r, std::size_t i) {
    return Polynomial::monomial(r, Monomial::variable(r.nvars, i));
}

Polynomial randomPoly(const Ring& r, int maxDeg, std::mt19937_64& rng) {
    std::vector<Term> terms;
    for (const auto& m : monomialsUpToDegreeDesc(r.nvars, static_cast<std::uint32_t>(maxDeg))) {
        std::uint32_t c = static_cast<std::uint32_t>(rng() % r.modulus);
        if (c && rng() % 2) terms.push_back(Term{m, c});
    }
    return Polynomial(r, std::move(terms));
}

} // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField F(31);
    CHECK(F.add(30, 5) == 4);
    CHECK(F.sub(3, 5) == 29);
    CHECK(F.mul(7, 9) == 63 % 31);
    CHECK(F.mul(F.inv(17), 17) == 1);
    CHECK(F.pow(3, 30) == 1); // Fermat
    CHECK(F.reduce(-1) == 30);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument); // odd primes only
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK(PrimeField::isPrime(2147483647));
    CHECK_FALSE(PrimeField::isPrime(2147483646));
}

TEST_CASE("DRL order on three variables") {
    // x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2 > x1 > x2 > x3 > 1
    auto m = [&](int a, int b, int c) {
        return Monomial(std::vector<std::uint16_t>{static_cast<std::uint16_t>(a),
                                                   static_cast<std::uint16_t>(b),
                                                   static_cast<std::uint16_t>(c)});
    };
    std::vector<Monomial> chain = {m(2, 0, 0), m(1, 1, 0), m(0, 2, 0), m(1, 0, 1),
                                   m(0, 1, 1), m(0, 0, 2), m(1, 0, 0), m(0, 1, 0),
                                   m(0, 0, 1), m(0, 0, 0)};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(drlGreater(chain[i], chain[i + 1]));
        CHECK_FALSE(drlGreater(chain[i + 1], chain[i]));
    }
}

TEST_CASE("ring order objects") {
    const Ring r{3, 7, false};
    const MonomialOrder ord = r.order();
    CHECK(ord.nvars == 3);
    CHECK_FALSE(ord.homogenized);
    CHECK(ord.greater(Monomial::variable(3, 0), Monomial::variable(3, 1)));
    CHECK(r.extended().order().homogenized);
}

TEST_CASE("homogenized order puts y-divisible monomials low") {
    // In the homogenized ring, any monomial divisible by y is smaller than
    // every same-degree monomial with y-exponent zero.
    const std::size_t nv = 4; // x1..x3, y
    for (std::uint32_t d = 1; d <= 4; ++d) {
        const auto mons = monomialsOfDegreeDesc(nv, d);
        for (const auto& a : mons)
            for (const auto& b : mons)
                if (a.exp(nv - 1) > 0 && b.exp(nv - 1) == 0) CHECK(drlLess(a, b));
    }
}

TEST_CASE("polynomial arithmetic basics") {
    const Polynomial x1 = var(r2_7, 0);
    const Polynomial x2 = var(r2_7, 1);
    const Polynomial one = Polynomial::constant(r2_7, 1);

    CHECK((x1 + one) + (-x1) == one);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK((x1 + x2) * Polynomial::zero(r2_7) == Polynomial::zero(r2_7));
    CHECK_THROWS_AS(var(r3_7, 0) + x1, std::invalid_argument);

    // LM(f*g) = LM(f)*LM(g) over a field.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = randomPoly(r2_7, 3, rng);
        Polynomial g = randomPoly(r2_7, 3, rng);
        if (f.isZero() || g.isZero()) continue;
        CHECK((f * g).lm() == f.lm() * g.lm());
    }
}

TEST_CASE("homogenize / dehomogenize / top part") {
    const auto sys = parseSystemText("ring q=7 vars=x1,x2\nx1^2 + x1\nx1 + x2\n");
    const Polynomial f = sys.system.gens[0];

    const Polynomial fh = homogenize(f);
    CHECK(fh.isHomogeneous());
    CHECK(fh.degree() == f.degree());
    const auto namesH = homogenizedNames(sys.varNames);
    CHECK(polyToString(fh, namesH) == "x1^2 + x1*y");
    CHECK(dehomogenize(fh) == f);

    // already homogeneous: fixed point with y-exponent zero everywhere
    const Polynomial g = sys.system.gens[1];
    const Polynomial gh = homogenize(g);
    for (const auto& t : gh.terms()) CHECK(t.mono.exp(2) == 0);

    // pure y powers collapse to constants
    const Ring rh = sys.system.ring.extended();
    const Polynomial y3 = Polynomial::monomial(rh, Monomial::variable(3, 2, 3));
    CHECK(polyToString(dehomogenize(y3), sys.varNames) == "1");
    const Polynomial x1y3 =
        Polynomial::monomial(rh, Monomial::variable(3, 0) * Monomial::variable(3, 2, 3));
    CHECK(polyToString(dehomogenize(x1y3), sys.varNames) == "x1");

    CHECK_THROWS_AS(homogenize(Polynomial::zero(sys.system.ring)), std::invalid_argument);

    // top part of the reference f_1
    const auto ex = parseSystemText(
        "ring q=73 vars=x1,x2,x3\n"
        "x1^2 + 3*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2 - x1 - 2*x2 + x3\n");
    const Polynomial f1 = ex.system.gens[0];
    CHECK(polyToString(topPart(f1), ex.varNames) ==
          "x1^2 + 3*x1*x2 + x2^2 + 71*x1*x3 + 71*x2*x3 + x3^2");
    CHECK(polyToString(homogenize(f1), homogenizedNames(ex.varNames)) ==
          "x1^2 + 3*x1*x2 + x2^2 + 71*x1*x3 + 71*x2*x3 + x3^2 + 72*x1*y + 71*x2*y + x3*y");

    // homogeneous input is its own top part
    const Polynomial h = topPart(f1);
    CHECK(topPart(h) == h);

    // y = 0 slice of a y-divisible homogeneous polynomial is zero
    const Polynomial x1y2 =
        Polynomial::monomial(rh, Monomial::variable(3, 0) * Monomial::variable(3, 2, 2));
    CHECK(topPart(x1y2).isZero());

    // top_part(homogenize(f)) = top_part(f) under the embedding
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = randomPoly(r2_7, 4, rng);
        if (p.isZero()) continue;
        CHECK(dehomogenize(topPart(homogenize(p))) == topPart(p));
        CHECK(dehomogenize(homogenize(p)) == p);
    }
}

TEST_CASE("linear variable transforms") {
    const auto sys = parseSystemText("ring q=7 vars=x1,x2\nx1 + 2*x2\nx1^2 + x2\n");
    const Polynomial f = sys.system.gens[0];

    const std::vector<std::vector<std::uint32_t>> id = {{1, 0}, {0, 1}};
    CHECK(applyLinearTransform(f, id) == f);

    const std::vector<std::vector<std::uint32_t>> swap = {{0, 1}, {1, 0}};
    CHECK(polyToString(applyLinearTransform(f, swap), sys.varNames) == "2*x1 + x2");

    const std::vector<std::vector<std::uint32_t>> singular = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS(applyLinearTransform(f, singular), std::invalid_argument);

    // The upper-triangular transform sending l = a1 x1 + ... + x_{n+1} to
    // x_{n+1}: P has ones on the diagonal and -a_i in the last column.
    const auto sys3 = parseSystemText("ring q=7 vars=x1,x2,x3\nx1 + 2*x2 + x3\n");
    const Polynomial ell = sys3.system.gens[0];
    const PrimeField F(7);
    std::vector<std::vector<std::uint32_t>> P = {
        {1, 0, F.neg(1)}, {0, 1, F.neg(2)}, {0, 0, 1}};
    CHECK(polyToString(applyLinearTransform(ell, P), sys3.varNames) == "x3");

    // invertible transforms preserve the degree of homogeneous input
    std::mt19937_64 rng(23);
    const Ring r3{3, 7, false};
    for (int i = 0; i < 20; ++i) {
        std::vector<std::vector<std::uint32_t>> M(3, std::vector<std::uint32_t>(3));
        for (auto& row : M)
            for (auto& e : row) e = static_cast<std::uint32_t>(rng() % 7);
        Polynomial g = randomPoly(r3, 3, rng);
        if (g.isZero()) continue;
        Polynomial h = topPart(g);
        try {
            Polynomial image = applyLinearTransform(h, M);
            CHECK(image.degree() == h.degree());
            CHECK(image.isHomogeneous());
        } catch (const std::invalid_argument&) {
            // singular sample: nothing to check
        }
    }
}

TEST_CASE("random system generation") {
    const std::vector<int> degs = {2, 2, 2, 2};
    const PolySystem F = randomSystem(3, degs, 73, 12345);
    CHECK(F.gens.size() == 4);
    for (const auto& f : F.gens) {
        CHECK(f.degree() == 2);
        // zero constant term
        CHECK(f.coefficientOf(Monomial(3)) == 0);
        CHECK_FALSE(topPart(f).isZero());
    }
    // determinism
    const PolySystem G = randomSystem(3, degs, 73, 12345);
    for (std::size_t i = 0; i < 4; ++i) CHECK(F.gens[i] == G.gens[i]);
    const PolySystem H = randomSystem(3, degs, 73, 54321);
    bool anyDiff = false;
    for (std::size_t i = 0; i < 4; ++i) anyDiff |= !(F.gens[i] == H.gens[i]);
    CHECK(anyDiff);

    CHECK_THROWS_AS(randomSystem(3, {1}, 73, 1), std::invalid_argument);
    CHECK_THROWS_AS(randomSystem(0, degs, 73, 1), std::invalid_argument);
}
