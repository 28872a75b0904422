#include <doctest.h>

#include <random>

#include "gblab/example1.hpp"
#include "gblab/groebner.hpp"
#include "gblab/hilbert.hpp"
#include "gblab/io.hpp"

using namespace gblab;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

long long binomLL(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("minimal generators form an antichain") {
    MonomialIdeal J(2, {mono({2, 0}), mono({2, 1}), mono({0, 1}), mono({1, 1})});
    REQUIRE(J.gens().size() == 2); // x1^2 and x2 absorb the rest
    CHECK(J.contains(mono({2, 3})));
    CHECK_FALSE(J.contains(mono({1, 0})));
}

TEST_CASE("leading monomial ideals of the reference bases") {
    const NamedSystem ex = example1System();
    const auto traceTop = buchberger(topParts(ex.system));
    const MonomialIdeal Jtop = lmIdeal(traceTop.reducedBasis, 3);
    CHECK(Jtop.gens().size() == 6);
    CHECK(hilbertFunction(Jtop, 0) == 1);
    CHECK(hilbertFunction(Jtop, 1) == 3);
    CHECK(hilbertFunction(Jtop, 2) == 2);
    CHECK(hilbertFunction(Jtop, 3) == 0);

    const auto traceHom = buchberger(homogenized(ex.system));
    const MonomialIdeal Jhom = lmIdeal(traceHom.reducedBasis, 4);
    CHECK(Jhom.gens().size() == 11);
    CHECK(hilbertFunction(Jhom, 2) == 6);
    CHECK(hilbertFunction(Jhom, 3) == 4);
    CHECK(hilbertFunction(Jhom, 4) == 1);
    CHECK(hilbertFunction(Jhom, 7) == 1); // stabilized at one projective zero

    // a principal ideal keeps its generator
    const MonomialIdeal Jx(1, {mono({1})});
    CHECK(Jx.gens().size() == 1);

    // the zero ideal: the full polynomial ring
    const MonomialIdeal J0(3, {});
    for (int d = 0; d <= 6; ++d) CHECK(hilbertFunction(J0, d) == binomLL(2 + d, d));
}

TEST_CASE("hilbert numerator base cases") {
    const MonomialIdeal J(1, {mono({2})});
    CHECK(hilbertNumerator(J) == std::vector<long long>{1, 0, -1});

    const MonomialIdeal unit(2, {mono({0, 0})});
    CHECK(hilbertNumerator(unit).empty());

    const MonomialIdeal zero(2, {});
    CHECK(hilbertNumerator(zero) == std::vector<long long>{1});
}

TEST_CASE("series expansion matches direct counting") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<Monomial> gens;
        const std::size_t k = rng() % 5;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::uint16_t> e(n, 0);
            for (auto& x : e) x = static_cast<std::uint16_t>(rng() % 4);
            gens.push_back(Monomial(std::move(e)));
        }
        const MonomialIdeal J(n, std::move(gens));
        const auto hf = expandHilbertSeries(hilbertNumerator(J), n, 12);
        for (int d = 0; d <= 12; ++d) CHECK(hf[static_cast<std::size_t>(d)] == hilbertFunction(J, d));
    }
}

TEST_CASE("regularity degrees") {
    const NamedSystem ex = example1System();

    const auto top = regularityDegrees(
        lmIdeal(buchberger(topParts(ex.system)).reducedBasis, 3), 8);
    CHECK(top.artinian);
    CHECK(top.zeroDimensional);
    REQUIRE(top.dReg.has_value());
    CHECK(*top.dReg == 3);
    CHECK(top.genDReg == top.dReg);
    CHECK(top.hf[0] == 1);
    CHECK(top.hf[1] == 3);
    CHECK(top.hf[2] == 2);
    CHECK(top.hf[3] == 0);

    const auto hom = regularityDegrees(
        lmIdeal(buchberger(homogenized(ex.system)).reducedBasis, 4), 8);
    CHECK_FALSE(hom.artinian);
    CHECK(hom.zeroDimensional);
    REQUIRE(hom.genDReg.has_value());
    CHECK(*hom.genDReg == 4);
    CHECK_FALSE(hom.dReg.has_value()); // d_reg = infinity
    REQUIRE(hom.hilbertPolyConstant.has_value());
    CHECK(*hom.hilbertPolyConstant == 1); // one projective zero

    // full ring: constant Hilbert polynomial only in one variable
    const auto full1 = regularityDegrees(MonomialIdeal(1, {}), 6);
    CHECK_FALSE(full1.artinian);
    CHECK(full1.zeroDimensional);
    CHECK(full1.genDReg == 0);
    CHECK(full1.hilbertPolyConstant == 1);

    const auto full3 = regularityDegrees(MonomialIdeal(3, {}), 6);
    CHECK_FALSE(full3.zeroDimensional);
    CHECK_FALSE(full3.dReg.has_value());
    CHECK_FALSE(full3.genDReg.has_value());

    // the whole quotient collapses when 1 is inside
    const auto unit = regularityDegrees(MonomialIdeal(2, {mono({0, 0})}), 4);
    CHECK(unit.artinian);
    CHECK(unit.dReg == 0);
}

TEST_CASE("artinian quotients have matching regularity notions") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        std::vector<Monomial> gens;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::uint16_t> e(n, 0);
            e[v] = static_cast<std::uint16_t>(1 + rng() % 3);
            gens.push_back(Monomial(std::move(e))); // pure power per variable
        }
        if (rng() % 2) {
            std::vector<std::uint16_t> e(n, 0);
            for (auto& x : e) x = static_cast<std::uint16_t>(rng() % 2);
            gens.push_back(Monomial(std::move(e)));
        }
        const auto s = regularityDegrees(MonomialIdeal(n, std::move(gens)), 14);
        REQUIRE(s.artinian);
        CHECK(s.dReg == s.genDReg);
        REQUIRE(s.dReg.has_value());
        CHECK(s.hf[static_cast<std::size_t>(*s.dReg)] == 0);
        if (*s.dReg > 0) CHECK(s.hf[static_cast<std::size_t>(*s.dReg) - 1] > 0);
    }
}
