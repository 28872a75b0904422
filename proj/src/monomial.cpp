#include "gblab/monomial.hpp"

#include <algorithm>

namespace gblab {

namespace {

void enumerate(std::size_t var, std::uint32_t remaining, std::vector<std::uint16_t>& exps,
               const std::function<void(const Monomial&)>& fn) {
    if (var + 1 == exps.size()) {
        exps[var] = static_cast<std::uint16_t>(remaining);
        fn(Monomial(exps));
        exps[var] = 0;
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        exps[var] = static_cast<std::uint16_t>(e);
        enumerate(var + 1, remaining - e, exps, fn);
    }
    exps[var] = 0;
}

} // namespace

void forEachMonomialOfDegree(std::size_t nvars, std::uint32_t d,
                             const std::function<void(const Monomial&)>& fn) {
    if (nvars == 0) {
        if (d == 0) fn(Monomial(std::vector<std::uint16_t>{}));
        return;
    }
    std::vector<std::uint16_t> exps(nvars, 0);
    enumerate(0, d, exps, fn);
}

std::vector<Monomial> monomialsOfDegreeDesc(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    forEachMonomialOfDegree(nvars, d, [&](const Monomial& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), drlGreater);
    return out;
}

std::vector<Monomial> monomialsUpToDegreeDesc(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t e = d + 1; e-- > 0;) {
        auto slice = monomialsOfDegreeDesc(nvars, e);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

} // namespace gblab
