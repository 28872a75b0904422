#include "gblab/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace gblab {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    if (f.isZero() || g.isZero()) throw std::invalid_argument("spoly: zero input");
    if (f.ring() != g.ring()) throw std::invalid_argument("spoly: ring mismatch");
    const Monomial l = f.lm().lcm(g.lm());
    const PrimeField F = f.ring().field();
    Polynomial s = f.mulTerm(F.inv(f.lc()), l / f.lm());
    s.addScaledMul(F.neg(F.inv(g.lc())), l / g.lm(), g);
    return s;
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const PrimeField F = f.ring().field();
    Polynomial h = f;
    std::vector<Term> remTerms;
    while (!h.isZero()) {
        const Monomial lm = h.lm();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.isZero() && g.lm().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            h.addScaledMul(F.neg(F.div(h.lc(), reducer->lc())), lm / reducer->lm(), *reducer);
        } else {
            remTerms.push_back(h.terms().front());
            h.dropLeadingTerm();
        }
    }
    return Polynomial(f.ring(), std::move(remTerms));
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int lcmDeg;
    int sugar;
    std::uint64_t age;
};

struct PairOrder {
    SelectionStrategy strategy;
    bool operator()(const Pair& a, const Pair& b) const {
        if (strategy == SelectionStrategy::Sugar && a.sugar != b.sugar)
            return a.sugar < b.sugar;
        if (a.lcmDeg != b.lcmDeg) return a.lcmDeg < b.lcmDeg;
        if (a.lcm != b.lcm) return drlLess(a.lcm, b.lcm);
        return a.age < b.age;
    }
};

// Normal form that carries the sugar through each step:
// sugar(h - c*t*g) = max(sugar(h), deg(t) + sugar(g)).
Polynomial reduceTracked(Polynomial h, int& sugarInOut, const std::vector<Polynomial>& basis,
                         const std::vector<int>& basisSugar) {
    const PrimeField F = h.ring().field();
    std::vector<Term> remTerms;
    while (!h.isZero()) {
        const Monomial lm = h.lm();
        std::size_t reducer = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k].lm().divides(lm)) {
                reducer = k;
                break;
            }
        if (reducer < basis.size()) {
            const Monomial t = lm / basis[reducer].lm();
            sugarInOut = std::max(sugarInOut,
                                  static_cast<int>(t.degree()) + basisSugar[reducer]);
            h.addScaledMul(F.neg(F.div(h.lc(), basis[reducer].lc())), t, basis[reducer]);
        } else {
            remTerms.push_back(h.terms().front());
            h.dropLeadingTerm();
        }
    }
    return Polynomial(h.ring(), std::move(remTerms));
}

} // namespace

GroebnerTrace buchberger(const PolySystem& F, SelectionStrategy strategy) {
    if (F.gens.empty()) throw std::invalid_argument("buchberger: empty system");
    GroebnerTrace trace;

    std::vector<Polynomial> basis;
    std::vector<int> sugar; // sugar(f) of a generator is deg(f)
    std::vector<Pair> pairs;
    std::uint64_t nextAge = 0;
    int maxInputDeg = 0;

    // Keeps every stored tail in normal form against the current basis.
    // Leading terms never change, so queued pairs stay valid; the run then
    // matches the staircase shape the degree-D top-part arguments rely on.
    auto tailReduceAll = [&](const Monomial& newLm) {
        for (auto& b : basis) {
            bool touched = false;
            for (std::size_t k = 1; k < b.terms().size() && !touched; ++k)
                if (newLm.divides(b.terms()[k].mono)) touched = true;
            if (!touched) continue;
            Polynomial lead = Polynomial::monomial(b.ring(), b.lm(), b.lc());
            Polynomial tail = b - lead;
            b = lead + normalForm(tail, basis);
        }
    };

    auto addPairs = [&](std::size_t jNew) {
        for (std::size_t i = 0; i < jNew; ++i) {
            const Monomial& a = basis[i].lm();
            const Monomial& b = basis[jNew].lm();
            if (a.coprime(b)) continue; // Buchberger's first criterion
            Monomial l = a.lcm(b);
            int ldeg = static_cast<int>(l.degree());
            int sg = std::max(
                static_cast<int>((l / a).degree()) + sugar[i],
                static_cast<int>((l / b).degree()) + sugar[jNew]);
            pairs.push_back(Pair{i, jNew, std::move(l), ldeg, sg, nextAge++});
        }
    };

    for (const auto& f : F.gens) {
        maxInputDeg = std::max(maxInputDeg, static_cast<int>(f.degree()));
        basis.push_back(f.monic());
        sugar.push_back(static_cast<int>(f.degree()));
        addPairs(basis.size() - 1);
    }

    const PairOrder order{strategy};
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), order);
        Pair p = *it;
        pairs.erase(it);

        // The polynomials involved in this iteration (the two multiples and
        // any reducer multiple) all have total degree <= deg(lcm); the sugar
        // value only orders the queue.
        trace.stepDegrees.push_back(p.lcmDeg);

        Polynomial s = spoly(basis[p.i], basis[p.j]);
        if (!s.isZero()) trace.spolyDegrees.push_back(static_cast<int>(s.degree()));
        int resultSugar = p.sugar;
        Polynomial r = reduceTracked(std::move(s), resultSugar, basis, sugar);
        if (r.isZero()) {
            ++trace.zeroReductions;
            continue;
        }
        basis.push_back(r.monic());
        sugar.push_back(resultSugar);
        addPairs(basis.size() - 1);
        tailReduceAll(basis.back().lm());
    }

    trace.reducedBasis = interreduce(basis);
    for (const auto& g : trace.reducedBasis)
        trace.maxGbDegree = std::max(trace.maxGbDegree, static_cast<int>(g.degree()));
    trace.sdStep = maxInputDeg;
    for (int d : trace.stepDegrees) trace.sdStep = std::max(trace.sdStep, d);
    trace.sdStrict = maxInputDeg;
    for (int d : trace.spolyDegrees) trace.sdStrict = std::max(trace.sdStrict, d);
    return trace;
}

std::vector<Polynomial> interreduce(const std::vector<Polynomial>& basis) {
    std::vector<Polynomial> work;
    for (const auto& g : basis)
        if (!g.isZero()) work.push_back(g.monic());
    std::sort(work.begin(), work.end(),
              [](const Polynomial& a, const Polynomial& b) { return drlLess(a.lm(), b.lm()); });

    // Minimal generators: a proper divisor is strictly smaller in a graded
    // order, so it appears earlier in the scan.
    std::vector<Polynomial> minimal;
    for (auto& g : work) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.lm().divides(g.lm())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }

    // Tail reduction against the other elements.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (i != k) others.push_back(reduced[i]);
        reduced[k] = normalForm(reduced[k], others).monic();
    }
    return reduced;
}

bool isGroebner(const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw std::invalid_argument("isGroebner: empty basis");
    for (const auto& g : basis)
        if (g.isZero()) throw std::invalid_argument("isGroebner: zero element");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lm().coprime(basis[j].lm())) continue;
            if (!normalForm(spoly(basis[i], basis[j]), basis).isZero()) return false;
        }
    return true;
}

SaturationResult saturationExponent(const PolySystem& F,
                                    const std::vector<Polynomial>& reducedGbF,
                                    const std::vector<Polynomial>& reducedGbFh) {
    if (F.ring.homogenized)
        throw std::invalid_argument("saturationExponent expects an affine system");
    std::vector<Polynomial> gh;
    gh.reserve(reducedGbF.size());
    for (const auto& g : reducedGbF) gh.push_back(homogenize(g));

    const Ring rh = F.ring.extended();
    const Monomial y = Monomial::variable(rh.nvars, rh.nvars - 1);
    int s0 = 0;
    for (const auto& g : gh) {
        Polynomial cur = g;
        int s = 0;
        while (!normalForm(cur, reducedGbFh).isZero()) {
            cur = cur.mulTerm(1, y);
            ++s;
        }
        s0 = std::max(s0, s);
    }
    return SaturationResult{s0, std::move(gh)};
}

SaturationResult saturationExponent(const PolySystem& F) {
    const auto G = buchberger(F, SelectionStrategy::Sugar).reducedBasis;
    const auto H = buchberger(homogenized(F), SelectionStrategy::Normal).reducedBasis;
    return saturationExponent(F, G, H);
}

} // namespace gblab
