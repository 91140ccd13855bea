#include "cmf/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cmf/errors.hpp"

namespace cmf {

std::vector<int> multiplicitySequenceFromExponents(int e, const std::vector<int>& exps) {
    if (e == 1) return {1};
    int maxExp = exps.empty() ? e : *std::max_element(exps.begin(), exps.end());
    // Every blow-up divides by the smaller order; the total downward shift
    // is bounded by the sum of the multiplicity sequence, which is at most
    // e + conductor. A generous window with a doubling retry keeps this
    // robust without a sharp a-priori bound.
    int window = (e + 2) * (maxExp + 2) + 16;
    for (int attempt = 0; attempt < 6; ++attempt) {
        TSeries f = TSeries::monomial(e, Rat(1), window);
        TSeries g(window);
        for (int b : exps) g = g + TSeries::monomial(b, Rat(1), window);
        std::vector<int> seq;
        bool ok = true;
        for (int guard = 0; guard < 10000; ++guard) {
            auto of = f.order(), og = g.order();
            if (!of || !og) { ok = false; break; }
            if (*of > *og) { std::swap(f, g); std::swap(of, og); }
            int m = *of;
            seq.push_back(m);
            if (m == 1) break;
            // One blow-up in the chart of the smaller-order coordinate:
            // (f, g) -> (f, g/f), then recentre if the quotient is a unit.
            TSeries unit = f.shiftDown(*of).inverseUnit();
            g = (g.shiftDown(*of)) * unit;
            auto ogNew = g.order();
            if (ogNew && *ogNew == 0) g = g - TSeries::constant(g.coeff(0), g.trunc());
            if (g.trunc() < 2) { ok = false; break; }
            f = f.truncated(g.trunc());
        }
        if (ok && !seq.empty() && seq.back() == 1) return seq;
        window *= 2;
    }
    fail("TruncationTooSmall", "multiplicity sequence did not terminate within the window");
}

PuiseuxData puiseuxCharacteristic(const StandardBranch& plane) {
    if (plane.dim() != 2)
        fail("DimensionMismatch", "Puiseux data needs a plane branch (two coordinates)");
    if (plane.br.hasParams())
        fail("MissingParameter", "Puiseux data needs a parameter-free branch (specialize first)");

    PuiseuxData px;
    px.e = plane.e;
    std::set<int> support = plane.secondarySupport();

    if (plane.e == 1) {
        px.gcdSeq = {1};
        px.sgGenerators = {1};
        px.multSequence = {1};
        px.delta = 0;
        px.mu = 0;
        px.conductor = 0;
        return px;
    }

    // gcd chain over the support of the second coordinate.
    int d = plane.e;
    px.gcdSeq.push_back(d);
    for (int j : support) {
        if (d == 1) break;
        if (j % d != 0) {
            px.charExponents.push_back(j);
            d = std::gcd(d, j);
            px.gcdSeq.push_back(d);
        }
    }
    if (d != 1) {
        if (plane.br.exact)
            fail("InvalidBranch", "gcd chain stalled at " + std::to_string(d) +
                                      " on exact data; the parametrization is not primitive");
        fail("TruncationTooSmall", "gcd chain stalled at " + std::to_string(d) +
                                       " within the window; enlarge the truncation");
    }

    // Semigroup generators from the characteristic exponents.
    px.sgGenerators.push_back(px.e);
    if (!px.charExponents.empty()) {
        px.sgGenerators.push_back(px.charExponents[0]);
        for (size_t i = 1; i < px.charExponents.size(); ++i) {
            long prev = px.sgGenerators.back();
            long di1 = px.gcdSeq[i - 1]; // d_{i-1}
            long di = px.gcdSeq[i];      // d_i
            px.sgGenerators.push_back(di1 / di * prev + px.charExponents[i] - px.charExponents[i - 1]);
        }
    }

    // Support exponents beyond the last characteristic exponent do not
    // change the equisingularity class but flag a convention choice.
    if (!px.charExponents.empty()) {
        int last = px.charExponents.back();
        std::vector<int> extra;
        for (int j : support)
            if (j > last) extra.push_back(j);
        if (!extra.empty()) {
            std::ostringstream os;
            os << "support exponent";
            if (extra.size() > 1) os << "s";
            bool first = true;
            for (int j : extra) { os << (first ? " " : ", ") << j; first = false; }
            os << " beyond the last characteristic exponent " << last
               << "; saturation conventions may list them differently";
            px.warnings.push_back(os.str());
        }
    }

    px.multSequence = multiplicitySequenceFromExponents(px.e, px.charExponents.empty()
                                                                  ? std::vector<int>{}
                                                                  : px.charExponents);
    for (int m : px.multSequence) px.delta += static_cast<long>(m) * (m - 1) / 2;
    px.mu = 2 * px.delta;
    px.conductor = 2 * px.delta;
    return px;
}

DeltaReport deltaConsistency(const StandardBranch& plane) {
    DeltaReport rep;
    rep.px = puiseuxCharacteristic(plane);
    rep.deltaMultSeq = rep.px.delta;
    // The semigroup gap count must match; the bound has to comfortably pass
    // the conductor predicted by the multiplicity sequence.
    int bound = static_cast<int>(std::max<long>(rep.px.conductor + plane.e + 2, 16));
    rep.sg = semigroupOfBranch(plane, bound);
    if (!rep.sg.complete)
        fail("IncompleteSemigroup", "no certificate below the predicted conductor bound");
    rep.deltaGaps = rep.sg.delta;
    rep.agree = (rep.deltaGaps == rep.deltaMultSeq);
    return rep;
}

} // namespace cmf
