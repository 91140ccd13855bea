#include "cmf/semigroup.hpp"

#include <algorithm>

#include "cmf/errors.hpp"

namespace cmf {

namespace {

struct Product {
    long weight;            // formal order: sum of exponent * generator order
    std::vector<int> expo;  // one exponent per generator

    bool operator<(const Product& o) const {
        if (weight != o.weight) return weight < o.weight;
        return expo < o.expo;
    }
};

void enumerateRec(const std::vector<int>& ords, size_t i, long weight, long bound,
                  std::vector<int>& expo, std::vector<Product>& out) {
    if (i == ords.size()) {
        out.push_back({weight, expo});
        return;
    }
    for (int k = 0;; ++k) {
        long w = weight + static_cast<long>(k) * ords[i];
        if (w >= bound) break;
        expo[i] = k;
        enumerateRec(ords, i + 1, w, bound, expo, out);
    }
    expo[i] = 0;
}

} // namespace

RingClosure ringClosure(const std::vector<TSeries>& gens, int bound, bool earlyStop, int runLen,
                        int window) {
    if (gens.empty()) fail("BadOrder", "ring closure needs at least one generator");
    if (window < bound) window = bound;
    std::vector<TSeries> gw;
    std::vector<int> ords;
    for (const auto& g : gens) {
        if (g.trunc() < bound) fail("BadOrder", "generator window narrower than the requested bound");
        auto o = g.order();
        if (!o || *o < 1) fail("BadOrder", "ring generators must have order >= 1");
        ords.push_back(*o);
        // Widening past a generator's own window is only sound for exact
        // polynomial generators; callers control that.
        gw.push_back(g.trunc() >= window ? g.truncated(window) : g.extendedExact(window));
    }

    std::vector<Product> products;
    {
        std::vector<int> expo(gens.size(), 0);
        enumerateRec(ords, 0, 0, bound, expo, products);
        std::sort(products.begin(), products.end());
    }

    // Power ladders, extended on demand.
    std::vector<std::vector<TSeries>> powers(gens.size());
    auto powerOf = [&](size_t i, int k) -> const TSeries& {
        auto& ladder = powers[i];
        if (ladder.empty()) ladder.push_back(TSeries::constant(Rat(1), window));
        while (static_cast<int>(ladder.size()) <= k)
            ladder.push_back(ladder.back() * gw[i]);
        return ladder[static_cast<size_t>(k)];
    };

    RingClosure rc{SeriesSpan(window), false, -1, bound};

    // Certificate: runLen consecutive pivots c..c+runLen-1 with every
    // product of formal order <= c+runLen-1 already processed. Checked
    // between weight groups; later products only have higher orders.
    auto tryCertify = [&](long processedUpTo) -> bool {
        auto pivots = rc.span.pivotOrders();
        int run = 0, runStart = -1;
        for (int o = 0; o <= static_cast<int>(std::min<long>(processedUpTo, bound - 1)); ++o) {
            if (pivots.count(o)) {
                if (run == 0) runStart = o;
                ++run;
                if (run >= runLen && runStart + runLen - 1 <= processedUpTo) {
                    rc.complete = true;
                    rc.certifiedFrom = runStart;
                    return true;
                }
            } else {
                run = 0;
            }
        }
        return false;
    };

    size_t idx = 0;
    while (idx < products.size()) {
        long w = products[idx].weight;
        while (idx < products.size() && products[idx].weight == w) {
            const auto& pr = products[idx];
            TSeries v = TSeries::constant(Rat(1), window);
            for (size_t i = 0; i < gens.size(); ++i)
                if (pr.expo[i] > 0) v = v * powerOf(i, pr.expo[i]);
            rc.span.insert(std::move(v));
            ++idx;
        }
        if (earlyStop && tryCertify(w)) return rc;
    }
    // All products below the bound processed: pivots are exact on [0, bound).
    if (tryCertify(bound - 1)) return rc;
    return rc;
}

int defaultSemigroupBound(const StandardBranch& b) {
    std::vector<int> ords = b.br.ordersAtZero();
    std::sort(ords.begin(), ords.end());
    long n = 4L * ords[0] * (ords.size() > 1 ? ords[1] : ords[0]);
    n = std::max(n, 16L);
    n = std::min(n, 512L);
    return static_cast<int>(n);
}

SemigroupData semigroupOfBranch(const StandardBranch& b, int bound) {
    if (!b.br.exact && b.br.trunc < bound)
        fail("TruncationTooSmall", "window " + std::to_string(b.br.trunc) +
                                       " cannot certify a bound of " + std::to_string(bound));
    // Invariant computations always happen on the parameter-origin fiber.
    std::vector<TSeries> gens;
    for (int i = 0; i < b.dim(); ++i)
        gens.push_back(b.br.coordSeriesAtZero(i, bound));
    RingClosure rc = ringClosure(gens, bound, true, b.e);

    SemigroupData sg;
    sg.bound = bound;
    sg.complete = rc.complete;
    auto pivots = rc.span.pivotOrders();
    for (int o = 0; o < bound; ++o) {
        bool inSg = pivots.count(o) || (rc.complete && o >= rc.certifiedFrom);
        if (inSg) sg.elements.push_back(o);
        else sg.gaps.push_back(o);
    }
    if (rc.complete) {
        // Everything at or past certifiedFrom is an element, so the gap
        // list is final even if the window is larger.
        sg.delta = static_cast<long>(sg.gaps.size());
        sg.frobenius = sg.gaps.empty() ? -1 : sg.gaps.back();
        sg.conductor = sg.frobenius + 1;
        sg.gorenstein = (sg.conductor == 2 * sg.delta);
    }
    return sg;
}

SemigroupData semigroupAuto(const StandardBranch& b) {
    int cap = 512;
    int bound = defaultSemigroupBound(b);
    if (!b.br.exact) {
        // Inexact coordinates cannot be extended past their window.
        cap = std::min(cap, b.br.trunc);
        bound = std::min(bound, cap);
    }
    while (true) {
        SemigroupData sg = semigroupOfBranch(b, bound);
        if (sg.complete) return sg;
        if (bound >= cap)
            fail("IncompleteSemigroup",
                 "no conductor certificate below the cap (bound " + std::to_string(bound) + ")");
        bound = std::min(cap, 2 * bound);
    }
}

} // namespace cmf
