#pragma once

#include <vector>

#include "cmf/branch.hpp"
#include "cmf/echelon.hpp"

namespace cmf {

struct SemigroupData {
    int bound = 0;              // values certified on [0, bound)
    std::vector<int> elements;  // semigroup intersected with [0, bound)
    std::vector<int> gaps;
    long delta = 0;
    int frobenius = -1;         // largest gap; -1 when there are none
    int conductor = 0;
    bool gorenstein = false;    // conductor == 2 * delta
    bool complete = false;      // tail certified inside the window
};

// Echelon span of all power products of the generators (including the
// empty product 1) with formal order < bound. Orders of elements of the
// generated ring below `certifiedFrom` are exactly the pivot orders.
struct RingClosure {
    SeriesSpan span;
    bool complete = false;
    int certifiedFrom = -1; // every order >= this lies in the value set
    int bound = 0;
};

// Enumerates products ascending by formal order (sum of exponent *
// generator order), deterministic lexicographic tie-break. When earlyStop
// is set, stops once `runLen` consecutive pivot orders c..c+runLen-1 are
// certified: from then on every order is attained (runLen must be an
// element of the value set, typically the smallest generator order).
// Pivot orders are authoritative below `bound`; rows are stored to
// `window` (>= bound, default bound), so exact polynomial generators stay
// exact when the window clears their degrees.
RingClosure ringClosure(const std::vector<TSeries>& gens, int bound, bool earlyStop, int runLen,
                        int window = -1);

SemigroupData semigroupOfBranch(const StandardBranch& b, int bound);

// Default bound 4 * (product of the two smallest coordinate orders),
// doubled while incomplete, hard cap 512. Fails with IncompleteSemigroup
// when the cap is reached without a certificate.
SemigroupData semigroupAuto(const StandardBranch& b);

int defaultSemigroupBound(const StandardBranch& b);

} // namespace cmf
