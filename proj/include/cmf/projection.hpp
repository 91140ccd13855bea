#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmf/cone.hpp"
#include "cmf/puiseux.hpp"

namespace cmf {

// Image of a branch under a projection to the plane: two coordinates in t
// and optional deformation parameters.
struct PlaneBranch {
    VarList tvars;
    std::vector<std::string> params;
    MPoly x, y;
    int trunc = 0;
    bool exact = true;

    PlaneBranch() : x(VarList{}), y(VarList{}) {}

    TSeries xSeriesAtZero(int window) const;
    TSeries ySeriesAtZero(int window) const;
    Branch asBranch() const;
};

// Perturbs the coefficient of coordinate `coordIndex` in the given linear
// form by a named parameter: z -> z + s.
struct FamilyPerturbation {
    int form = 0;       // 0 for L1, 1 for L2
    int coordIndex = 0; // 0-based coordinate index
    std::string param;
};

// x = L1(coords), y = L2(coords). Checks transversality against the secant
// cone (unless force is set) and rejects non-reduced images.
PlaneBranch project(const StandardBranch& b, const ProjectionPlane& L,
                    const std::vector<FamilyPerturbation>& family = {}, bool force = false);

struct NormalizationRecord {
    std::string monomial;   // the pure power whose coefficient was scaled to 1
    MPoly divisor;          // coefficient polynomial in the parameters
    bool exact = true;      // division was exact (always true without parameters)
    int paramOrder = 0;     // certified parameter order when not exact
    NormalizationRecord() : divisor(VarList{}) {}
};

struct ImplicitEquation {
    VarList vars;  // "x", "y", then the parameters
    MPoly F;
    NormalizationRecord norm;

    ImplicitEquation() : F(VarList{}) {}
};

// Eliminates t through the Sylvester resultant of x - x(t), y - y(t), then
// normalizes the pure y-power coefficient to 1. The parametrization must
// be exact (polynomial in t).
ImplicitEquation implicitize(const PlaneBranch& pb, int paramOrder = 8);

struct MuBarReport {
    long mu = 0;
    ProjectionPlane plane1, plane2;
    PuiseuxData px1, px2;
};

// Milnor number of a generic plane projection, computed from the first two
// transversal planes of the frozen enumeration; their characteristic data
// must agree.
MuBarReport muBar(const StandardBranch& b);

// Puiseux data of an exact plane branch, with an internal standardization
// window that retries until the gcd chain closes.
PuiseuxData puiseuxOfPlaneBranch(const PlaneBranch& pb);

struct DeltaBounds {
    long deltaSpace = 0;
    long deltaPlane = 0;
    long upper = 0; // (e-1) * deltaSpace - binom(e-1, 2)
    bool lowerOk = false;
    bool upperOk = false;
};

DeltaBounds deltaBoundsCheck(const StandardBranch& b);

PlaneBranch specialize(const PlaneBranch& pb, const std::map<std::string, Rat>& assign);
ImplicitEquation specialize(const ImplicitEquation& eq, const std::map<std::string, Rat>& assign);

} // namespace cmf
