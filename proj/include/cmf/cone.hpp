#pragma once

#include <string>
#include <vector>

#include "cmf/branch.hpp"

namespace cmf {

// One plane of the degenerate-secant cone: the span of the tangent
// direction (1, 0, ..., 0) and the recorded jump direction.
struct ConePlane {
    std::vector<Rat> direction; // length n, first entry 0, first nonzero entry 1
    std::vector<int> residues;  // residue classes k mod e that select this plane
    int jump = 0;               // smallest admissible exponent for those residues
};

struct SecantCone {
    int n = 0;
    int e = 0;
    std::vector<ConePlane> planes;
    std::vector<int> truncatedResidues; // residues whose jump lies past the window
    int window = 0;
};

// For each residue k in 1..e-1, the jump is the least support exponent
// j >= e+1 with nonzero coefficient column and e not dividing k*j; the
// plane through the tangent and that column is part of the cone. Planes
// found by several residues are merged.
SecantCone secantCone(const StandardBranch& b);

// Projection centre encoded by two linear forms L1, L2 with coefficient
// vector z = (z_1..z_n, z_{n+1}..z_{2n}).
struct ProjectionPlane {
    std::vector<Rat> z;
    int n() const { return static_cast<int>(z.size()) / 2; }
    std::vector<Rat> l1() const { return {z.begin(), z.begin() + n()}; }
    std::vector<Rat> l2() const { return {z.begin() + n(), z.end()}; }
    std::string str() const;
};

// L is transversal to the cone when for every cone plane the 2x2 matrix
// [[L1(tangent), L1(w)], [L2(tangent), L2(w)]] is invertible.
bool isTransversal(const SecantCone& cone, const ProjectionPlane& L);

// Deterministic enumeration of integer coefficient vectors: shells by
// max-norm r = 1, 2, ...; inside a shell ascending L1-norm; ties in
// descending lexicographic order (r > r-1 > ... > -r). Returns the first
// `count` candidates that are transversal and have independent rows.
std::vector<ProjectionPlane> pickGenericPlanes(const SecantCone& cone, int count);

inline ProjectionPlane pickGenericPlane(const SecantCone& cone) {
    return pickGenericPlanes(cone, 1).front();
}

} // namespace cmf
