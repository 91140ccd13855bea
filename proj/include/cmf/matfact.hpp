#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmf/polymatrix.hpp"
#include "cmf/projection.hpp"

namespace cmf {

// Generators of the branch ring as a module over the plane projection,
// polynomials in t with distinct leading orders; the first is 1.
struct ModuleData {
    PlaneBranch plane;
    std::vector<MPoly> gens; // context {"t"}
    std::vector<int> genOrders;
    int trunc = 0; // window the quotient was certified at

    size_t size() const { return gens.size(); }
};

struct MatrixFactorization {
    ImplicitEquation eq;
    PolyMatrix d, h;
    int size = 0;
    std::optional<ModuleData> gens;

    MatrixFactorization() : d(0, 0, VarList{}), h(0, 0, VarList{}) {}
};

// Representatives of O_X / (x, y) O_X: the t-orders present in the value
// set of O_X but not of the ideal, below the conductor threshold. The
// number of generators equals dim of the quotient.
ModuleData quotientGenerators(const StandardBranch& b, const PlaneBranch& pb);

struct SyzygyBasis {
    std::vector<std::vector<MPoly>> vectors; // each of length gens.size()
    VarList vars;                            // "x", "y", then parameters
    int degreeCap = 0;
    int paramCap = 0;
    int tDegreeBound = 0; // highest t-degree the exact system covered
};

// All vectors a with sum_i a_i(x, y) g_i(t) = 0 under x = x(t), y = y(t),
// where each a_i ranges over polynomials with terms of xy-degree 1..D and
// parameter degree <= paramCap. The system is exact (full polynomial
// identity), and every basis vector is re-verified by substitution.
SyzygyBasis syzygySearch(const ModuleData& m, int degreeCap, int paramCap = 2);

struct BuildOptions {
    int degreeCap = -1; // < 0: use the xy-degree of F
    int paramCap = 2;
    int retries = 2;          // extra rounds with degreeCap + 2 each
    int maxSubsetsPerRound = 20000;
};

// Selects generator-count many syzygies whose determinant is a constant
// multiple of F, rescales so det(d) = F, and takes h = adjugate(d).
MatrixFactorization buildMFFromModule(const ModuleData& m, const ImplicitEquation& eq,
                                      const BuildOptions& opts = {});
MatrixFactorization buildMF(const StandardBranch& b, const PlaneBranch& pb,
                            const BuildOptions& opts = {});
MatrixFactorization buildMF(const StandardBranch& b, const ProjectionPlane& L,
                            const BuildOptions& opts = {});

struct MFCheckReport {
    bool productIsF = false;        // d h = h d = F Id
    bool entriesInMaxIdeal = false; // no term of d or h is constant in x, y
    bool detUnitTimesF = false;     // det d = c F, c a nonzero rational
    std::optional<bool> columnsAreSyzygies;
    Rat detConstant;
    std::string witness; // first failing position, empty when all pass

    bool ok() const {
        return productIsF && entriesInMaxIdeal && detUnitTimesF &&
               columnsAreSyzygies.value_or(true);
    }
};

MFCheckReport verifyMF(const MatrixFactorization& mf);

struct AlgebraVerdict {
    bool isAlgebra = false;
    int pairI = -1, pairJ = -1; // first failing generator pair
    std::string product;        // g_i * g_j as a polynomial in t
    std::string witness;        // obstruction description
};

// Decides whether B = e^{-1} M is a ring, M being the span of the
// generators over the plane ring: closure holds iff g_i g_j lies in e M
// for all pairs, tested by echelon membership beyond 2 ord(e) + conductor.
AlgebraVerdict isAlgebra(const ModuleData& m, int eIndex);

struct GenericWitnessReport {
    bool generic = false;
    bool independentModM2 = false;
    bool muMatches = false;
    long muPlane = -1;
    long muBarSpace = -1;
    std::string reason;
};

// The projection presents the generic matrix factorization iff the classes
// of x(t), y(t) are independent in m/m^2 and mu of the image equals the
// generic Milnor number of the branch.
GenericWitnessReport isGenericProjectionWitness(const StandardBranch& b, const PlaneBranch& pb);

struct EquivalenceVerdict {
    enum Kind { Equivalent, Inequivalent, Inconclusive };
    Kind kind = Inconclusive;
    std::optional<PolyMatrix> phi, psi; // phi d = d' psi, both invertible at 0
    std::string certificate;
    int degreeCap = 0;
};

// Bounded-degree search for an orbit witness phi d psi^{-1} = d'. The
// screen compares corank at 0 and the quotient dimension mod (x,y)^2 of
// the cokernels; a mismatch there is a proof of inequivalence.
EquivalenceVerdict mfEquivalent(const MatrixFactorization& a, const MatrixFactorization& b,
                                int degreeCap = 1);

} // namespace cmf
