#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cmf/rat.hpp"
#include "cmf/tseries.hpp"

namespace cmf {

using VarList = std::vector<std::string>;
using Expo = std::vector<int>;

// Canonical term order: total degree first, then lexicographic on the
// exponent vector with earlier variables weighing more. Iterating a term
// map in this order yields the canonical printed form
// (e.g. y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7).
struct TermLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a > b; // within a degree, larger power of the earlier variable first
    }
};

// Sparse multivariate polynomial over Rat with an explicit, ordered variable
// context. Arithmetic requires identical contexts; use mapVars to move a
// polynomial into a larger or reordered context.
class MPoly {
public:
    explicit MPoly(VarList vars);

    static MPoly zero(const VarList& vars) { return MPoly(vars); }
    static MPoly constant(const VarList& vars, const Rat& a);
    static MPoly var(const VarList& vars, const std::string& name);
    static MPoly monomial(const VarList& vars, Expo e, const Rat& a);

    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    int varIndex(const std::string& name) const; // -1 when absent

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Rat constantValue() const; // requires isConstant()
    size_t termCount() const { return terms_.size(); }

    int totalDegree() const; // -1 for the zero polynomial
    int degreeIn(const std::string& name) const;

    const std::map<Expo, Rat, TermLess>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;
    void addTerm(Expo e, const Rat& a); // merges; drops resulting zeros

    MPoly operator-() const;
    MPoly scaled(const Rat& a) const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly pow(unsigned k) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Strict total order compatible with the canonical form (context-equal
    // polynomials only); used for deterministic tie-breaking.
    static bool canonicalLess(const MPoly& a, const MPoly& b);

    // Simultaneous substitution into the context outVars. Variables not in
    // `assign` must appear verbatim in outVars.
    MPoly substitute(const VarList& outVars, const std::map<std::string, MPoly>& assign) const;
    // Substitute constants for a subset of variables; they leave the context.
    MPoly evalPartial(const std::map<std::string, Rat>& assign) const;
    // Reinterpret in a different context; every used variable must persist.
    MPoly mapVars(const VarList& newVars) const;

    // View as a univariate polynomial in `name`: coefficient list by power,
    // each in the context without `name`.
    std::vector<MPoly> coeffsIn(const std::string& name) const;

    // Exact division; nullopt when den does not divide num.
    static std::optional<MPoly> divideExact(const MPoly& num, const MPoly& den);

    std::string str() const;

private:
    VarList vars_;
    std::map<Expo, Rat, TermLess> terms_;
};

// Conversions between univariate polynomials in t and series windows.
TSeries seriesFromPoly(const MPoly& p, const std::string& tvar, int trunc);
MPoly polyFromSeries(const TSeries& s, const VarList& vars, const std::string& tvar);

} // namespace cmf
