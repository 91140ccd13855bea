#pragma once

#include <set>
#include <string>
#include <vector>

#include "cmf/mpoly.hpp"
#include "cmf/tseries.hpp"

namespace cmf {

// Parametrized space curve germ: n >= 2 coordinates, each a polynomial in
// the local parameter t and optional deformation parameters. At the
// parameter origin every coordinate must have t-order >= 1 and the gcd of
// all occurring t-exponents must be 1 (the parametrization is primitive).
struct Branch {
    VarList tvars;                // "t" followed by the parameter names
    std::vector<std::string> params;
    std::vector<MPoly> coords;    // context tvars
    int trunc = 0;                // working window for series extraction
    bool exact = true;            // coordinates are the exact parametrization

    static Branch fromCoords(std::vector<MPoly> coords, std::vector<std::string> params, int trunc, bool exact = true);

    int dim() const { return static_cast<int>(coords.size()); }
    bool hasParams() const { return !params.empty(); }

    // Coordinate i at the parameter origin, as a series window.
    TSeries coordSeriesAtZero(int i, int window) const;
    // t-orders at the parameter origin; fails if a coordinate vanishes there.
    std::vector<int> ordersAtZero() const;
    // All t-exponents with a nonzero coefficient at the parameter origin.
    std::set<int> supportAtZero() const;

    Branch specialized(const std::map<std::string, Rat>& assign) const;

    void validate() const;
};

// Standard form: coords[0] == t^e exactly, every other coordinate of
// t-order > e at the parameter origin.
struct StandardBranch {
    Branch br;
    int e = 0;
    std::vector<std::string> transformLog;

    int dim() const { return br.dim(); }
    // Coefficient column (coords 1..n-1) at t-exponent j, parameter origin.
    std::vector<Rat> supportColumn(int j) const;
    // Exponents j > e carrying a nonzero coefficient in some secondary
    // coordinate (parameter origin). For exact branches this is the full
    // support; otherwise it stops at the window.
    std::set<int> secondarySupport() const;
};

// Permutation, scaling, uniformizer substitution and shear to standard
// form. The uniformizer step requires the minimal-order coordinate to be
// parameter-free; its lowest coefficient must always be parameter-free.
StandardBranch standardize(const Branch& b);

inline int multiplicity(const StandardBranch& b) { return b.e; }

} // namespace cmf
