#pragma once

#include <string>
#include <vector>

#include "cmf/linalg.hpp"
#include "cmf/mpoly.hpp"

namespace cmf {

// Dense matrix with MPoly entries sharing one variable context.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, VarList vars);
    static PolyMatrix identity(int n, const VarList& vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarList& vars() const { return vars_; }

    MPoly& at(int i, int j);
    const MPoly& at(int i, int j) const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const MPoly& f) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;

    // Fraction-free Bareiss elimination; every division is exact.
    MPoly det() const;
    // Transposed cofactor matrix: m * adjugate(m) = det(m) * Id.
    PolyMatrix adjugate() const;

    PolyMatrix evalPartial(const std::map<std::string, Rat>& assign) const;
    PolyMatrix mapVars(const VarList& newVars) const;
    QMatrix constantTerms() const; // every variable evaluated at 0

    bool isZero() const;
    std::string str() const;

private:
    int rows_, cols_;
    VarList vars_;
    std::vector<MPoly> e_;
};

} // namespace cmf
