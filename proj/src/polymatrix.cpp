#include "cmf/polymatrix.hpp"

#include <sstream>

#include "cmf/errors.hpp"

namespace cmf {

PolyMatrix::PolyMatrix(int rows, int cols, VarList vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), MPoly(vars_)) {
    if (rows < 0 || cols < 0) fail("DimensionMismatch", "negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n, const VarList& vars) {
    PolyMatrix m(n, n, vars);
    for (int i = 0; i < n; ++i) m.at(i, i) = MPoly::constant(vars, Rat(1));
    return m;
}

MPoly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail("DimensionMismatch", "matrix index out of range");
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const MPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail("DimensionMismatch", "matrix index out of range");
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || vars_ != o.vars_) fail("DimensionMismatch", "matrix product shape mismatch");
    PolyMatrix m(rows_, o.cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            MPoly acc(vars_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_)
        fail("DimensionMismatch", "matrix sum shape mismatch");
    PolyMatrix m(rows_, cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) + o.at(i, j);
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_)
        fail("DimensionMismatch", "matrix difference shape mismatch");
    PolyMatrix m(rows_, cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) - o.at(i, j);
    return m;
}

PolyMatrix PolyMatrix::scaled(const MPoly& f) const {
    PolyMatrix m(rows_, cols_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * f;
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(cols_, rows_, vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && vars_ == o.vars_ && e_ == o.e_;
}

MPoly PolyMatrix::det() const {
    if (rows_ != cols_) fail("NotSquare", "determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return MPoly::constant(vars_, Rat(1));
    std::vector<MPoly> w = e_;
    auto at = [&](int i, int j) -> MPoly& { return w[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; };
    int sign = 1;
    MPoly prev = MPoly::constant(vars_, Rat(1));
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!at(i, k).isZero()) { p = i; break; }
        if (p < 0) return MPoly(vars_); // singular
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                auto q = MPoly::divideExact(num, prev);
                if (!q) fail("VerificationFailed", "fraction-free elimination produced an inexact division");
                at(i, j) = std::move(*q);
            }
            at(i, k) = MPoly(vars_);
        }
        prev = at(k, k);
    }
    MPoly d = at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

PolyMatrix PolyMatrix::adjugate() const {
    if (rows_ != cols_) fail("NotSquare", "adjugate of a non-square matrix");
    int n = rows_;
    PolyMatrix adj(n, n, vars_);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = MPoly::constant(vars_, Rat(1));
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1, vars_);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = at(r, c);
                    ++mc;
                }
                ++mr;
            }
            MPoly m = minor.det();
            adj.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }
    return adj;
}

PolyMatrix PolyMatrix::evalPartial(const std::map<std::string, Rat>& assign) const {
    VarList outVars;
    for (const auto& v : vars_)
        if (!assign.count(v)) outVars.push_back(v);
    PolyMatrix m(rows_, cols_, outVars);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evalPartial(assign);
    return m;
}

PolyMatrix PolyMatrix::mapVars(const VarList& newVars) const {
    PolyMatrix m(rows_, cols_, newVars);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).mapVars(newVars);
    return m;
}

QMatrix PolyMatrix::constantTerms() const {
    QMatrix q(rows_, cols_);
    Expo zero(vars_.size(), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) q.at(i, j) = at(i, j).coeff(zero);
    return q;
}

bool PolyMatrix::isZero() const {
    for (const auto& p : e_)
        if (!p.isZero()) return false;
    return true;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " | ";
            os << at(i, j).str();
        }
        os << " ]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

} // namespace cmf
