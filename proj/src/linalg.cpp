#include "cmf/linalg.hpp"

#include "cmf/errors.hpp"

namespace cmf {

// Clear denominators row by row so the Bareiss recurrence stays integral.
static void scaleRowsToIntegers(QMatrix& m) {
    for (int i = 0; i < m.rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols; ++j) {
            mpz_class d = m.at(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        if (l != 1) {
            Rat f{mpz_class(l)};
            for (int j = 0; j < m.cols; ++j) m.at(i, j) *= f;
        }
    }
}

// Fraction-free forward elimination. Returns pivot (row, col) pairs and the
// permutation sign; entries below each pivot end up zero.
static std::vector<std::pair<int, int>> bareissForward(QMatrix& m, int& sign) {
    std::vector<std::pair<int, int>> pivots;
    sign = 1;
    Rat prev(1);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).isZero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            sign = -sign;
        }
        const Rat pivot = m.at(r, c);
        for (int i = r + 1; i < m.rows; ++i) {
            const Rat mic = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - mic * m.at(r, j)) / prev;
            m.at(i, c) = Rat(0);
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

std::vector<int> rrefInPlace(QMatrix& m) {
    scaleRowsToIntegers(m);
    int sign = 0;
    auto pivots = bareissForward(m, sign);
    // Rational back-substitution on the triangular system.
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
        auto [r, c] = pivots[static_cast<size_t>(k)];
        Rat inv = m.at(r, c).inv();
        for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            Rat f = m.at(i, c);
            if (f.isZero()) continue;
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
    }
    std::vector<int> pivotCols;
    pivotCols.reserve(pivots.size());
    for (auto& [r, c] : pivots) pivotCols.push_back(c);
    return pivotCols;
}

int rankOf(QMatrix m) {
    scaleRowsToIntegers(m);
    int sign = 0;
    return static_cast<int>(bareissForward(m, sign).size());
}

std::vector<std::vector<Rat>> nullspaceBasis(const QMatrix& m) {
    QMatrix w = m;
    std::vector<int> pivotCols = rrefInPlace(w);
    std::vector<bool> isPivot(static_cast<size_t>(m.cols), false);
    for (int c : pivotCols) isPivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (isPivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols), Rat(0));
        v[static_cast<size_t>(f)] = Rat(1);
        for (size_t k = 0; k < pivotCols.size(); ++k)
            v[static_cast<size_t>(pivotCols[k])] = -w.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat detOf(QMatrix m) {
    if (m.rows != m.cols) fail("NotSquare", "determinant of a non-square matrix");
    if (m.rows == 0) return Rat(1);
    // Track the row scalings so the determinant refers to the original matrix.
    Rat scale(1);
    for (int i = 0; i < m.rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols; ++j) {
            mpz_class d = m.at(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        if (l != 1) {
            Rat f{mpz_class(l)};
            for (int j = 0; j < m.cols; ++j) m.at(i, j) *= f;
            scale *= f;
        }
    }
    int sign = 0;
    auto pivots = bareissForward(m, sign);
    if (static_cast<int>(pivots.size()) < m.rows) return Rat(0);
    // After full Bareiss elimination the last pivot equals the determinant
    // of the integer-scaled matrix.
    Rat d = m.at(m.rows - 1, m.cols - 1);
    if (sign < 0) d = -d;
    return d / scale;
}

std::optional<QMatrix> inverseOf(const QMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    auto pivots = rrefInPlace(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] >= n)
        return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace cmf
