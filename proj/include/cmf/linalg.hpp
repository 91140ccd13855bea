#pragma once

#include <optional>
#include <vector>

#include "cmf/rat.hpp"

namespace cmf {

struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
};

// Reduced row echelon form in place; returns the pivot columns in order.
// Forward elimination is fraction-free (Bareiss) on integer-scaled rows;
// back-substitution happens on the already-triangular system. Pivot choice
// is the first nonzero entry scanning top-down, so the result is
// deterministic for a given input.
std::vector<int> rrefInPlace(QMatrix& m);

int rankOf(QMatrix m);

// Basis of the right nullspace, one vector per non-pivot column in
// ascending column order, normalized with a 1 in the free coordinate.
std::vector<std::vector<Rat>> nullspaceBasis(const QMatrix& m);

Rat detOf(QMatrix m); // square only

// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverseOf(const QMatrix& m);

} // namespace cmf
