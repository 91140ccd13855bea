#pragma once

#include <map>
#include <set>
#include <vector>

#include "cmf/tseries.hpp"

namespace cmf {

// Row echelon span of series under the t-order filtration. Rows are kept
// with leading coefficient 1, one row per pivot order. Reduction respects
// the shared truncation window: statements about membership are only valid
// below a caller-supplied soundness bound.
class SeriesSpan {
public:
    explicit SeriesSpan(int trunc);

    int trunc() const { return trunc_; }
    size_t size() const { return rows_.size(); }

    // Reduces v against the rows and, if a new pivot appears, stores it.
    // Returns the new pivot order, or nullopt when v reduced to the zero
    // window.
    std::optional<int> insert(TSeries v);

    // Fully reduced representative of v modulo the span.
    TSeries reduce(TSeries v) const;

    bool hasPivot(int order) const { return rows_.count(order) > 0; }
    std::set<int> pivotOrders() const;
    const std::map<int, TSeries>& rows() const { return rows_; }

    // Eliminates every pivot order from the other rows, yielding the unique
    // reduced triangular basis of the span (given the window).
    void backReduce();

private:
    int trunc_;
    std::map<int, TSeries> rows_;
};

struct EchelonResult {
    std::set<int> pivotOrders;
    std::vector<TSeries> reducedBasis; // ascending pivot order, back-reduced
};

// Triangularizes the given rows (all with the same truncation).
EchelonResult echelonPivotOrders(const std::vector<TSeries>& rows);

} // namespace cmf
