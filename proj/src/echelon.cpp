#include "cmf/echelon.hpp"

#include "cmf/errors.hpp"

namespace cmf {

SeriesSpan::SeriesSpan(int trunc) : trunc_(trunc) {
    if (trunc < 1) fail("BadOrder", "span window must be >= 1");
}

std::optional<int> SeriesSpan::insert(TSeries v) {
    if (v.trunc() < trunc_) fail("BadOrder", "row narrower than the span window");
    if (v.trunc() > trunc_) v = v.truncated(trunc_);
    while (true) {
        auto o = v.order();
        if (!o) return std::nullopt;
        auto it = rows_.find(*o);
        if (it == rows_.end()) {
            rows_.emplace(*o, v.scaled(v.coeff(*o).inv()));
            return *o;
        }
        v = v - it->second.scaled(v.coeff(*o));
    }
}

TSeries SeriesSpan::reduce(TSeries v) const {
    if (v.trunc() < trunc_) fail("BadOrder", "row narrower than the span window");
    if (v.trunc() > trunc_) v = v.truncated(trunc_);
    // One ascending pass suffices: cancelling a pivot at order k never
    // touches coefficients below k.
    for (int k = 0; k < trunc_; ++k) {
        if (v.coeff(k).isZero()) continue;
        auto it = rows_.find(k);
        if (it != rows_.end()) v = v - it->second.scaled(v.coeff(k));
    }
    return v;
}

std::set<int> SeriesSpan::pivotOrders() const {
    std::set<int> s;
    for (const auto& [o, r] : rows_) s.insert(o);
    return s;
}

void SeriesSpan::backReduce() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        for (auto jt = rows_.begin(); jt != rows_.end(); ++jt) {
            if (jt->first >= it->first) break;
            const Rat& c = jt->second.coeff(it->first);
            if (!c.isZero()) jt->second = jt->second - it->second.scaled(c);
        }
    }
}

EchelonResult echelonPivotOrders(const std::vector<TSeries>& rows) {
    if (rows.empty()) fail("BadOrder", "no rows given");
    int trunc = rows[0].trunc();
    for (const auto& r : rows)
        if (r.trunc() != trunc) fail("DimensionMismatch", "rows have different truncations");
    SeriesSpan span(trunc);
    for (const auto& r : rows) span.insert(r);
    span.backReduce();
    EchelonResult res;
    res.pivotOrders = span.pivotOrders();
    for (const auto& [o, row] : span.rows()) res.reducedBasis.push_back(row);
    return res;
}

} // namespace cmf
