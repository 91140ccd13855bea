#include "cmf/tseries.hpp"

#include <algorithm>
#include <sstream>

#include "cmf/errors.hpp"

namespace cmf {

TSeries::TSeries(int trunc) {
    if (trunc < 1) fail("BadOrder", "series truncation must be >= 1");
    c_.assign(static_cast<size_t>(trunc), Rat(0));
}

TSeries TSeries::constant(const Rat& a, int trunc) {
    TSeries s(trunc);
    s.c_[0] = a;
    return s;
}

TSeries TSeries::monomial(int k, const Rat& a, int trunc) {
    if (k < 0) fail("BadOrder", "negative exponent in series monomial");
    TSeries s(trunc);
    if (k < trunc) s.c_[static_cast<size_t>(k)] = a;
    return s;
}

TSeries TSeries::fromCoeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) fail("BadOrder", "series needs at least one coefficient");
    TSeries s(static_cast<int>(coeffs.size()));
    s.c_ = std::move(coeffs);
    return s;
}

const Rat& TSeries::coeff(int k) const {
    if (k < 0 || k >= trunc()) fail("BadOrder", "series coefficient index out of window");
    return c_[static_cast<size_t>(k)];
}

void TSeries::setCoeff(int k, const Rat& a) {
    if (k < 0 || k >= trunc()) fail("BadOrder", "series coefficient index out of window");
    c_[static_cast<size_t>(k)] = a;
}

std::optional<int> TSeries::order() const {
    for (int k = 0; k < trunc(); ++k)
        if (!c_[static_cast<size_t>(k)].isZero()) return k;
    return std::nullopt;
}

TSeries TSeries::truncated(int n) const {
    if (n < 1 || n > trunc()) fail("BadOrder", "invalid truncation request");
    TSeries s(n);
    std::copy(c_.begin(), c_.begin() + n, s.c_.begin());
    return s;
}

TSeries TSeries::extendedExact(int n) const {
    if (n < trunc()) return truncated(n);
    TSeries s(n);
    std::copy(c_.begin(), c_.end(), s.c_.begin());
    return s;
}

TSeries TSeries::scaled(const Rat& a) const {
    TSeries s(trunc());
    for (int k = 0; k < trunc(); ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * a;
    return s;
}

TSeries TSeries::shiftUp(int k) const {
    if (k < 0) fail("BadOrder", "negative shift");
    TSeries s(trunc() + k);
    for (int i = 0; i < trunc(); ++i) s.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    return s;
}

TSeries TSeries::shiftDown(int k) const {
    if (k < 0 || k >= trunc()) fail("BadOrder", "invalid downward shift");
    for (int i = 0; i < k; ++i)
        if (!c_[static_cast<size_t>(i)].isZero())
            fail("BadOrder", "shiftDown would truncate a nonzero coefficient");
    TSeries s(trunc() - k);
    for (int i = k; i < trunc(); ++i) s.c_[static_cast<size_t>(i - k)] = c_[static_cast<size_t>(i)];
    return s;
}

TSeries TSeries::operator-() const { return scaled(Rat(-1)); }

TSeries operator+(const TSeries& a, const TSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    TSeries s(n);
    for (int k = 0; k < n; ++k) s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
    return s;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    TSeries s(n);
    for (int k = 0; k < n; ++k) s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] - b.c_[static_cast<size_t>(k)];
    return s;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    TSeries s(n);
    for (int i = 0; i < n; ++i) {
        const Rat& ai = a.c_[static_cast<size_t>(i)];
        if (ai.isZero()) continue;
        for (int j = 0; i + j < n; ++j) {
            const Rat& bj = b.c_[static_cast<size_t>(j)];
            if (bj.isZero()) continue;
            s.c_[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return s;
}

TSeries TSeries::inverseUnit() const {
    if (c_[0].isZero()) fail("NonUnitInput", "series inverse requires a nonzero constant term");
    int n = trunc();
    // w <- w (2 - a w), doubling the number of correct coefficients.
    TSeries w = TSeries::constant(c_[0].inv(), n);
    TSeries two = TSeries::constant(Rat(2), n);
    for (int prec = 1; prec < n; prec *= 2)
        w = w * (two - (*this) * w);
    return w;
}

TSeries TSeries::rootOfUnit(int e) const {
    if (e < 1) fail("BadOrder", "root index must be positive");
    if (!c_[0].isOne()) fail("NonUnitInput", "e-th root requires constant term 1");
    int n = trunc();
    if (e == 1) return *this;
    // v approximates u^(-1/e): v <- v + v (1 - u v^e)/e; then root = u v^(e-1).
    TSeries v = TSeries::constant(Rat(1), n);
    TSeries one = TSeries::constant(Rat(1), n);
    Rat invE = Rat(1, static_cast<long>(e));
    for (int prec = 1; prec < n; prec *= 2) {
        TSeries ve = v;
        for (int k = 1; k < e; ++k) ve = ve * v;
        v = v + (v * (one - (*this) * ve)).scaled(invE);
    }
    TSeries vem1 = TSeries::constant(Rat(1), n);
    for (int k = 1; k < e; ++k) vem1 = vem1 * v;
    return (*this) * vem1;
}

TSeries TSeries::compose(const TSeries& g) const {
    auto og = g.order();
    if (!og || *og < 1) fail("BadOrder", "composition requires the inner series to have order >= 1");
    int r = *og;
    auto of = order();
    int ofv = of ? *of : trunc();
    long bound1 = static_cast<long>(trunc()) * r;
    long bound2 = static_cast<long>(g.trunc()) + static_cast<long>(std::max(ofv, 1) - 1) * r;
    int n = static_cast<int>(std::min(bound1, bound2));
    if (n < 1) n = 1;
    TSeries gw = g.trunc() >= n ? g.truncated(n) : g.extendedExact(n); // g.trunc() >= n by the bound above
    TSeries acc = TSeries::constant(c_[static_cast<size_t>(trunc() - 1)], n);
    for (int k = trunc() - 2; k >= 0; --k)
        acc = acc * gw + TSeries::constant(c_[static_cast<size_t>(k)], n);
    return acc;
}

TSeries TSeries::reverse() const {
    auto o = order();
    if (!o || *o != 1) fail("BadOrder", "compositional inverse requires order exactly 1");
    int n = trunc();
    if (n == 1) fail("BadOrder", "cannot invert a series known only modulo t");
    // Newton: g <- g - (f(g) - t) / f'(g), doubling precision.
    TSeries g = TSeries::monomial(1, c_[1].inv(), 2);
    int prec = 2;
    while (true) {
        int next = std::min(2 * prec, n);
        TSeries fw = truncated(next);
        TSeries gw = g.extendedExact(next); // correct modulo t^prec, padded as a candidate
        TSeries err = fw.compose(gw).extendedExact(next) - TSeries::identity(next);
        TSeries fpg = fw.derivative().extendedExact(next).compose(gw).extendedExact(next);
        g = gw - err * fpg.inverseUnit();
        prec = next;
        if (prec >= n) break;
    }
    return g.extendedExact(n);
}

TSeries TSeries::derivative() const {
    int n = std::max(1, trunc() - 1);
    TSeries s(n);
    for (int k = 1; k < trunc(); ++k)
        if (k - 1 < n) s.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Rat(k);
    return s;
}

std::string TSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < trunc(); ++k) {
        const Rat& a = c_[static_cast<size_t>(k)];
        if (a.isZero()) continue;
        Rat mag = first ? a : abs(a);
        if (!first) os << (a.sign() < 0 ? " - " : " + ");
        if (k == 0) {
            os << mag.str();
        } else {
            if (!mag.isOne()) os << mag.str() << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << trunc() << ")";
    return os.str();
}

} // namespace cmf
