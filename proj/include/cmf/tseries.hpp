#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmf/rat.hpp"

namespace cmf {

// Truncated power series in one local parameter t over Rat.
//
// Stores the coefficients of t^0 .. t^(trunc-1); nothing is known about the
// tail from t^trunc on. trunc >= 1 always. Arithmetic propagates the
// tightest provable truncation:
//   add/sub:   min(a.trunc, b.trunc)
//   mul:       min(a.trunc, b.trunc)
//   shiftUp k: trunc + k        (multiplication by t^k)
//   shiftDown: trunc - k        (requires the first k coefficients to vanish)
//   inverse / e-th root: trunc preserved
//   compose f(g), ord(g) = r >= 1:
//       min(f.trunc * r, g.trunc + (max(ord f, 1) - 1) * r)
//   reverse:   trunc preserved
class TSeries {
public:
    explicit TSeries(int trunc);

    static TSeries zero(int trunc) { return TSeries(trunc); }
    static TSeries constant(const Rat& a, int trunc);
    static TSeries monomial(int k, const Rat& a, int trunc); // a * t^k
    static TSeries identity(int trunc) { return monomial(1, Rat(1), trunc); }
    static TSeries fromCoeffs(std::vector<Rat> coeffs);

    int trunc() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int k) const;
    void setCoeff(int k, const Rat& a);

    // Least exponent with nonzero coefficient; nullopt when every stored
    // coefficient vanishes (the series is zero modulo t^trunc).
    std::optional<int> order() const;
    bool isZeroWindow() const { return !order().has_value(); }

    TSeries truncated(int n) const;     // n <= trunc
    TSeries extendedExact(int n) const; // zero-pads; only valid for exact polynomial data

    TSeries scaled(const Rat& a) const;
    TSeries shiftUp(int k) const;
    TSeries shiftDown(int k) const;

    TSeries operator-() const;
    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend TSeries operator*(const TSeries& a, const TSeries& b);

    // Newton iteration; requires a unit (nonzero constant term).
    TSeries inverseUnit() const;
    // e-th root with constant term 1; requires constant term exactly 1.
    TSeries rootOfUnit(int e) const;
    // Substitution f(g); requires ord(g) >= 1.
    TSeries compose(const TSeries& g) const;
    // Compositional inverse; requires ord == 1.
    TSeries reverse() const;
    TSeries derivative() const;

    bool operator==(const TSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TSeries& o) const { return !(*this == o); }

    // "2*t^3 - 1/2*t^5 + O(t^8)"
    std::string str() const;

private:
    std::vector<Rat> c_;
};

} // namespace cmf
