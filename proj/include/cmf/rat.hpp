#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "cmf/errors.hpp"

namespace cmf {

// Exact rational scalar. Invariant: always in lowest terms with positive
// denominator (maintained by the underlying mpq_class canonical form).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading minus.
    static Rat parse(const std::string& s) {
        try {
            mpq_class q(s);
            q.canonicalize();
            return Rat(q);
        } catch (const std::invalid_argument&) {
            fail("SyntaxError", "cannot parse rational '" + s + "'");
        }
    }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool isInteger() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.isZero()) fail("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (isZero()) fail("DivisionByZero", "inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline Rat pow(const Rat& a, unsigned k) {
    Rat r(1), base = a;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

} // namespace cmf
