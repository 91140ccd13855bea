#include "cmf/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cmf/errors.hpp"

namespace cmf {

MPoly::MPoly(VarList vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(const VarList& vars, const Rat& a) {
    MPoly p(vars);
    p.addTerm(Expo(vars.size(), 0), a);
    return p;
}

MPoly MPoly::var(const VarList& vars, const std::string& name) {
    MPoly p(vars);
    int i = p.varIndex(name);
    if (i < 0) fail("UnknownVariable", "variable '" + name + "' not in context");
    Expo e(vars.size(), 0);
    e[static_cast<size_t>(i)] = 1;
    p.addTerm(std::move(e), Rat(1));
    return p;
}

MPoly MPoly::monomial(const VarList& vars, Expo e, const Rat& a) {
    if (e.size() != vars.size()) fail("DimensionMismatch", "exponent vector length mismatch");
    MPoly p(vars);
    p.addTerm(std::move(e), a);
    return p;
}

int MPoly::varIndex(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool MPoly::isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat MPoly::constantValue() const {
    if (terms_.empty()) return Rat(0);
    if (!isConstant()) fail("DimensionMismatch", "polynomial is not constant");
    return terms_.begin()->second;
}

int MPoly::totalDegree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.rbegin()->first; // canonical order puts the top degree last
    return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degreeIn(const std::string& name) const {
    int i = varIndex(name);
    if (i < 0) fail("UnknownVariable", "variable '" + name + "' not in context");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(i)]);
    return d;
}

Rat MPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::addTerm(Expo e, const Rat& a) {
    if (e.size() != vars_.size()) fail("DimensionMismatch", "exponent vector length mismatch");
    for (int k : e)
        if (k < 0) fail("BadOrder", "negative exponent");
    if (a.isZero()) return;
    auto [it, inserted] = terms_.emplace(std::move(e), a);
    if (!inserted) {
        it->second += a;
        if (it->second.isZero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly MPoly::scaled(const Rat& a) const {
    MPoly p(vars_);
    if (a.isZero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * a);
    return p;
}

static void requireSameContext(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars()) fail("DimensionMismatch", "polynomial contexts differ");
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    requireSameContext(a, b);
    MPoly p = a;
    for (const auto& [e, c] : b.terms()) p.addTerm(e, c);
    return p;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    requireSameContext(a, b);
    MPoly p = a;
    for (const auto& [e, c] : b.terms()) p.addTerm(e, -c);
    return p;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    requireSameContext(a, b);
    MPoly p(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.addTerm(std::move(e), ca * cb);
        }
    return p;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = MPoly::constant(vars_, Rat(1));
    MPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        if (k >>= 1u) base = base * base;
    }
    return r;
}

bool MPoly::canonicalLess(const MPoly& a, const MPoly& b) {
    requireSameContext(a, b);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    TermLess lt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return true;
        if (lt(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

MPoly MPoly::substitute(const VarList& outVars, const std::map<std::string, MPoly>& assign) const {
    // Per-variable images in the output context.
    std::vector<MPoly> image;
    image.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assign.find(v);
        if (it != assign.end()) {
            if (it->second.vars() != outVars)
                fail("DimensionMismatch", "substitution image for '" + v + "' has wrong context");
            image.push_back(it->second);
        } else {
            image.push_back(MPoly::var(outVars, v)); // throws UnknownVariable when absent
        }
    }
    // Memoized powers, one ladder per variable.
    std::vector<std::vector<MPoly>> powers(vars_.size());
    auto powerOf = [&](size_t i, int k) -> const MPoly& {
        auto& ladder = powers[i];
        if (ladder.empty()) ladder.push_back(MPoly::constant(outVars, Rat(1)));
        while (static_cast<int>(ladder.size()) <= k) ladder.push_back(ladder.back() * image[i]);
        return ladder[static_cast<size_t>(k)];
    };
    MPoly acc(outVars);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(outVars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * powerOf(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::evalPartial(const std::map<std::string, Rat>& assign) const {
    VarList outVars;
    for (const auto& v : vars_)
        if (!assign.count(v)) outVars.push_back(v);
    std::map<std::string, MPoly> polyAssign;
    for (const auto& [name, val] : assign)
        if (varIndex(name) >= 0) polyAssign.emplace(name, MPoly::constant(outVars, val));
    return substitute(outVars, polyAssign);
}

MPoly MPoly::mapVars(const VarList& newVars) const {
    MPoly p(newVars);
    std::vector<int> target(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (size_t j = 0; j < newVars.size(); ++j)
            if (newVars[j] == vars_[i]) { target[i] = static_cast<int>(j); break; }
    }
    for (const auto& [e, c] : terms_) {
        Expo ne(newVars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] < 0)
                fail("UnknownVariable", "variable '" + vars_[i] + "' dropped while still in use");
            ne[static_cast<size_t>(target[i])] = e[i];
        }
        p.addTerm(std::move(ne), c);
    }
    return p;
}

std::vector<MPoly> MPoly::coeffsIn(const std::string& name) const {
    int i = varIndex(name);
    if (i < 0) fail("UnknownVariable", "variable '" + name + "' not in context");
    VarList rest;
    for (const auto& v : vars_)
        if (v != name) rest.push_back(v);
    int d = std::max(0, degreeIn(name));
    std::vector<MPoly> out(static_cast<size_t>(d) + 1, MPoly(rest));
    for (const auto& [e, c] : terms_) {
        Expo re;
        re.reserve(rest.size());
        for (size_t k = 0; k < e.size(); ++k)
            if (static_cast<int>(k) != i) re.push_back(e[k]);
        out[static_cast<size_t>(e[static_cast<size_t>(i)])].addTerm(std::move(re), c);
    }
    return out;
}

std::optional<MPoly> MPoly::divideExact(const MPoly& num, const MPoly& den) {
    requireSameContext(num, den);
    if (den.isZero()) fail("DivisionByZero", "polynomial division by zero");
    MPoly q(num.vars());
    MPoly r = num;
    const auto& dlead = *den.terms_.rbegin(); // leading term in canonical order
    while (!r.isZero()) {
        const auto& rlead = *r.terms_.rbegin();
        Expo e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rat c = rlead.second / dlead.second;
        MPoly m = MPoly::monomial(num.vars(), std::move(e), c);
        q = q + m;
        r = r - m * den;
    }
    return q;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = first ? c : abs(c);
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        bool anyVar = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        if (!anyVar) {
            os << mag.str();
        } else {
            bool printedCoeff = false;
            if (!mag.isOne()) {
                if (mag == Rat(-1) && first) { os << "-"; }
                else { os << mag.str(); printedCoeff = true; }
            }
            bool firstVar = true;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printedCoeff || !firstVar) os << "*";
                os << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                printedCoeff = true;
                firstVar = false;
            }
        }
        first = false;
    }
    return os.str();
}

TSeries seriesFromPoly(const MPoly& p, const std::string& tvar, int trunc) {
    TSeries s(trunc);
    int ti = p.varIndex(tvar);
    if (ti < 0) fail("UnknownVariable", "variable '" + tvar + "' not in context");
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != ti && e[i] != 0)
                fail("DimensionMismatch", "polynomial is not univariate in '" + tvar + "'");
        int k = e[static_cast<size_t>(ti)];
        if (k < trunc) s.setCoeff(k, c);
    }
    return s;
}

MPoly polyFromSeries(const TSeries& s, const VarList& vars, const std::string& tvar) {
    MPoly p(vars);
    int ti = p.varIndex(tvar);
    if (ti < 0) fail("UnknownVariable", "variable '" + tvar + "' not in context");
    for (int k = 0; k < s.trunc(); ++k) {
        if (s.coeff(k).isZero()) continue;
        Expo e(vars.size(), 0);
        e[static_cast<size_t>(ti)] = k;
        p.addTerm(std::move(e), s.coeff(k));
    }
    return p;
}

} // namespace cmf
