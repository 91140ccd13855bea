#include "cmf/branch.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cmf/errors.hpp"

namespace cmf {

Branch Branch::fromCoords(std::vector<MPoly> coords, std::vector<std::string> params, int trunc, bool exact) {
    Branch b;
    b.params = std::move(params);
    b.tvars = VarList{"t"};
    for (const auto& p : b.params) b.tvars.push_back(p);
    b.coords = std::move(coords);
    for (auto& c : b.coords)
        if (c.vars() != b.tvars) c = c.mapVars(b.tvars);
    b.trunc = trunc;
    b.exact = exact;
    b.validate();
    return b;
}

TSeries Branch::coordSeriesAtZero(int i, int window) const {
    std::map<std::string, Rat> zero;
    for (const auto& p : params) zero.emplace(p, Rat(0));
    MPoly c = coords[static_cast<size_t>(i)].evalPartial(zero);
    return seriesFromPoly(c, "t", window);
}

std::vector<int> Branch::ordersAtZero() const {
    std::vector<int> ords;
    for (int i = 0; i < dim(); ++i) {
        // Exact coordinates expose their full support; otherwise use the window.
        int window = std::max(trunc, 1);
        if (exact) {
            int d = coords[static_cast<size_t>(i)].degreeIn("t");
            window = std::max(window, d + 2);
        }
        auto o = coordSeriesAtZero(i, window).order();
        if (!o)
            fail("InvalidBranch", "coordinate " + std::to_string(i + 1) + " vanishes at the parameter origin");
        ords.push_back(*o);
    }
    return ords;
}

std::set<int> Branch::supportAtZero() const {
    std::set<int> s;
    for (int i = 0; i < dim(); ++i) {
        int window = std::max(trunc, 1);
        if (exact) {
            int d = coords[static_cast<size_t>(i)].degreeIn("t");
            window = std::max(window, d + 2);
        }
        TSeries c = coordSeriesAtZero(i, window);
        for (int k = 0; k < c.trunc(); ++k)
            if (!c.coeff(k).isZero()) s.insert(k);
    }
    return s;
}

Branch Branch::specialized(const std::map<std::string, Rat>& assign) const {
    for (const auto& p : params)
        if (!assign.count(p)) fail("MissingParameter", "no value for parameter '" + p + "'");
    Branch b;
    b.tvars = VarList{"t"};
    b.params = {};
    b.trunc = trunc;
    b.exact = exact;
    for (const auto& c : coords) b.coords.push_back(c.evalPartial(assign));
    b.validate();
    return b;
}

void Branch::validate() const {
    if (dim() < 2) fail("InvalidBranch", "a branch needs at least two coordinates");
    if (trunc < 2) fail("InvalidBranch", "working truncation must be at least 2");
    for (int i = 0; i < dim(); ++i) {
        const MPoly& c = coords[static_cast<size_t>(i)];
        if (c.vars() != tvars) fail("InvalidBranch", "coordinate context mismatch");
        Expo constant(tvars.size(), 0);
        if (!c.coeff(constant).isZero())
            fail("InvalidBranch", "coordinate " + std::to_string(i + 1) + " has a constant term");
    }
    std::vector<int> ords = ordersAtZero(); // also rejects vanishing coordinates
    (void)ords;
    std::set<int> sup = supportAtZero();
    int g = 0;
    for (int k : sup) g = std::gcd(g, k);
    if (g != 1)
        fail("InvalidBranch", "t-exponent gcd is " + std::to_string(g) + "; the parametrization is not primitive");
}

std::vector<Rat> StandardBranch::supportColumn(int j) const {
    std::vector<Rat> col;
    for (int i = 1; i < dim(); ++i) {
        int window = std::max(br.trunc, j + 2);
        if (!br.exact && j >= br.trunc)
            fail("TruncationTooSmall", "support query beyond the window of an inexact branch");
        col.push_back(br.coordSeriesAtZero(i, window).coeff(j));
    }
    return col;
}

std::set<int> StandardBranch::secondarySupport() const {
    std::set<int> s;
    for (int i = 1; i < dim(); ++i) {
        int window = std::max(br.trunc, 2);
        if (br.exact) {
            int d = br.coords[static_cast<size_t>(i)].degreeIn("t");
            window = std::max(window, d + 2);
        }
        TSeries c = br.coordSeriesAtZero(i, window);
        for (int k = 0; k < c.trunc(); ++k)
            if (!c.coeff(k).isZero()) s.insert(k);
    }
    return s;
}

// Replaces t by the given series inside one coordinate, one parameter
// monomial at a time. The result is only known modulo t^window.
static MPoly substituteUniformizer(const MPoly& coord, const TSeries& rev, const VarList& tvars, int window) {
    // Split into per-parameter-monomial univariate parts.
    std::map<Expo, TSeries> parts; // parameter exponents (without t) -> t-series
    size_t nv = tvars.size();
    for (const auto& [e, c] : coord.terms()) {
        Expo pe(e.begin() + 1, e.end());
        auto [it, fresh] = parts.try_emplace(pe, TSeries::zero(window));
        int k = e[0];
        if (k < window) {
            TSeries s = it->second;
            s.setCoeff(k, s.coeff(k) + c);
            it->second = s;
        }
        (void)fresh;
        (void)nv;
    }
    MPoly out(tvars);
    for (const auto& [pe, ser] : parts) {
        TSeries composed = ser.compose(rev);
        for (int k = 0; k < std::min(window, composed.trunc()); ++k) {
            if (composed.coeff(k).isZero()) continue;
            Expo e;
            e.reserve(tvars.size());
            e.push_back(k);
            e.insert(e.end(), pe.begin(), pe.end());
            out.addTerm(std::move(e), composed.coeff(k));
        }
    }
    return out;
}

StandardBranch standardize(const Branch& input) {
    Branch b = input;
    b.validate();
    std::vector<std::string> log;

    std::vector<int> ords = b.ordersAtZero();
    int e = *std::min_element(ords.begin(), ords.end());
    int lead = static_cast<int>(std::min_element(ords.begin(), ords.end()) - ords.begin());
    if (lead != 0) {
        std::swap(b.coords[0], b.coords[static_cast<size_t>(lead)]);
        log.push_back("swapped coordinates 1 and " + std::to_string(lead + 1));
    }

    // The lowest coefficient of the leading coordinate must not involve
    // parameters: scaling must stay in the scalar field.
    {
        std::vector<MPoly> tparts = b.coords[0].coeffsIn("t");
        if (static_cast<int>(tparts.size()) <= e)
            fail("InvalidBranch", "leading coordinate lost its lowest term");
        const MPoly& lc = tparts[static_cast<size_t>(e)];
        if (!lc.isConstant())
            fail("FamilyStandardizationUnsupported",
                 "lowest coefficient of the leading coordinate depends on parameters");
        Rat c = lc.constantValue();
        if (!c.isOne()) {
            b.coords[0] = b.coords[0].scaled(c.inv());
            log.push_back("scaled coordinate 1 by " + c.inv().str());
        }
    }

    // Uniformizer substitution unless the leading coordinate is already t^e.
    bool leadIsMonomial = (b.coords[0].termCount() == 1);
    if (!leadIsMonomial) {
        bool leadParamFree = true;
        for (const auto& [ex, c] : b.coords[0].terms())
            for (size_t i = 1; i < ex.size(); ++i)
                if (ex[i] != 0) leadParamFree = false;
        if (!leadParamFree)
            fail("FamilyStandardizationUnsupported",
                 "uniformizer substitution requires a parameter-free leading coordinate");
        // Exact coordinates extend soundly past the window; for inexact data
        // the root-and-shift costs e-1 certified coefficients.
        TSeries x1 = b.coordSeriesAtZero(0, b.exact ? b.trunc + e - 1 : b.trunc);
        // u = t * (x1 / t^e)^(1/e), then every coordinate is composed with
        // the compositional inverse of u. The shifted-down unit has constant
        // term 1 after the scaling above.
        TSeries u = x1.shiftDown(e).rootOfUnit(e).shiftUp(1);
        int window = std::min(u.trunc(), b.trunc);
        u = u.truncated(window);
        TSeries rev = u.reverse();
        std::vector<MPoly> newCoords;
        for (int i = 0; i < b.dim(); ++i)
            newCoords.push_back(substituteUniformizer(b.coords[static_cast<size_t>(i)], rev, b.tvars, window));
        b.coords = std::move(newCoords);
        b.exact = false;
        b.trunc = window;
        log.push_back("uniformizer substitution through the compositional inverse of u = t*(x1/t^e)^(1/" + std::to_string(e) + ")");
        // The leading coordinate is now exactly t^e; rebuild it without
        // numerical debris below the window.
        MPoly te(b.tvars);
        Expo ee(b.tvars.size(), 0);
        ee[0] = e;
        te.addTerm(std::move(ee), Rat(1));
        TSeries check = b.coordSeriesAtZero(0, window);
        TSeries target = TSeries::monomial(e, Rat(1), window);
        if (check != target)
            fail("VerificationFailed", "uniformizer substitution did not normalize the leading coordinate");
        b.coords[0] = te;
    }

    // Shear away the t^e terms of the secondary coordinates. The factor may
    // involve parameters; the leading coordinate is the pure monomial t^e.
    for (int i = 1; i < b.dim(); ++i) {
        std::vector<MPoly> tparts = b.coords[static_cast<size_t>(i)].coeffsIn("t");
        if (static_cast<int>(tparts.size()) <= e) continue;
        MPoly lam = tparts[static_cast<size_t>(e)]; // context without t
        if (lam.isZero()) continue;
        MPoly lamFull = lam.mapVars(b.tvars);
        b.coords[static_cast<size_t>(i)] = b.coords[static_cast<size_t>(i)] - lamFull * b.coords[0];
        log.push_back("sheared coordinate " + std::to_string(i + 1) + " by (" + lam.str() + ") * coordinate 1");
        if (b.coords[static_cast<size_t>(i)].isZero())
            fail("InvalidBranch", "coordinate " + std::to_string(i + 1) + " is a multiple of the leading coordinate");
    }

    b.validate();
    StandardBranch sb;
    sb.br = std::move(b);
    sb.e = e;
    sb.transformLog = std::move(log);

    std::vector<int> newOrds = sb.br.ordersAtZero();
    for (int i = 1; i < sb.dim(); ++i)
        if (newOrds[static_cast<size_t>(i)] <= e)
            fail("VerificationFailed", "secondary coordinate order did not exceed the multiplicity");
    return sb;
}

} // namespace cmf
