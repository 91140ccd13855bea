#include "cmf/projection.hpp"

#include <algorithm>
#include <numeric>

#include "cmf/errors.hpp"
#include "cmf/resultant.hpp"

namespace cmf {

TSeries PlaneBranch::xSeriesAtZero(int window) const {
    std::map<std::string, Rat> zero;
    for (const auto& p : params) zero.emplace(p, Rat(0));
    return seriesFromPoly(x.evalPartial(zero), "t", window);
}

TSeries PlaneBranch::ySeriesAtZero(int window) const {
    std::map<std::string, Rat> zero;
    for (const auto& p : params) zero.emplace(p, Rat(0));
    return seriesFromPoly(y.evalPartial(zero), "t", window);
}

Branch PlaneBranch::asBranch() const {
    Branch b;
    b.tvars = tvars;
    b.params = params;
    b.coords = {x, y};
    b.trunc = trunc;
    b.exact = exact;
    b.validate();
    return b;
}

PlaneBranch project(const StandardBranch& b, const ProjectionPlane& L,
                    const std::vector<FamilyPerturbation>& family, bool force) {
    if (L.n() != b.dim())
        fail("DimensionMismatch", "projection plane lives in the wrong dimension");
    if (!force) {
        SecantCone cone = secantCone(b);
        if (!isTransversal(cone, L))
            fail("NonTransversal", "plane " + L.str() + " meets the secant cone");
    }

    std::vector<std::string> params = b.br.params;
    for (const auto& f : family) {
        if (f.form < 0 || f.form > 1 || f.coordIndex < 0 || f.coordIndex >= b.dim())
            fail("DimensionMismatch", "family perturbation out of range");
        if (std::find(params.begin(), params.end(), f.param) == params.end())
            params.push_back(f.param);
    }
    VarList tvars{"t"};
    for (const auto& p : params) tvars.push_back(p);

    std::vector<MPoly> coords;
    for (const auto& c : b.br.coords) coords.push_back(c.mapVars(tvars));

    PlaneBranch pb;
    pb.tvars = tvars;
    pb.params = params;
    pb.trunc = b.br.trunc;
    pb.exact = b.br.exact;

    for (int f = 0; f < 2; ++f) {
        MPoly acc(tvars);
        for (int j = 0; j < b.dim(); ++j) {
            MPoly coeff = MPoly::constant(tvars, L.z[static_cast<size_t>(f * b.dim() + j)]);
            for (const auto& fam : family)
                if (fam.form == f && fam.coordIndex == j)
                    coeff = coeff + MPoly::var(tvars, fam.param);
            if (coeff.isZero()) continue;
            acc = acc + coeff * coords[static_cast<size_t>(j)];
        }
        (f == 0 ? pb.x : pb.y) = acc;
    }

    // Reject non-reduced images: at the parameter origin the pair of series
    // must not factor through a common power of t.
    int window = std::max(pb.trunc, 2);
    if (pb.exact)
        window = std::max({window, pb.x.degreeIn("t") + 2, pb.y.degreeIn("t") + 2});
    TSeries xs = pb.xSeriesAtZero(window);
    TSeries ys = pb.ySeriesAtZero(window);
    if (xs.isZeroWindow() || ys.isZeroWindow())
        fail("NonReducedImage", "a projected coordinate vanishes at the parameter origin");
    int g = 0;
    for (int k = 1; k < window; ++k)
        if (!xs.coeff(k).isZero() || !ys.coeff(k).isZero()) g = std::gcd(g, k);
    if (g != 1)
        fail("NonReducedImage", "projected parametrization factors through t^" + std::to_string(g));
    return pb;
}

namespace {

// Drop terms whose total degree in the parameters (all context variables
// except x and y) exceeds the cap.
MPoly truncParamDegree(const MPoly& p, int cap) {
    MPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        int pd = 0;
        for (size_t i = 2; i < e.size(); ++i) pd += e[i];
        if (pd <= cap) out.addTerm(e, c);
    }
    return out;
}

} // namespace

ImplicitEquation implicitize(const PlaneBranch& pb, int paramOrder) {
    if (!pb.exact)
        fail("NotPolynomialParametrization",
             "implicitization requires an exact polynomial parametrization");
    VarList ctx{"x", "y"};
    for (const auto& p : pb.params) ctx.push_back(p);
    VarList ctxT = ctx;
    ctxT.push_back("t");

    MPoly a = MPoly::var(ctxT, "x") - pb.x.mapVars(ctxT);
    MPoly bp = MPoly::var(ctxT, "y") - pb.y.mapVars(ctxT);
    MPoly raw = sylvesterResultant(a, bp, "t"); // context ctx

    // The resultant must vanish along the parametrization.
    {
        std::map<std::string, MPoly> assign;
        assign.emplace("x", pb.x);
        assign.emplace("y", pb.y);
        MPoly pulled = raw.substitute(pb.tvars, assign);
        if (!pulled.isZero())
            fail("VerificationFailed", "resultant does not vanish on the parametrization");
    }

    int dy = raw.degreeIn("y");
    if (dy < 1) fail("VerificationFailed", "implicit equation is independent of y");

    // Coefficient of the pure power y^dy, a polynomial in the parameters.
    MPoly c(ctx);
    for (const auto& [e, co] : raw.terms())
        if (e[0] == 0 && e[1] == dy) {
            Expo pe = e;
            pe[1] = 0;
            c.addTerm(std::move(pe), co);
        }
    if (c.isZero()) fail("VerificationFailed", "pure power y^" + std::to_string(dy) + " is missing");

    ImplicitEquation eq;
    eq.vars = ctx;
    eq.norm.monomial = "y^" + std::to_string(dy);
    eq.norm.divisor = c;

    if (c.isConstant()) {
        eq.F = raw.scaled(c.constantValue().inv());
        eq.norm.exact = true;
        return eq;
    }

    // Family case: invert the unit c(s) = c0 (1 + m) as a parameter power
    // series truncated at total degree paramOrder, then test exactness.
    Expo zero(ctx.size(), 0);
    Rat c0 = c.coeff(zero);
    if (c0.isZero())
        fail("VerificationFailed", "pure-power coefficient is not a unit at the parameter origin");
    MPoly m = c.scaled(c0.inv()) - MPoly::constant(ctx, Rat(1));
    MPoly inv = MPoly::constant(ctx, Rat(1));
    MPoly term = MPoly::constant(ctx, Rat(1));
    for (int k = 1; k <= paramOrder; ++k) {
        term = truncParamDegree(term * (-m), paramOrder);
        if (term.isZero()) break;
        inv = inv + term;
    }
    inv = inv.scaled(c0.inv());
    MPoly candidate = truncParamDegree(raw * inv, paramOrder);
    eq.F = candidate;
    eq.norm.exact = (candidate * c == raw);
    eq.norm.paramOrder = eq.norm.exact ? 0 : paramOrder;
    return eq;
}

PuiseuxData puiseuxOfPlaneBranch(const PlaneBranch& pb) {
    if (!pb.exact)
        fail("NotPolynomialParametrization", "Puiseux analysis needs an exact plane branch");
    PlaneBranch work = pb;
    if (!pb.params.empty()) {
        std::map<std::string, Rat> zero;
        for (const auto& p : pb.params) zero.emplace(p, Rat(0));
        work = specialize(pb, zero);
    }
    int degX = std::max(1, work.x.degreeIn("t"));
    int degY = std::max(1, work.y.degreeIn("t"));
    int window = std::max({work.trunc, 2 * (degX + degY) + 8, 16});
    for (int attempt = 0; attempt < 8; ++attempt) {
        Branch b = work.asBranch();
        b.trunc = window;
        try {
            StandardBranch sb = standardize(b);
            return puiseuxCharacteristic(sb);
        } catch (const Error& err) {
            if (err.code() != "TruncationTooSmall" || window >= 4096) throw;
            window *= 2;
        }
    }
    fail("TruncationTooSmall", "Puiseux analysis did not stabilize below the window cap");
}

MuBarReport muBar(const StandardBranch& b) {
    SecantCone cone = secantCone(b);
    std::vector<ProjectionPlane> planes = pickGenericPlanes(cone, 2);
    MuBarReport rep;
    rep.plane1 = planes[0];
    rep.plane2 = planes[1];
    rep.px1 = puiseuxOfPlaneBranch(project(b, planes[0]));
    rep.px2 = puiseuxOfPlaneBranch(project(b, planes[1]));
    if (rep.px1.e != rep.px2.e || rep.px1.charExponents != rep.px2.charExponents)
        fail("VerificationFailed",
             "two transversal projections disagree on the characteristic exponents");
    rep.mu = rep.px1.mu;
    return rep;
}

DeltaBounds deltaBoundsCheck(const StandardBranch& b) {
    DeltaBounds db;
    db.deltaSpace = semigroupAuto(b).delta;
    SecantCone cone = secantCone(b);
    ProjectionPlane L = pickGenericPlane(cone);
    db.deltaPlane = puiseuxOfPlaneBranch(project(b, L)).delta;
    long em1 = b.e - 1;
    db.upper = em1 * db.deltaSpace - em1 * (em1 - 1) / 2;
    db.lowerOk = db.deltaSpace <= db.deltaPlane;
    db.upperOk = db.deltaPlane <= db.upper;
    return db;
}

PlaneBranch specialize(const PlaneBranch& pb, const std::map<std::string, Rat>& assign) {
    for (const auto& p : pb.params)
        if (!assign.count(p)) fail("MissingParameter", "no value for parameter '" + p + "'");
    PlaneBranch out;
    out.tvars = VarList{"t"};
    out.params = {};
    out.trunc = pb.trunc;
    out.exact = pb.exact;
    out.x = pb.x.evalPartial(assign);
    out.y = pb.y.evalPartial(assign);
    return out;
}

ImplicitEquation specialize(const ImplicitEquation& eq, const std::map<std::string, Rat>& assign) {
    for (size_t i = 2; i < eq.vars.size(); ++i)
        if (!assign.count(eq.vars[i]))
            fail("MissingParameter", "no value for parameter '" + eq.vars[i] + "'");
    ImplicitEquation out;
    out.vars = VarList{"x", "y"};
    out.F = eq.F.evalPartial(assign);
    out.norm.monomial = eq.norm.monomial;
    out.norm.divisor = eq.norm.divisor.evalPartial(assign);
    out.norm.exact = eq.norm.exact;
    out.norm.paramOrder = eq.norm.paramOrder;
    return out;
}

} // namespace cmf
