#include "cmf/matfact.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "cmf/errors.hpp"
#include "cmf/semigroup.hpp"

namespace cmf {

namespace {

int tOrderOf(const MPoly& p) {
    int ti = p.varIndex("t");
    if (ti < 0) return p.isZero() ? -1 : 0;
    int best = -1;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (best < 0 || e[static_cast<size_t>(ti)] < best) best = e[static_cast<size_t>(ti)];
    }
    return best;
}

std::map<std::string, Rat> zeroAssignment(const std::vector<std::string>& params) {
    std::map<std::string, Rat> a;
    for (const auto& p : params) a[p] = Rat(0);
    return a;
}

PlaneBranch originFiber(const PlaneBranch& pb) {
    return pb.params.empty() ? pb : specialize(pb, zeroAssignment(pb.params));
}

// Parameters may be declared for the projection's sake; the space branch
// itself must not use them. Returns a parameter-free copy.
StandardBranch requireParamFreeCoords(const StandardBranch& b, const char* who) {
    if (b.br.params.empty()) return b;
    for (const auto& c : b.br.coords)
        for (const auto& p : b.br.params)
            if (c.degreeIn(p) > 0)
                fail("MissingParameter", std::string(who) +
                                             " needs a parameter-free space branch; parameters "
                                             "may only enter through the projection");
    StandardBranch out = b;
    out.br.params.clear();
    out.br.tvars = VarList{"t"};
    std::vector<MPoly> coords;
    for (const auto& c : b.br.coords) coords.push_back(c.mapVars(out.br.tvars));
    out.br.coords = std::move(coords);
    return out;
}

// Exponent vectors over nv variables with total degree <= cap, ordered by
// total degree, then lexicographically with earlier variables weighing more.
std::vector<Expo> monomialsUpTo(size_t nv, int cap) {
    std::vector<Expo> out;
    Expo cur(nv, 0);
    // depth-first enumeration, then canonical sort
    std::vector<size_t> stack;
    struct Rec {
        std::vector<Expo>& out;
        size_t nv;
        int cap;
        void go(Expo& cur, size_t pos, int left) {
            if (pos == nv) {
                out.push_back(cur);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                cur[pos] = k;
                go(cur, pos + 1, left - k);
            }
            cur[pos] = 0;
        }
    } rec{out, nv, cap};
    (void)stack;
    rec.go(cur, 0, cap);
    std::sort(out.begin(), out.end(), TermLess{});
    return out;
}

long chooseCapped(long n, long k, long cap) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// b-element subsets of {0..K-1}, ordered by index sum then lexicographically.
// K shrinks until the count fits under maxCount, keeping low-index vectors.
std::vector<std::vector<int>> gradedSubsets(int K, int b, long maxCount) {
    while (K > b && chooseCapped(K, b, maxCount) > maxCount) --K;
    std::vector<std::vector<int>> all;
    if (K < b) return all;
    std::vector<int> idx(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        all.push_back(idx);
        int i = b - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == K - b + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < b; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    std::stable_sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& c) {
        long sa = 0, sc = 0;
        for (int v : a) sa += v;
        for (int v : c) sc += v;
        if (sa != sc) return sa < sc;
        return a < c;
    });
    return all;
}

} // namespace

ModuleData quotientGenerators(const StandardBranch& sb, const PlaneBranch& pb) {
    StandardBranch b = requireParamFreeCoords(sb, "quotient generators");
    if (!b.br.exact || !pb.exact)
        fail("NotPolynomialParametrization", "quotient generators need exact polynomial coordinates");

    PlaneBranch fiber = originFiber(pb);

    SemigroupData sg = semigroupAuto(b);
    const int e = b.e;
    const int cX = sg.conductor;

    const int ox = tOrderOf(fiber.x), oy = tOrderOf(fiber.y);
    if (ox < 1 || oy < 1)
        fail("NonReducedImage", "a projected coordinate is a unit or zero at the origin");
    const int mo = std::min(ox, oy);

    // Quotient orders live in [0, cX + mo); certify pivots up to N.
    const int N = cX + mo + 2;

    int maxDegCoords = 1;
    for (const auto& c : b.br.coords) maxDegCoords = std::max(maxDegCoords, c.degreeIn("t"));
    const int maxDegXY = std::max(fiber.x.degreeIn("t"), fiber.y.degreeIn("t"));
    // Wide storage window: power products below formal order N have degree
    // at most (N/e + 1) * maxDegCoords, so polynomial rows stay exact.
    const int R = (N / e + 1) * maxDegCoords + maxDegXY + 8;

    std::vector<TSeries> gensT;
    for (int i = 0; i < static_cast<int>(b.br.coords.size()); ++i)
        gensT.push_back(b.br.coordSeriesAtZero(i, R));
    RingClosure ring = ringClosure(gensT, N, false, e, R);

    TSeries xs = seriesFromPoly(fiber.x, "t", R);
    TSeries ys = seriesFromPoly(fiber.y, "t", R);

    // Value set of the ideal (x, y) O_X below N.
    SeriesSpan ideal(R);
    for (const auto& [piv, row] : ring.span.rows()) {
        (void)piv;
        ideal.insert(row * xs);
        ideal.insert(row * ys);
    }

    const int cut = cX + mo; // every order >= cut is an ideal value
    std::vector<int> qOrders;
    for (const auto& [piv, row] : ring.span.rows()) {
        (void)row;
        if (piv >= N) continue; // beyond the certified window
        if (ideal.hasPivot(piv)) continue;
        if (piv >= cut)
            fail("VerificationFailed", "quotient representative of order " + std::to_string(piv) +
                                           " at or beyond the conductor threshold " +
                                           std::to_string(cut));
        qOrders.push_back(piv);
    }

    ModuleData md;
    md.plane = pb;
    md.trunc = R;
    for (int o : qOrders) {
        const TSeries& row = ring.span.rows().at(o);
        md.gens.push_back(polyFromSeries(row, VarList{"t"}, "t"));
        md.genOrders.push_back(o);
    }
    return md;
}

SyzygyBasis syzygySearch(const ModuleData& m, int degreeCap, int paramCap) {
    if (!m.plane.exact)
        fail("NotPolynomialParametrization", "syzygy search needs exact polynomial data");
    if (m.gens.empty()) fail("BadOrder", "syzygy search needs at least one module generator");
    if (degreeCap < 1) fail("BadOrder", "syzygy degree cap must be at least 1");

    const VarList& tv = m.plane.tvars; // t, then the parameters
    const auto& params = m.plane.params;
    const int pc = params.empty() ? 0 : std::max(paramCap, 0);
    const int b = static_cast<int>(m.gens.size());

    std::vector<MPoly> gensTv;
    for (const auto& g : m.gens) gensTv.push_back(g.mapVars(tv));

    // Power ladders for the substituted plane coordinates.
    std::vector<MPoly> xp{MPoly::constant(tv, Rat(1))}, yp{MPoly::constant(tv, Rat(1))};
    for (int k = 1; k <= degreeCap; ++k) {
        xp.push_back(xp.back() * m.plane.x);
        yp.push_back(yp.back() * m.plane.y);
    }

    // Coefficient monomials x^a y^c, degree 1..degreeCap. Constant terms are
    // excluded: the generators are minimal, so no relation has a unit
    // coefficient, and the factorization entries must avoid units anyway.
    struct XY {
        int a, c;
    };
    std::vector<XY> xyMons;
    for (int d = 1; d <= degreeCap; ++d)
        for (int a = d; a >= 0; --a) xyMons.push_back({a, d - a});

    std::vector<Expo> parMons = monomialsUpTo(params.size(), pc); // empty context gives {()}

    struct Unknown {
        int gi;
        XY xy;
        Expo par;
    };
    std::vector<Unknown> unknowns;
    for (int gi = 0; gi < b; ++gi)
        for (const auto& mo : xyMons)
            for (const auto& pe : parMons) unknowns.push_back({gi, mo, pe});

    // Linear system over the (t, parameter) monomials of the contributions.
    std::vector<MPoly> contrib;
    contrib.reserve(unknowns.size());
    std::map<Expo, int, TermLess> rowOf;
    for (const auto& u : unknowns) {
        MPoly term = xp[static_cast<size_t>(u.xy.a)] * yp[static_cast<size_t>(u.xy.c)];
        if (pc > 0) {
            Expo pe(tv.size(), 0);
            for (size_t j = 0; j < params.size(); ++j) pe[1 + j] = u.par[j];
            term = term * MPoly::monomial(tv, pe, Rat(1));
        }
        term = term * gensTv[static_cast<size_t>(u.gi)];
        for (const auto& [e, c] : term.terms()) {
            (void)c;
            rowOf.emplace(e, 0);
        }
        contrib.push_back(std::move(term));
    }
    int nextRow = 0;
    for (auto& [e, id] : rowOf) {
        (void)e;
        id = nextRow++;
    }

    QMatrix A(nextRow, static_cast<int>(unknowns.size()));
    for (size_t col = 0; col < unknowns.size(); ++col)
        for (const auto& [e, c] : contrib[col].terms()) A.at(rowOf.at(e), static_cast<int>(col)) = c;

    SyzygyBasis out;
    out.vars = VarList{"x", "y"};
    for (const auto& p : params) out.vars.push_back(p);
    out.degreeCap = degreeCap;
    out.paramCap = pc;
    out.tDegreeBound = 0;
    for (const auto& [e, id] : rowOf) {
        (void)id;
        out.tDegreeBound = std::max(out.tDegreeBound, e[0] + 1);
    }

    std::map<std::string, MPoly> subst{{"x", m.plane.x}, {"y", m.plane.y}};
    for (const auto& vec : nullspaceBasis(A)) {
        std::vector<MPoly> v(static_cast<size_t>(b), MPoly(out.vars));
        for (size_t col = 0; col < unknowns.size(); ++col) {
            if (vec[col].isZero()) continue;
            const Unknown& u = unknowns[col];
            Expo e(out.vars.size(), 0);
            e[0] = u.xy.a;
            e[1] = u.xy.c;
            for (size_t j = 0; j < params.size(); ++j) e[2 + j] = u.par[j];
            v[static_cast<size_t>(u.gi)].addTerm(std::move(e), vec[col]);
        }
        MPoly acc(tv);
        for (int i = 0; i < b; ++i)
            acc = acc + v[static_cast<size_t>(i)].substitute(tv, subst) * gensTv[static_cast<size_t>(i)];
        if (!acc.isZero())
            fail("VerificationFailed", "syzygy candidate does not vanish under substitution");
        out.vectors.push_back(std::move(v));
    }
    return out;
}

MatrixFactorization buildMFFromModule(const ModuleData& m, const ImplicitEquation& eq,
                                      const BuildOptions& opts) {
    const int b = static_cast<int>(m.gens.size());
    if (b == 0) fail("BadOrder", "presentation needs at least one module generator");
    if (!m.plane.params.empty() && !eq.norm.exact)
        fail("NoPresentationFound",
             "the unit normalization of F is only known to parameter order " +
                 std::to_string(eq.norm.paramOrder) +
                 "; determinants cannot be certified against a truncated F");

    int degF = 1;
    for (const auto& [e, c] : eq.F.terms()) {
        (void)c;
        degF = std::max(degF, e[0] + e[1]);
    }
    int D = opts.degreeCap > 0 ? opts.degreeCap : degF;
    int pc = opts.paramCap;

    std::string lastNote = "no syzygy subset had determinant a unit multiple of F";
    for (int round = 0; round <= opts.retries; ++round) {
        SyzygyBasis sb = syzygySearch(m, D, pc);
        const int K = static_cast<int>(sb.vectors.size());
        MPoly F = eq.F.mapVars(sb.vars);
        for (const auto& ss : gradedSubsets(K, b, opts.maxSubsetsPerRound)) {
            PolyMatrix cand(b, b, sb.vars);
            for (int j = 0; j < b; ++j)
                for (int i = 0; i < b; ++i)
                    cand.at(i, j) = sb.vectors[static_cast<size_t>(ss[static_cast<size_t>(j)])]
                                              [static_cast<size_t>(i)];
            MPoly det = cand.det();
            if (det.isZero()) continue;
            auto q = MPoly::divideExact(det, F);
            if (!q || !q->isConstant()) continue;
            Rat c = q->constantValue();
            if (c.isZero()) continue;
            for (int i = 0; i < b; ++i) cand.at(i, 0) = cand.at(i, 0).scaled(c.inv());

            MatrixFactorization mf;
            mf.eq = eq;
            mf.d = cand;
            mf.h = cand.adjugate();
            mf.size = b;
            mf.gens = m;
            if (verifyMF(mf).ok()) return mf;
            lastNote = "a candidate with det = c F failed verification";
        }
        D += 2;
        if (!m.plane.params.empty()) pc += 2;
    }
    fail("NoPresentationFound",
         "no generating set of syzygies up to coefficient degree " + std::to_string(D - 2) + "; " +
             lastNote);
}

MatrixFactorization buildMF(const StandardBranch& b, const PlaneBranch& pb,
                            const BuildOptions& opts) {
    ImplicitEquation eq = implicitize(pb);
    ModuleData md = quotientGenerators(b, pb);
    return buildMFFromModule(md, eq, opts);
}

MatrixFactorization buildMF(const StandardBranch& b, const ProjectionPlane& L,
                            const BuildOptions& opts) {
    return buildMF(b, project(b, L), opts);
}

MFCheckReport verifyMF(const MatrixFactorization& mf) {
    MFCheckReport rep;
    const MPoly& F = mf.eq.F;
    const int n = mf.size;
    if (n <= 0 || mf.d.rows() != n || mf.d.cols() != n || mf.h.rows() != n || mf.h.cols() != n)
        fail("DimensionMismatch", "factorization matrices must be square of the declared size");

    const VarList& vars = F.vars();
    PolyMatrix d = mf.d.vars() == vars ? mf.d : mf.d.mapVars(vars);
    PolyMatrix h = mf.h.vars() == vars ? mf.h : mf.h.mapVars(vars);

    int xi = -1, yi = -1;
    for (size_t k = 0; k < vars.size(); ++k) {
        if (vars[k] == "x") xi = static_cast<int>(k);
        if (vars[k] == "y") yi = static_cast<int>(k);
    }
    if (xi < 0 || yi < 0)
        fail("DimensionMismatch", "factorization context must contain the plane coordinates x, y");

    PolyMatrix FI = PolyMatrix::identity(n, vars).scaled(F);
    PolyMatrix dh = d * h, hd = h * d;
    rep.productIsF = (dh == FI) && (hd == FI);
    if (!rep.productIsF) {
        for (int i = 0; i < n && rep.witness.empty(); ++i)
            for (int j = 0; j < n && rep.witness.empty(); ++j) {
                if (!(dh.at(i, j) == FI.at(i, j)))
                    rep.witness = "(d h)[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + dh.at(i, j).str();
                else if (!(hd.at(i, j) == FI.at(i, j)))
                    rep.witness = "(h d)[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + hd.at(i, j).str();
            }
    }

    rep.entriesInMaxIdeal = true;
    for (int pass = 0; pass < 2 && rep.entriesInMaxIdeal; ++pass) {
        const PolyMatrix& mat = pass == 0 ? d : h;
        for (int i = 0; i < n && rep.entriesInMaxIdeal; ++i)
            for (int j = 0; j < n && rep.entriesInMaxIdeal; ++j)
                for (const auto& [e, c] : mat.at(i, j).terms()) {
                    (void)c;
                    if (e[static_cast<size_t>(xi)] + e[static_cast<size_t>(yi)] == 0) {
                        rep.entriesInMaxIdeal = false;
                        if (rep.witness.empty())
                            rep.witness = std::string(pass == 0 ? "d" : "h") + "[" +
                                          std::to_string(i) + "][" + std::to_string(j) +
                                          "] has a term constant in x, y";
                        break;
                    }
                }
    }

    MPoly det = d.det();
    auto q = MPoly::divideExact(det, F);
    rep.detUnitTimesF = q.has_value() && q->isConstant() && !q->constantValue().isZero();
    if (rep.detUnitTimesF) rep.detConstant = q->constantValue();
    else if (rep.witness.empty())
        rep.witness = "det d = " + det.str() + " is not a nonzero constant multiple of F";

    if (mf.gens) {
        const ModuleData& m = *mf.gens;
        const VarList& tv = m.plane.tvars;
        std::map<std::string, MPoly> subst{{"x", m.plane.x}, {"y", m.plane.y}};
        bool all = true;
        for (int j = 0; j < n && all; ++j) {
            MPoly acc(tv);
            for (int i = 0; i < n; ++i)
                acc = acc + d.at(i, j).substitute(tv, subst) *
                                m.gens[static_cast<size_t>(i)].mapVars(tv);
            if (!acc.isZero()) {
                all = false;
                if (rep.witness.empty())
                    rep.witness = "column " + std::to_string(j) +
                                  " is not a relation among the module generators: " + acc.str();
            }
        }
        rep.columnsAreSyzygies = all;
    }
    return rep;
}

AlgebraVerdict isAlgebra(const ModuleData& m, int eIndex) {
    if (eIndex < 0 || eIndex >= static_cast<int>(m.gens.size()))
        fail("BadOrder", "identity index out of range");
    if (!m.plane.params.empty())
        fail("MissingParameter",
             "the algebra test needs a parameter-free module; assign parameter values first");
    if (!m.plane.exact)
        fail("NotPolynomialParametrization", "the algebra test needs exact polynomial data");

    PuiseuxData px = puiseuxOfPlaneBranch(m.plane);
    const int cY = static_cast<int>(px.conductor);

    int maxGenDeg = 0;
    for (const auto& g : m.gens) {
        if (g.isZero()) fail("BadOrder", "zero module generator");
        maxGenDeg = std::max(maxGenDeg, g.degreeIn("t"));
    }
    const int orde = tOrderOf(m.gens[static_cast<size_t>(eIndex)]);
    // Tail bound: e M contains e^2 O_Y, hence every order >= 2 ord(e) + cY.
    const long S = 2L * orde + cY;
    const int N = static_cast<int>(std::max<long>(S + 2, 2L * maxGenDeg + 2)) + 4;

    TSeries xs = m.plane.xSeriesAtZero(N), ys = m.plane.ySeriesAtZero(N);
    RingClosure ring = ringClosure({xs, ys}, N, false, 1, N);

    std::vector<TSeries> gS;
    for (const auto& g : m.gens) gS.push_back(seriesFromPoly(g.mapVars(VarList{"t"}), "t", N));
    const TSeries& eS = gS[static_cast<size_t>(eIndex)];

    // Value span of e M over O_Y; pivots below N are authoritative.
    SeriesSpan spanEM(N);
    for (const auto& [piv, row] : ring.span.rows()) {
        (void)piv;
        TSeries ue = row * eS;
        for (const auto& g : gS) spanEM.insert(ue * g);
    }

    AlgebraVerdict v;
    v.isAlgebra = true;
    const int b = static_cast<int>(m.gens.size());
    for (int i = 0; i < b && v.isAlgebra; ++i)
        for (int j = i; j < b && v.isAlgebra; ++j) {
            TSeries r = spanEM.reduce(gS[static_cast<size_t>(i)] * gS[static_cast<size_t>(j)]);
            auto ord = r.order();
            if (!ord || *ord >= S) continue; // tail orders are always attained
            v.isAlgebra = false;
            v.pairI = i;
            v.pairJ = j;
            v.product = (m.gens[static_cast<size_t>(i)] * m.gens[static_cast<size_t>(j)]).str();
            v.witness = "g" + std::to_string(i) + " g" + std::to_string(j) + " = " + v.product +
                        " reduces to order " + std::to_string(*ord) +
                        " outside the value set of e M";
        }
    return v;
}

GenericWitnessReport isGenericProjectionWitness(const StandardBranch& sb, const PlaneBranch& pb) {
    GenericWitnessReport rep;
    try {
        StandardBranch b = requireParamFreeCoords(sb, "genericity test");
        PlaneBranch fiber = originFiber(pb);

        SemigroupData sg = semigroupAuto(b);
        const int cX = sg.conductor;
        const int e = b.e;
        const int N2 = 2 * cX + 2 * e + 6;

        std::vector<TSeries> gensT;
        for (int i = 0; i < static_cast<int>(b.br.coords.size()); ++i)
            gensT.push_back(b.br.coordSeriesAtZero(i, N2));
        RingClosure ring = ringClosure(gensT, N2, false, e, N2);

        std::vector<const TSeries*> mRows;
        for (const auto& [piv, row] : ring.span.rows())
            if (piv >= 1) mRows.push_back(&row);

        // Value span of m^2; tails of order >= 2 cX always lie in it.
        SeriesSpan m2(N2);
        for (size_t i = 0; i < mRows.size(); ++i)
            for (size_t j = i; j < mRows.size(); ++j) m2.insert(*mRows[i] * *mRows[j]);

        const int S2 = 2 * cX;
        TSeries rx = m2.reduce(fiber.xSeriesAtZero(N2));
        TSeries ry = m2.reduce(fiber.ySeriesAtZero(N2));
        QMatrix C(2, S2);
        for (int k = 0; k < S2; ++k) {
            C.at(0, k) = rx.coeff(k);
            C.at(1, k) = ry.coeff(k);
        }
        rep.independentModM2 = rankOf(C) == 2;
        if (!rep.independentModM2) rep.reason = "the images of x and y are dependent modulo m^2";

        MuBarReport mb = muBar(b);
        PuiseuxData pxp = puiseuxOfPlaneBranch(fiber);
        rep.muPlane = pxp.mu;
        rep.muBarSpace = mb.mu;
        rep.muMatches = (pxp.mu == mb.mu);
        if (!rep.muMatches) {
            if (!rep.reason.empty()) rep.reason += "; ";
            rep.reason += "mu of the image is " + std::to_string(pxp.mu) +
                          " but the generic value is " + std::to_string(mb.mu);
        }
        rep.generic = rep.independentModM2 && rep.muMatches;
    } catch (const Error& err) {
        if (err.code() == "NonReducedImage" || err.code() == "InvalidBranch") {
            rep.generic = false;
            rep.independentModM2 = false;
            rep.muMatches = false;
            rep.reason = err.what();
        } else {
            throw;
        }
    }
    return rep;
}

namespace {

// Plain fraction Gaussian elimination, kept independent of the Bareiss
// routine so rank claims can be cross-checked.
int plainRank(QMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int p = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, c).isZero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(p, cc), m.at(rank, cc));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, c).isZero()) continue;
            Rat f = m.at(r, c) / m.at(rank, c);
            for (int cc = c; cc < m.cols; ++cc) m.at(r, cc) = m.at(r, cc) - f * m.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

PolyMatrix originParamFiber(const PolyMatrix& d, const VarList& vars) {
    if (vars.size() <= 2) return d;
    std::map<std::string, Rat> zero;
    for (size_t k = 2; k < vars.size(); ++k) zero[vars[k]] = Rat(0);
    return d.evalPartial(zero);
}

// dim coker(d) / (x, y)^2 coker(d) = 3 n - rank of the columns
// { d_j, x d_j, y d_j } taken modulo (x, y)^2.
int cokerDimModM2(const PolyMatrix& dIn, const VarList& ctxVars, int (*rank)(QMatrix)) {
    PolyMatrix d = originParamFiber(dIn, ctxVars);
    const int n = d.rows();
    QMatrix B(3 * n, 3 * d.cols());
    const Expo e1{0, 0}, ex{1, 0}, ey{0, 1};
    for (int j = 0; j < d.cols(); ++j)
        for (int i = 0; i < n; ++i) {
            const MPoly& p = d.at(i, j);
            B.at(3 * i + 0, 3 * j + 0) = p.coeff(e1);
            B.at(3 * i + 1, 3 * j + 0) = p.coeff(ex);
            B.at(3 * i + 2, 3 * j + 0) = p.coeff(ey);
            B.at(3 * i + 1, 3 * j + 1) = p.coeff(e1); // times x
            B.at(3 * i + 2, 3 * j + 2) = p.coeff(e1); // times y
        }
    return 3 * n - rank(B);
}

} // namespace

EquivalenceVerdict mfEquivalent(const MatrixFactorization& a, const MatrixFactorization& b,
                                int degreeCap) {
    if (a.eq.F.vars() != b.eq.F.vars() || !(a.eq.F == b.eq.F) || a.size != b.size)
        fail("SameFRequired",
             "equivalence is only defined between factorizations of one F with equal size");
    const int n = a.size;
    const VarList& vars = a.eq.F.vars();
    PolyMatrix da = a.d.vars() == vars ? a.d : a.d.mapVars(vars);
    PolyMatrix db = b.d.vars() == vars ? b.d : b.d.mapVars(vars);

    EquivalenceVerdict v;
    v.degreeCap = degreeCap;

    // Cokernel invariants at the parameter origin: minimal generator count
    // and the quotient dimension modulo (x, y)^2.
    const int ka = n - rankOf(originParamFiber(da, vars).constantTerms());
    const int kb = n - rankOf(originParamFiber(db, vars).constantTerms());
    const int qa = cokerDimModM2(da, vars, &rankOf);
    const int qb = cokerDimModM2(db, vars, &rankOf);
    if (ka != kb || qa != qb) {
        const int ka2 = n - plainRank(originParamFiber(da, vars).constantTerms());
        const int kb2 = n - plainRank(originParamFiber(db, vars).constantTerms());
        const int qa2 = cokerDimModM2(da, vars, &plainRank);
        const int qb2 = cokerDimModM2(db, vars, &plainRank);
        if (ka2 != ka || kb2 != kb || qa2 != qa || qb2 != qb)
            fail("VerificationFailed", "rank recomputation disagrees between eliminations");
        v.kind = EquivalenceVerdict::Inequivalent;
        std::ostringstream os;
        os << "cokernel invariants differ: corank at the origin " << ka << " vs " << kb
           << ", quotient dimension mod (x,y)^2 " << qa << " vs " << qb;
        v.certificate = os.str();
        return v;
    }

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);

    for (int dp = 0; dp <= degreeCap; ++dp) {
        std::vector<Expo> mons = monomialsUpTo(vars.size(), dp);
        const int M = static_cast<int>(mons.size());
        const int half = n * n * M;

        // Unknown layout: phi[i][j] monomials first, then psi[i][j].
        std::vector<std::pair<std::pair<int, Expo>, std::pair<int, Rat>>> triples;
        auto addTriple = [&](int entry, const Expo& e, int col, const Rat& c) {
            triples.push_back({{entry, e}, {col, c}});
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int mi = 0; mi < M; ++mi) {
                    const int phiCol = (i * n + j) * M + mi;
                    for (int k = 0; k < n; ++k)
                        for (const auto& [e, c] : da.at(j, k).terms()) {
                            Expo s = e;
                            for (size_t q = 0; q < s.size(); ++q) s[q] += mons[static_cast<size_t>(mi)][q];
                            addTriple(i * n + k, s, phiCol, c);
                        }
                    const int psiCol = half + (i * n + j) * M + mi;
                    for (int k = 0; k < n; ++k)
                        for (const auto& [e, c] : db.at(k, i).terms()) {
                            Expo s = e;
                            for (size_t q = 0; q < s.size(); ++q) s[q] += mons[static_cast<size_t>(mi)][q];
                            addTriple(k * n + j, s, psiCol, -c);
                        }
                }

        std::map<std::pair<int, Expo>, int> rowOf;
        for (const auto& t : triples) rowOf.emplace(t.first, 0);
        int nextRow = 0;
        for (auto& [key, id] : rowOf) {
            (void)key;
            id = nextRow++;
        }
        QMatrix A(nextRow, 2 * half);
        for (const auto& t : triples)
            A.at(rowOf.at(t.first), t.second.first) = A.at(rowOf.at(t.first), t.second.first) + t.second.second;

        auto ns = nullspaceBasis(A);
        if (ns.empty()) continue;

        auto assemble = [&](const std::vector<Rat>& vec, PolyMatrix& phi, PolyMatrix& psi) {
            phi = PolyMatrix(n, n, vars);
            psi = PolyMatrix(n, n, vars);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int mi = 0; mi < M; ++mi) {
                        const Rat& cp = vec[static_cast<size_t>((i * n + j) * M + mi)];
                        if (!cp.isZero())
                            phi.at(i, j).addTerm(mons[static_cast<size_t>(mi)], cp);
                        const Rat& cq = vec[static_cast<size_t>(half + (i * n + j) * M + mi)];
                        if (!cq.isZero())
                            psi.at(i, j).addTerm(mons[static_cast<size_t>(mi)], cq);
                    }
        };
        auto tryWitness = [&](const std::vector<Rat>& vec) -> bool {
            PolyMatrix phi(0, 0, vars), psi(0, 0, vars);
            assemble(vec, phi, psi);
            if (detOf(phi.constantTerms()).isZero()) return false;
            if (detOf(psi.constantTerms()).isZero()) return false;
            if (!(phi * da == db * psi)) return false;
            v.kind = EquivalenceVerdict::Equivalent;
            v.phi = phi;
            v.psi = psi;
            v.certificate = "invertible witness of coefficient degree at most " + std::to_string(dp);
            return true;
        };

        for (const auto& vec : ns)
            if (tryWitness(vec)) return v;

        const size_t L = static_cast<size_t>(2 * half);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rat> vec(L, Rat(0));
            bool any = false;
            for (const auto& base : ns) {
                int c = coef(rng);
                if (c == 0) continue;
                any = true;
                for (size_t q = 0; q < L; ++q)
                    if (!base[q].isZero()) vec[q] = vec[q] + Rat(c) * base[q];
            }
            if (!any) continue;
            if (tryWitness(vec)) return v;
        }
    }

    v.kind = EquivalenceVerdict::Inconclusive;
    v.certificate = "cokernel invariants agree but no invertible witness was found up to degree " +
                    std::to_string(degreeCap);
    return v;
}

} // namespace cmf
