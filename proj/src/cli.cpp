#include "cmf/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmf/branch.hpp"
#include "cmf/cone.hpp"
#include "cmf/errors.hpp"
#include "cmf/expr.hpp"
#include "cmf/formats.hpp"
#include "cmf/matfact.hpp"
#include "cmf/projection.hpp"
#include "cmf/puiseux.hpp"
#include "cmf/semigroup.hpp"

namespace cmf {

namespace {

using nlohmann::json;

const std::set<std::string>& usageCodes() {
    static const std::set<std::string> codes{
        "SyntaxError",     "UnknownVariable", "MissingParameter",
        "SameFRequired",   "InvalidBranch",   "DimensionMismatch",
        "BadOrder",        "ZeroDegree",      "DivisionByZero",
        "NotPolynomialParametrization",       "FileError",
        "UsageError"};
    return codes;
}

std::map<std::string, Rat> paramAssignments(const std::vector<std::string>& kvs) {
    std::map<std::string, Rat> m;
    for (const auto& kv : kvs) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            fail("UsageError", "--param expects name=value, got '" + kv + "'");
        m[kv.substr(0, eq)] = parseRationalExpr(kv.substr(eq + 1));
    }
    return m;
}

std::vector<std::string> splitCsv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string ratVecStr(const std::vector<Rat>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

template <typename T>
std::string intVecStr(const std::vector<T>& v, const char* sep = ", ") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

struct LoadedBranch {
    std::string name;
    std::string path;
    StandardBranch sb;
};

LoadedBranch loadStandard(const std::string& path, const std::map<std::string, Rat>& assign) {
    BranchFile f = loadBranchFile(path);
    Branch br = assign.empty() ? f.br : f.br.specialized(assign);
    return {f.name.empty() ? path : f.name, path, standardize(br)};
}

// A plane entry is a rational constant, optionally plus parameters with
// unit coefficient; the parameter part becomes a family perturbation.
std::pair<ProjectionPlane, std::vector<FamilyPerturbation>> parsePlaneFlag(
    const std::string& csv, const StandardBranch& sb) {
    std::vector<std::string> cells = splitCsv(csv);
    const int n = sb.dim();
    if (static_cast<int>(cells.size()) != 2 * n)
        fail("UsageError", "--plane needs " + std::to_string(2 * n) +
                               " comma-separated entries for this branch");
    VarList ctx;
    for (const auto& p : sb.br.params) ctx.push_back(p);
    ProjectionPlane L;
    std::vector<FamilyPerturbation> fam;
    for (int i = 0; i < 2 * n; ++i) {
        MPoly p = parseExpression(cells[static_cast<size_t>(i)], ctx);
        Rat base(0);
        for (const auto& [e, c] : p.terms()) {
            int deg = 0;
            int pvar = -1;
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) {
                    deg += e[k];
                    pvar = static_cast<int>(k);
                }
            if (deg == 0) {
                base = c;
            } else if (deg == 1 && c.isOne()) {
                fam.push_back({i / n, i % n, ctx[static_cast<size_t>(pvar)]});
            } else {
                fail("UsageError", "plane entry '" + cells[static_cast<size_t>(i)] +
                                       "' must be a constant or constant + parameter");
            }
        }
        L.z.push_back(base);
    }
    return {L, fam};
}

struct PlaneChoice {
    ProjectionPlane L;
    std::vector<FamilyPerturbation> family;
    bool autoPicked = false;
};

PlaneChoice choosePlane(const std::string& planeCsv, bool autoPlane, const StandardBranch& sb) {
    if (!planeCsv.empty() && autoPlane)
        fail("UsageError", "--plane and --auto-plane are mutually exclusive");
    if (!planeCsv.empty()) {
        auto [L, fam] = parsePlaneFlag(planeCsv, sb);
        return {L, fam, false};
    }
    if (autoPlane) return {pickGenericPlane(secantCone(sb)), {}, true};
    if (sb.dim() == 2) {
        ProjectionPlane L;
        L.z = {Rat(1), Rat(0), Rat(0), Rat(1)};
        return {L, {}, false};
    }
    fail("UsageError", "this branch needs --plane z1,...,z2n or --auto-plane");
}

void printWarnings(std::ostream& out, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) out << "warning: " << w << "\n";
}

json planeJson(const ProjectionPlane& L) {
    json a = json::array();
    for (const auto& z : L.z) a.push_back(z.str());
    return a;
}

json matrixJson(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void emitMatrix(std::ostream& out, const PolyMatrix& m, const char* key) {
    for (int i = 0; i < m.rows(); ++i) {
        out << key << ": ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " | ";
            out << m.at(i, j).str();
        }
        out << "\n";
    }
}

json puiseuxJson(const PuiseuxData& px) {
    json j;
    j["multiplicity"] = px.e;
    j["charExponents"] = px.charExponents;
    j["gcdSequence"] = px.gcdSeq;
    j["semigroupGenerators"] = px.sgGenerators;
    j["multiplicitySequence"] = px.multSequence;
    j["delta"] = px.delta;
    j["mu"] = px.mu;
    j["conductor"] = px.conductor;
    j["warnings"] = px.warnings;
    return j;
}

void emitPuiseux(std::ostream& out, const PuiseuxData& px) {
    out << "characteristic: (" << px.e;
    if (!px.charExponents.empty()) out << "; " << intVecStr(px.charExponents);
    out << ")\n";
    out << "semigroup generators: " << intVecStr(px.sgGenerators) << "\n";
    out << "multiplicity sequence: [" << intVecStr(px.multSequence) << "]\n";
    out << "delta: " << px.delta << "\n";
    out << "mu: " << px.mu << "\n";
    printWarnings(out, px.warnings);
}

// invariants <file.branch> [--trunc N] [--param name=value] [--json]
int cmdInvariants(const std::string& path, int trunc, const std::map<std::string, Rat>& assign,
                  bool jsonOut, std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    SemigroupData sg = trunc > 0 ? semigroupOfBranch(lb.sb, trunc) : semigroupAuto(lb.sb);

    std::optional<PuiseuxData> px;
    if (lb.sb.dim() == 2 && lb.sb.br.params.empty() && lb.sb.br.exact) {
        PlaneBranch pb;
        pb.tvars = lb.sb.br.tvars;
        pb.x = lb.sb.br.coords[0];
        pb.y = lb.sb.br.coords[1];
        pb.trunc = lb.sb.br.trunc;
        pb.exact = true;
        px = puiseuxOfPlaneBranch(pb);
    }

    if (jsonOut) {
        json j;
        j["command"] = "invariants";
        j["input"] = path;
        j["name"] = lb.name;
        j["multiplicity"] = lb.sb.e;
        j["bound"] = sg.bound;
        j["complete"] = sg.complete;
        j["gaps"] = sg.gaps;
        j["delta"] = sg.delta;
        j["frobenius"] = sg.frobenius;
        j["conductor"] = sg.conductor;
        j["gorenstein"] = sg.gorenstein;
        if (px) j["puiseux"] = puiseuxJson(*px);
        out << j.dump(2) << "\n";
    } else {
        out << "command: invariants\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "multiplicity: " << lb.sb.e << "\n";
        out << "certified bound: " << sg.bound << "\n";
        out << "gaps: {" << intVecStr(sg.gaps) << "}\n";
        out << "delta: " << sg.delta << "\n";
        out << "frobenius: " << sg.frobenius << "\n";
        out << "conductor: " << sg.conductor << "\n";
        out << "gorenstein: " << (sg.gorenstein ? "true" : "false") << "\n";
        if (px) emitPuiseux(out, *px);
    }
    if (!sg.complete) {
        out << "incomplete: no conductor certificate below the bound\n";
        return 1;
    }
    return 0;
}

// cone5 <file.branch> [--param ...] [--json]
int cmdCone5(const std::string& path, const std::map<std::string, Rat>& assign, bool jsonOut,
             std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    SecantCone cone = secantCone(lb.sb);
    if (jsonOut) {
        json j;
        j["command"] = "cone5";
        j["input"] = path;
        j["name"] = lb.name;
        j["multiplicity"] = cone.e;
        j["dimension"] = cone.n;
        j["window"] = cone.window;
        json planes = json::array();
        for (const auto& p : cone.planes) {
            json pj;
            json dir = json::array();
            for (const auto& d : p.direction) dir.push_back(d.str());
            pj["direction"] = dir;
            pj["residues"] = p.residues;
            pj["jump"] = p.jump;
            planes.push_back(pj);
        }
        j["planes"] = planes;
        j["truncatedResidues"] = cone.truncatedResidues;
        out << j.dump(2) << "\n";
    } else {
        out << "command: cone5\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "multiplicity: " << cone.e << "\n";
        out << "planes: " << cone.planes.size() << "\n";
        for (size_t k = 0; k < cone.planes.size(); ++k) {
            const auto& p = cone.planes[k];
            out << "plane " << k + 1 << ": direction " << ratVecStr(p.direction) << " residues {"
                << intVecStr(p.residues) << "} jump " << p.jump << "\n";
        }
        if (!cone.truncatedResidues.empty())
            out << "warning: residues {" << intVecStr(cone.truncatedResidues)
                << "} have no jump below the window " << cone.window << "\n";
    }
    return 0;
}

// project <file.branch> [--plane ...|--auto-plane] [--force] [--param ...] [--json]
int cmdProject(const std::string& path, const std::string& planeCsv, bool autoPlane, bool force,
               const std::map<std::string, Rat>& assign, bool jsonOut, std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    PlaneChoice pc = choosePlane(planeCsv, autoPlane, lb.sb);
    PlaneBranch pb = project(lb.sb, pc.L, pc.family, force);
    if (jsonOut) {
        json j;
        j["command"] = "project";
        j["input"] = path;
        j["name"] = lb.name;
        j["plane"] = planeJson(pc.L);
        j["autoPlane"] = pc.autoPicked;
        j["params"] = pb.params;
        j["x"] = pb.x.str();
        j["y"] = pb.y.str();
        out << j.dump(2) << "\n";
    } else {
        out << "command: project\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "plane: " << pc.L.str() << "\n";
        if (!pb.params.empty()) out << "params: " << pb.params[0];
        for (size_t k = 1; k < pb.params.size(); ++k) out << " " << pb.params[k];
        if (!pb.params.empty()) out << "\n";
        out << "x: " << pb.x.str() << "\n";
        out << "y: " << pb.y.str() << "\n";
    }
    return 0;
}

// implicitize <file.branch> [--plane ...|--auto-plane] [--param ...] [--json]
int cmdImplicitize(const std::string& path, const std::string& planeCsv, bool autoPlane,
                   const std::map<std::string, Rat>& assign, bool jsonOut, std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    PlaneChoice pc = choosePlane(planeCsv, autoPlane, lb.sb);
    PlaneBranch pb = project(lb.sb, pc.L, pc.family);
    ImplicitEquation eq = implicitize(pb);
    if (jsonOut) {
        json j;
        j["command"] = "implicitize";
        j["input"] = path;
        j["name"] = lb.name;
        j["plane"] = planeJson(pc.L);
        j["x"] = pb.x.str();
        j["y"] = pb.y.str();
        j["F"] = eq.F.str();
        j["normalization"] = {{"monomial", eq.norm.monomial},
                              {"divisor", eq.norm.divisor.str()},
                              {"exact", eq.norm.exact},
                              {"paramOrder", eq.norm.paramOrder}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: implicitize\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "plane: " << pc.L.str() << "\n";
        out << "x: " << pb.x.str() << "\n";
        out << "y: " << pb.y.str() << "\n";
        out << "F: " << eq.F.str() << "\n";
        out << "normalized coefficient: " << eq.norm.monomial << "\n";
        out << "divisor: " << eq.norm.divisor.str() << "\n";
        out << "exact: " << (eq.norm.exact ? "true" : "false") << "\n";
        if (!eq.norm.exact)
            out << "warning: unit normalization certified to parameter order " << eq.norm.paramOrder
                << " only\n";
    }
    return 0;
}

void emitCheckReport(std::ostream& out, const MFCheckReport& rep) {
    auto line = [&](const char* name, bool v) {
        out << name << ": " << (v ? "pass" : "fail") << "\n";
    };
    line("product d h = F id", rep.productIsF);
    line("entries in (x, y)", rep.entriesInMaxIdeal);
    line("det d = c F", rep.detUnitTimesF);
    if (rep.detUnitTimesF) out << "det constant: " << rep.detConstant.str() << "\n";
    if (rep.columnsAreSyzygies)
        line("columns are relations", *rep.columnsAreSyzygies);
    if (!rep.witness.empty()) out << "witness: " << rep.witness << "\n";
}

json checkJson(const MFCheckReport& rep) {
    json j;
    j["productIsF"] = rep.productIsF;
    j["entriesInMaxIdeal"] = rep.entriesInMaxIdeal;
    j["detUnitTimesF"] = rep.detUnitTimesF;
    if (rep.detUnitTimesF) j["detConstant"] = rep.detConstant.str();
    if (rep.columnsAreSyzygies) j["columnsAreSyzygies"] = *rep.columnsAreSyzygies;
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    j["ok"] = rep.ok();
    return j;
}

// matfact <file.branch> [--plane ...|--auto-plane] [--degree D] [--out file.mf] ...
int cmdMatfact(const std::string& path, const std::string& planeCsv, bool autoPlane, int degree,
               const std::string& outPath, const std::map<std::string, Rat>& assign, bool jsonOut,
               std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    PlaneChoice pc = choosePlane(planeCsv, autoPlane, lb.sb);
    PlaneBranch pb = project(lb.sb, pc.L, pc.family);
    ImplicitEquation eq = implicitize(pb);
    ModuleData md = quotientGenerators(lb.sb, pb);
    BuildOptions opts;
    if (degree > 0) opts.degreeCap = degree;
    MatrixFactorization mf = buildMFFromModule(md, eq, opts);
    MFCheckReport rep = verifyMF(mf);

    if (!outPath.empty()) {
        std::ofstream ofs(outPath);
        if (!ofs) fail("FileError", "cannot write '" + outPath + "'");
        MFFile f;
        f.name = lb.name;
        f.mf = mf;
        writeMFFile(ofs, f);
    }

    if (jsonOut) {
        json j;
        j["command"] = "matfact";
        j["input"] = path;
        j["name"] = lb.name;
        j["plane"] = planeJson(pc.L);
        j["x"] = pb.x.str();
        j["y"] = pb.y.str();
        j["F"] = eq.F.str();
        j["size"] = mf.size;
        json gens = json::array();
        for (const auto& g : md.gens) gens.push_back(g.str());
        j["generators"] = gens;
        j["generatorOrders"] = md.genOrders;
        j["d"] = matrixJson(mf.d);
        j["h"] = matrixJson(mf.h);
        j["checks"] = checkJson(rep);
        out << j.dump(2) << "\n";
    } else {
        out << "command: matfact\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "plane: " << pc.L.str() << "\n";
        out << "x: " << pb.x.str() << "\n";
        out << "y: " << pb.y.str() << "\n";
        out << "generators:";
        for (const auto& g : md.gens) out << " " << g.str() << ";";
        out << "\n";
        out << "F: " << eq.F.str() << "\n";
        out << "size: " << mf.size << "\n";
        emitMatrix(out, mf.d, "d");
        emitMatrix(out, mf.h, "h");
        emitCheckReport(out, rep);
        if (!outPath.empty()) out << "written: " << outPath << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// verify-mf <file.mf> [--json]
int cmdVerifyMF(const std::string& path, bool jsonOut, std::ostream& out) {
    MFFile f = loadMFFile(path);
    MFCheckReport rep = verifyMF(f.mf);
    if (jsonOut) {
        json j;
        j["command"] = "verify-mf";
        j["input"] = path;
        j["name"] = f.name;
        j["F"] = f.mf.eq.F.str();
        j["size"] = f.mf.size;
        j["checks"] = checkJson(rep);
        out << j.dump(2) << "\n";
    } else {
        out << "command: verify-mf\n";
        out << "input: " << (f.name.empty() ? path : f.name) << " (" << path << ")\n";
        out << "F: " << f.mf.eq.F.str() << "\n";
        out << "size: " << f.mf.size << "\n";
        emitCheckReport(out, rep);
        out << "verdict: " << (rep.ok() ? "pass" : "fail") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// is-algebra <file.module> [--identity N] [--param ...] [--json]
int cmdIsAlgebra(const std::string& path, int identity, const std::map<std::string, Rat>& assign,
                 bool jsonOut, std::ostream& out) {
    ModuleFile f = loadModuleFile(path);
    ModuleData md = f.mod;
    if (!assign.empty()) md.plane = specialize(md.plane, assign);
    int eIdx = identity;
    if (eIdx < 0) {
        for (size_t i = 0; i < md.gens.size() && eIdx < 0; ++i)
            if (md.genOrders[i] == 0) eIdx = static_cast<int>(i);
        if (eIdx < 0)
            fail("UsageError", "no generator of order 0; choose the identity with --identity");
    }
    AlgebraVerdict v = isAlgebra(md, eIdx);
    if (jsonOut) {
        json j;
        j["command"] = "is-algebra";
        j["input"] = path;
        j["name"] = f.name;
        j["identityIndex"] = eIdx;
        j["isAlgebra"] = v.isAlgebra;
        if (!v.isAlgebra) {
            j["pair"] = {v.pairI, v.pairJ};
            j["product"] = v.product;
            j["witness"] = v.witness;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "command: is-algebra\n";
        out << "input: " << (f.name.empty() ? path : f.name) << " (" << path << ")\n";
        out << "identity: " << md.gens[static_cast<size_t>(eIdx)].str() << "\n";
        out << "is algebra: " << (v.isAlgebra ? "true" : "false") << "\n";
        if (!v.isAlgebra) out << "witness: " << v.witness << "\n";
    }
    return v.isAlgebra ? 0 : 1;
}

// equiv-mf <a.mf> <b.mf> [--degree D] [--json]
int cmdEquivMF(const std::string& pathA, const std::string& pathB, int degree, bool jsonOut,
               std::ostream& out) {
    MFFile a = loadMFFile(pathA), b = loadMFFile(pathB);
    EquivalenceVerdict v = mfEquivalent(a.mf, b.mf, degree);
    const char* kind = v.kind == EquivalenceVerdict::Equivalent     ? "equivalent"
                       : v.kind == EquivalenceVerdict::Inequivalent ? "inequivalent"
                                                                    : "inconclusive";
    if (jsonOut) {
        json j;
        j["command"] = "equiv-mf";
        j["inputs"] = {pathA, pathB};
        j["degreeCap"] = v.degreeCap;
        j["verdict"] = kind;
        j["certificate"] = v.certificate;
        if (v.phi) j["phi"] = matrixJson(*v.phi);
        if (v.psi) j["psi"] = matrixJson(*v.psi);
        out << j.dump(2) << "\n";
    } else {
        out << "command: equiv-mf\n";
        out << "inputs: " << pathA << ", " << pathB << "\n";
        out << "verdict: " << kind << "\n";
        out << "certificate: " << v.certificate << "\n";
        if (v.phi) emitMatrix(out, *v.phi, "phi");
        if (v.psi) emitMatrix(out, *v.psi, "psi");
    }
    return v.kind == EquivalenceVerdict::Equivalent ? 0 : 1;
}

// check-generic <file.branch> [--plane ...|--auto-plane] [--param ...] [--json]
int cmdCheckGeneric(const std::string& path, const std::string& planeCsv, bool autoPlane,
                    const std::map<std::string, Rat>& assign, bool jsonOut, std::ostream& out) {
    LoadedBranch lb = loadStandard(path, assign);
    PlaneChoice pc = choosePlane(planeCsv, autoPlane, lb.sb);
    // Forced projection: non-transversal planes are part of what is tested.
    PlaneBranch pb = project(lb.sb, pc.L, pc.family, true);
    GenericWitnessReport rep = isGenericProjectionWitness(lb.sb, pb);
    if (jsonOut) {
        json j;
        j["command"] = "check-generic";
        j["input"] = path;
        j["name"] = lb.name;
        j["plane"] = planeJson(pc.L);
        j["generic"] = rep.generic;
        j["independentModM2"] = rep.independentModM2;
        j["muPlane"] = rep.muPlane;
        j["muBar"] = rep.muBarSpace;
        j["muMatches"] = rep.muMatches;
        if (!rep.reason.empty()) j["reason"] = rep.reason;
        out << j.dump(2) << "\n";
    } else {
        out << "command: check-generic\n";
        out << "input: " << lb.name << " (" << path << ")\n";
        out << "plane: " << pc.L.str() << "\n";
        out << "independent mod m^2: " << (rep.independentModM2 ? "true" : "false") << "\n";
        out << "mu of image: " << rep.muPlane << "\n";
        out << "mu of generic projection: " << rep.muBarSpace << "\n";
        out << "generic: " << (rep.generic ? "true" : "false") << "\n";
        if (!rep.reason.empty()) out << "reason: " << rep.reason << "\n";
    }
    return rep.generic ? 0 : 1;
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants, secant cones, generic projections, and matrix factorizations "
                 "of irreducible curve singularities"};
    app.name("curvemf");
    app.require_subcommand(1);

    std::string path, pathB, planeCsv, outPath;
    std::vector<std::string> paramKvs;
    bool jsonOut = false, autoPlane = false, force = false;
    int trunc = 0, degree = 0, identity = -1;

    auto addCommon = [&](CLI::App* c, bool withParams = true) {
        c->add_flag("--json", jsonOut, "machine-readable report");
        if (withParams)
            c->add_option("--param", paramKvs, "parameter assignment name=value (repeatable)");
    };
    auto addPlane = [&](CLI::App* c) {
        c->add_option("--plane", planeCsv,
                      "projection plane coefficients z1,...,z2n (entries may add parameters)");
        c->add_flag("--auto-plane", autoPlane, "pick the first generic plane deterministically");
    };

    CLI::App* cInv = app.add_subcommand("invariants", "semigroup, delta, conductor, Gorenstein");
    cInv->add_option("file", path, "branch file")->required();
    cInv->add_option("--trunc", trunc, "explicit certification bound");
    addCommon(cInv);

    CLI::App* cCone = app.add_subcommand("cone5", "secant cone planes");
    cCone->add_option("file", path, "branch file")->required();
    addCommon(cCone);

    CLI::App* cProj = app.add_subcommand("project", "plane projection of a branch");
    cProj->add_option("file", path, "branch file")->required();
    addPlane(cProj);
    cProj->add_flag("--force", force, "skip the transversality check");
    addCommon(cProj);

    CLI::App* cImpl = app.add_subcommand("implicitize", "implicit equation of a projection");
    cImpl->add_option("file", path, "branch file")->required();
    addPlane(cImpl);
    addCommon(cImpl);

    CLI::App* cMf = app.add_subcommand("matfact", "build the induced matrix factorization");
    cMf->add_option("file", path, "branch file")->required();
    addPlane(cMf);
    cMf->add_option("--degree", degree, "syzygy coefficient degree cap");
    cMf->add_option("--out", outPath, "write the result as a .mf file");
    addCommon(cMf);

    CLI::App* cVer = app.add_subcommand("verify-mf", "check a stored matrix factorization");
    cVer->add_option("file", path, ".mf file")->required();
    addCommon(cVer, false);

    CLI::App* cAlg = app.add_subcommand("is-algebra", "ring structure test for a module");
    cAlg->add_option("file", path, ".module file")->required();
    cAlg->add_option("--identity", identity, "index of the identity generator (default: order 0)");
    addCommon(cAlg);

    CLI::App* cEq = app.add_subcommand("equiv-mf", "bounded-degree equivalence of factorizations");
    cEq->add_option("first", path, "first .mf file")->required();
    cEq->add_option("second", pathB, "second .mf file")->required();
    cEq->add_option("--degree", degree, "witness coefficient degree cap");
    addCommon(cEq, false);

    CLI::App* cGen = app.add_subcommand("check-generic", "generic-projection witness test");
    cGen->add_option("file", path, "branch file")->required();
    addPlane(cGen);
    addCommon(cGen);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto assign = paramAssignments(paramKvs);
        if (app.got_subcommand(cInv)) return cmdInvariants(path, trunc, assign, jsonOut, out);
        if (app.got_subcommand(cCone)) return cmdCone5(path, assign, jsonOut, out);
        if (app.got_subcommand(cProj))
            return cmdProject(path, planeCsv, autoPlane, force, assign, jsonOut, out);
        if (app.got_subcommand(cImpl))
            return cmdImplicitize(path, planeCsv, autoPlane, assign, jsonOut, out);
        if (app.got_subcommand(cMf))
            return cmdMatfact(path, planeCsv, autoPlane, degree, outPath, assign, jsonOut, out);
        if (app.got_subcommand(cVer)) return cmdVerifyMF(path, jsonOut, out);
        if (app.got_subcommand(cAlg)) return cmdIsAlgebra(path, identity, assign, jsonOut, out);
        if (app.got_subcommand(cEq))
            return cmdEquivMF(path, pathB, degree > 0 ? degree : 1, jsonOut, out);
        if (app.got_subcommand(cGen))
            return cmdCheckGeneric(path, planeCsv, autoPlane, assign, jsonOut, out);
        fail("UsageError", "no command selected");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usageCodes().count(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cmf
