#include "cmf/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cmf/errors.hpp"
#include "cmf/expr.hpp"

namespace cmf {

namespace {

struct Line {
    std::string key, value;
    int no;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<Line> readLines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError("SyntaxError", "expected 'key: value'", no, 1);
        Line l;
        l.key = trim(s.substr(0, colon));
        l.value = trim(s.substr(colon + 1));
        l.no = no;
        if (l.key.empty()) throw ParseError("SyntaxError", "empty key", no, 1);
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parseCount(const Line& l) {
    if (l.value.empty() || l.value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("SyntaxError", "'" + l.key + "' needs an unsigned integer", l.no, 1);
    return std::stoi(l.value);
}

int tOrderOfPoly(const MPoly& p, const Line& l) {
    int ti = p.varIndex("t");
    int best = -1;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        int k = ti < 0 ? 0 : e[static_cast<size_t>(ti)];
        if (best < 0 || k < best) best = k;
    }
    if (best < 0) throw ParseError("SyntaxError", "zero entry where a generator is required", l.no, 1);
    return best;
}

[[noreturn]] void unknownKey(const Line& l) {
    throw ParseError("SyntaxError", "unknown key '" + l.key + "'", l.no, 1);
}

} // namespace

BranchFile parseBranchFile(std::istream& in) {
    auto lines = readLines(in);
    BranchFile f;
    std::vector<std::string> params;
    std::vector<std::pair<std::string, int>> coordSrc;
    int trunc = -1;
    for (const auto& l : lines) {
        if (l.key == "name") f.name = l.value;
        else if (l.key == "params") params = splitList(l.value);
        else if (l.key == "trunc") trunc = parseCount(l);
        else if (l.key == "coord") coordSrc.push_back({l.value, l.no});
        else unknownKey(l);
    }
    if (coordSrc.size() < 2)
        fail("SyntaxError", "a branch needs at least two 'coord:' lines");
    VarList ctx{"t"};
    for (const auto& p : params) ctx.push_back(p);
    std::vector<MPoly> coords;
    int maxDeg = 0;
    for (const auto& [src, no] : coordSrc) {
        coords.push_back(parseExpression(src, ctx, no));
        maxDeg = std::max(maxDeg, coords.back().degreeIn("t"));
    }
    bool exact = trunc < 0;
    // Exact coordinates extend to any window; the stored value is a base.
    int window = exact ? maxDeg + 2 : trunc;
    f.br = Branch::fromCoords(std::move(coords), params, window, exact);
    return f;
}

ModuleFile parseModuleFile(std::istream& in) {
    auto lines = readLines(in);
    ModuleFile f;
    std::vector<std::string> params;
    const Line *lx = nullptr, *ly = nullptr;
    std::vector<const Line*> genSrc;
    for (const auto& l : lines) {
        if (l.key == "name") f.name = l.value;
        else if (l.key == "params") params = splitList(l.value);
        else if (l.key == "x") lx = &l;
        else if (l.key == "y") ly = &l;
        else if (l.key == "gen") genSrc.push_back(&l);
        else unknownKey(l);
    }
    if (!lx || !ly) fail("SyntaxError", "a module file needs 'x:' and 'y:' lines");
    if (genSrc.empty()) fail("SyntaxError", "a module file needs at least one 'gen:' line");
    VarList ctx{"t"};
    for (const auto& p : params) ctx.push_back(p);
    PlaneBranch& pb = f.mod.plane;
    pb.tvars = ctx;
    pb.params = params;
    pb.x = parseExpression(lx->value, ctx, lx->no);
    pb.y = parseExpression(ly->value, ctx, ly->no);
    pb.exact = true;
    int maxDeg = std::max(pb.x.degreeIn("t"), pb.y.degreeIn("t"));
    for (const Line* l : genSrc) {
        MPoly g = parseExpression(l->value, VarList{"t"}, l->no);
        f.mod.genOrders.push_back(tOrderOfPoly(g, *l));
        maxDeg = std::max(maxDeg, g.degreeIn("t"));
        f.mod.gens.push_back(std::move(g));
    }
    pb.trunc = maxDeg + 2;
    f.mod.trunc = maxDeg + 2;
    return f;
}

MFFile parseMFFile(std::istream& in) {
    auto lines = readLines(in);
    MFFile f;
    std::vector<std::string> params;
    const Line* lF = nullptr;
    const Line *lx = nullptr, *ly = nullptr;
    std::vector<const Line*> dRows, hRows, genSrc;
    int size = -1;
    for (const auto& l : lines) {
        if (l.key == "name") f.name = l.value;
        else if (l.key == "params") params = splitList(l.value);
        else if (l.key == "F") lF = &l;
        else if (l.key == "size") size = parseCount(l);
        else if (l.key == "d") dRows.push_back(&l);
        else if (l.key == "h") hRows.push_back(&l);
        else if (l.key == "x") lx = &l;
        else if (l.key == "y") ly = &l;
        else if (l.key == "gen") genSrc.push_back(&l);
        else unknownKey(l);
    }
    if (!lF) fail("SyntaxError", "a factorization file needs an 'F:' line");
    if (size < 1) fail("SyntaxError", "a factorization file needs 'size: n' with n >= 1");
    VarList ctx{"x", "y"};
    for (const auto& p : params) ctx.push_back(p);
    f.mf.eq.vars = ctx;
    f.mf.eq.F = parseExpression(lF->value, ctx, lF->no);
    f.mf.size = size;
    auto parseRows = [&](const std::vector<const Line*>& rows, const char* which) {
        if (static_cast<int>(rows.size()) != size)
            fail("SyntaxError", std::string("expected ") + std::to_string(size) + " '" + which +
                                    ":' rows, found " + std::to_string(rows.size()));
        PolyMatrix m(size, size, ctx);
        for (int i = 0; i < size; ++i) {
            const Line& l = *rows[static_cast<size_t>(i)];
            std::vector<std::string> cells;
            std::string cur;
            for (char ch : l.value) {
                if (ch == '|') {
                    cells.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            cells.push_back(cur);
            if (static_cast<int>(cells.size()) != size)
                throw ParseError("SyntaxError", std::string("row needs ") + std::to_string(size) +
                                                    " entries separated by '|'",
                                 l.no, 1);
            for (int j = 0; j < size; ++j)
                m.at(i, j) = parseExpression(cells[static_cast<size_t>(j)], ctx, l.no);
        }
        return m;
    };
    f.mf.d = parseRows(dRows, "d");
    f.mf.h = parseRows(hRows, "h");

    if (lx || ly || !genSrc.empty()) {
        if (!lx || !ly || genSrc.empty())
            fail("SyntaxError", "module data needs 'x:', 'y:' and at least one 'gen:' line");
        if (static_cast<int>(genSrc.size()) != size)
            fail("SyntaxError", "the number of 'gen:' lines must match the size");
        ModuleData md;
        VarList ctxT{"t"};
        for (const auto& p : params) ctxT.push_back(p);
        md.plane.tvars = ctxT;
        md.plane.params = params;
        md.plane.x = parseExpression(lx->value, ctxT, lx->no);
        md.plane.y = parseExpression(ly->value, ctxT, ly->no);
        md.plane.exact = true;
        int maxDeg = std::max(md.plane.x.degreeIn("t"), md.plane.y.degreeIn("t"));
        for (const Line* l : genSrc) {
            MPoly g = parseExpression(l->value, VarList{"t"}, l->no);
            md.genOrders.push_back(tOrderOfPoly(g, *l));
            maxDeg = std::max(maxDeg, g.degreeIn("t"));
            md.gens.push_back(std::move(g));
        }
        md.plane.trunc = maxDeg + 2;
        md.trunc = maxDeg + 2;
        f.mf.gens = std::move(md);
    }
    return f;
}

namespace {

template <typename Fn>
auto loadFrom(const std::string& path, Fn parse) {
    std::ifstream in(path);
    if (!in) fail("FileError", "cannot open '" + path + "'");
    try {
        return parse(in);
    } catch (const Error& e) {
        // Re-attach the file name; what() already carries "code: message".
        std::string msg = e.what();
        const std::string prefix = e.code() + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        fail(e.code(), msg + " in '" + path + "'");
    }
}

} // namespace

BranchFile loadBranchFile(const std::string& path) {
    return loadFrom(path, [](std::istream& in) { return parseBranchFile(in); });
}

ModuleFile loadModuleFile(const std::string& path) {
    return loadFrom(path, [](std::istream& in) { return parseModuleFile(in); });
}

MFFile loadMFFile(const std::string& path) {
    return loadFrom(path, [](std::istream& in) { return parseMFFile(in); });
}

void writeBranchFile(std::ostream& out, const BranchFile& f) {
    if (!f.name.empty()) out << "name: " << f.name << "\n";
    if (!f.br.params.empty()) {
        out << "params:";
        for (const auto& p : f.br.params) out << " " << p;
        out << "\n";
    }
    if (!f.br.exact) out << "trunc: " << f.br.trunc << "\n";
    for (const auto& c : f.br.coords) out << "coord: " << c.str() << "\n";
}

void writeModuleFile(std::ostream& out, const ModuleFile& f) {
    if (!f.name.empty()) out << "name: " << f.name << "\n";
    if (!f.mod.plane.params.empty()) {
        out << "params:";
        for (const auto& p : f.mod.plane.params) out << " " << p;
        out << "\n";
    }
    out << "x: " << f.mod.plane.x.str() << "\n";
    out << "y: " << f.mod.plane.y.str() << "\n";
    for (const auto& g : f.mod.gens) out << "gen: " << g.str() << "\n";
}

void writeMFFile(std::ostream& out, const MFFile& f) {
    if (!f.name.empty()) out << "name: " << f.name << "\n";
    const auto& vars = f.mf.eq.vars;
    if (vars.size() > 2) {
        out << "params:";
        for (size_t k = 2; k < vars.size(); ++k) out << " " << vars[k];
        out << "\n";
    }
    out << "F: " << f.mf.eq.F.str() << "\n";
    out << "size: " << f.mf.size << "\n";
    auto writeRows = [&](const PolyMatrix& m, const char* which) {
        for (int i = 0; i < m.rows(); ++i) {
            out << which << ": ";
            for (int j = 0; j < m.cols(); ++j) {
                if (j) out << " | ";
                out << m.at(i, j).str();
            }
            out << "\n";
        }
    };
    writeRows(f.mf.d, "d");
    writeRows(f.mf.h, "h");
    if (f.mf.gens) {
        const ModuleData& md = *f.mf.gens;
        out << "x: " << md.plane.x.str() << "\n";
        out << "y: " << md.plane.y.str() << "\n";
        for (const auto& g : md.gens) out << "gen: " << g.str() << "\n";
    }
}

} // namespace cmf
