#include "cmf/cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "cmf/errors.hpp"
#include "cmf/linalg.hpp"

namespace cmf {

SecantCone secantCone(const StandardBranch& b) {
    SecantCone cone;
    cone.n = b.dim();
    cone.e = b.e;
    cone.window = b.br.exact ? 0 : b.br.trunc;

    std::set<int> support = b.secondarySupport();
    // direction (normalized) -> plane under construction
    std::map<std::vector<Rat>, ConePlane> found;

    for (int k = 1; k < cone.e; ++k) {
        int jump = -1;
        for (int j : support) {
            if (j < cone.e + 1) continue;
            if ((static_cast<long>(k) * j) % cone.e == 0) continue;
            jump = j;
            break;
        }
        if (jump < 0) {
            // With exact data a residue always finds a jump: otherwise the
            // support would share a factor with e against primitivity.
            if (b.br.exact)
                fail("VerificationFailed", "no jump for residue " + std::to_string(k) + " on exact data");
            cone.truncatedResidues.push_back(k);
            continue;
        }
        std::vector<Rat> col = b.supportColumn(jump);
        std::vector<Rat> dir;
        dir.push_back(Rat(0));
        for (const auto& c : col) dir.push_back(c);
        // Normalize: first nonzero entry becomes 1.
        Rat lead(0);
        for (const auto& c : dir)
            if (!c.isZero()) { lead = c; break; }
        if (lead.isZero())
            fail("VerificationFailed", "zero jump column at exponent " + std::to_string(jump));
        for (auto& c : dir) c /= lead;

        auto [it, fresh] = found.try_emplace(dir);
        if (fresh) {
            it->second.direction = dir;
            it->second.jump = jump;
        }
        it->second.residues.push_back(k);
        it->second.jump = std::min(it->second.jump, jump);
    }

    for (auto& [dir, plane] : found) {
        std::sort(plane.residues.begin(), plane.residues.end());
        cone.planes.push_back(plane);
    }
    // Deterministic order: by jump exponent, then by direction.
    std::sort(cone.planes.begin(), cone.planes.end(), [](const ConePlane& a, const ConePlane& b) {
        if (a.jump != b.jump) return a.jump < b.jump;
        return a.direction < b.direction;
    });
    return cone;
}

std::string ProjectionPlane::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) os << ",";
        os << z[i].str();
    }
    os << ")";
    return os.str();
}

static Rat formAt(const std::vector<Rat>& l, const std::vector<Rat>& v) {
    Rat acc(0);
    for (size_t i = 0; i < l.size(); ++i) acc += l[i] * v[i];
    return acc;
}

bool isTransversal(const SecantCone& cone, const ProjectionPlane& L) {
    if (L.n() != cone.n || static_cast<int>(L.z.size()) != 2 * cone.n)
        fail("DimensionMismatch", "projection plane lives in the wrong dimension");
    std::vector<Rat> tangent(static_cast<size_t>(cone.n), Rat(0));
    tangent[0] = Rat(1);
    std::vector<Rat> l1 = L.l1(), l2 = L.l2();
    for (const auto& plane : cone.planes) {
        Rat det = formAt(l1, tangent) * formAt(l2, plane.direction) -
                  formAt(l1, plane.direction) * formAt(l2, tangent);
        if (det.isZero()) return false;
    }
    return true;
}

namespace {

// All integer vectors of the given length with max-norm exactly r, in the
// frozen deterministic order.
std::vector<std::vector<int>> shell(int len, int r) {
    std::vector<int> values;
    for (int v = r; v >= -r; --v) values.push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(len), 0);
    // Odometer over the descending value sequence yields descending
    // lexicographic order.
    std::vector<size_t> idx(static_cast<size_t>(len), 0);
    while (true) {
        for (int i = 0; i < len; ++i) cur[static_cast<size_t>(i)] = values[idx[static_cast<size_t>(i)]];
        int maxAbs = 0;
        for (int v : cur) maxAbs = std::max(maxAbs, std::abs(v));
        if (maxAbs == r) out.push_back(cur);
        int p = len - 1;
        while (p >= 0 && ++idx[static_cast<size_t>(p)] == values.size()) {
            idx[static_cast<size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        long la = 0, lb = 0;
        for (int v : a) la += std::abs(v);
        for (int v : b) lb += std::abs(v);
        return la < lb;
    });
    return out;
}

bool rowsIndependent(const ProjectionPlane& L) {
    QMatrix m(2, L.n());
    for (int j = 0; j < L.n(); ++j) {
        m.at(0, j) = L.z[static_cast<size_t>(j)];
        m.at(1, j) = L.z[static_cast<size_t>(L.n() + j)];
    }
    return rankOf(std::move(m)) == 2;
}

} // namespace

std::vector<ProjectionPlane> pickGenericPlanes(const SecantCone& cone, int count) {
    std::vector<ProjectionPlane> out;
    for (int r = 1; r <= 4 && static_cast<int>(out.size()) < count; ++r) {
        // Keep the enumerated shell volume bounded; radius 1 suffices for
        // every non-degenerate cone met in practice.
        double volume = std::pow(2.0 * r + 1.0, 2.0 * cone.n);
        if (r > 1 && volume > 2e6)
            fail("VerificationFailed", "no transversal plane within the enumerable radius");
        for (const auto& v : shell(2 * cone.n, r)) {
            ProjectionPlane L;
            L.z.reserve(v.size());
            for (int c : v) L.z.emplace_back(static_cast<long>(c));
            if (!rowsIndependent(L)) continue;
            if (!isTransversal(cone, L)) continue;
            out.push_back(std::move(L));
            if (static_cast<int>(out.size()) >= count) break;
        }
    }
    if (static_cast<int>(out.size()) < count)
        fail("VerificationFailed", "no transversal plane with coefficients up to max-norm 4");
    return out;
}

} // namespace cmf
