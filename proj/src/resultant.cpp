#include "cmf/resultant.hpp"

#include "cmf/errors.hpp"
#include "cmf/polymatrix.hpp"

namespace cmf {

MPoly sylvesterResultant(const MPoly& f, const MPoly& g, const std::string& var) {
    std::vector<MPoly> fc = f.coeffsIn(var);
    std::vector<MPoly> gc = g.coeffsIn(var);
    int p = static_cast<int>(fc.size()) - 1;
    int q = static_cast<int>(gc.size()) - 1;
    while (p >= 0 && fc[static_cast<size_t>(p)].isZero()) --p;
    while (q >= 0 && gc[static_cast<size_t>(q)].isZero()) --q;
    if (p < 1 || q < 1)
        fail("ZeroDegree", "resultant requires positive degree in '" + var + "' for both inputs");
    const VarList& rest = fc[0].vars();
    PolyMatrix s(p + q, p + q, rest);
    // q rows of f-coefficients, then p rows of g-coefficients, descending powers.
    for (int i = 0; i < q; ++i)
        for (int k = 0; k <= p; ++k)
            s.at(i, i + k) = fc[static_cast<size_t>(p - k)];
    for (int i = 0; i < p; ++i)
        for (int k = 0; k <= q; ++k)
            s.at(q + i, i + k) = gc[static_cast<size_t>(q - k)];
    return s.det();
}

} // namespace cmf
