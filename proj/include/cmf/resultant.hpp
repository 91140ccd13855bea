#pragma once

#include "cmf/mpoly.hpp"

namespace cmf {

// Resultant of f and g with respect to `var`, as the determinant of the
// Sylvester matrix over the remaining variables. Both degrees in `var`
// must be positive.
MPoly sylvesterResultant(const MPoly& f, const MPoly& g, const std::string& var);

} // namespace cmf
