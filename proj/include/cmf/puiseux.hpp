#pragma once

#include <string>
#include <vector>

#include "cmf/branch.hpp"
#include "cmf/semigroup.hpp"

namespace cmf {

struct PuiseuxData {
    int e = 0;                        // multiplicity
    std::vector<int> charExponents;   // beta_1 < ... < beta_g
    std::vector<int> gcdSeq;          // d_0 = e, d_i = gcd(d_{i-1}, beta_i); ends at 1
    std::vector<long> sgGenerators;   // semigroup generators derived from the exponents
    std::vector<int> multSequence;    // blow-up multiplicities down to the first 1
    long delta = 0;                   // sum m(m-1)/2 over the multiplicity sequence
    long mu = 0;                      // 2 * delta for an irreducible plane germ
    long conductor = 0;               // 2 * delta
    std::vector<std::string> warnings;
};

// Characteristic data of a standardized parameter-free plane branch.
// The gcd chain must reach 1 inside the available support; otherwise
// TruncationTooSmall is raised (with exact input this cannot happen for a
// primitive parametrization).
PuiseuxData puiseuxCharacteristic(const StandardBranch& plane);

struct DeltaReport {
    long deltaGaps = 0;     // gap count of the value semigroup
    long deltaMultSeq = 0;  // infinitely-near-point formula
    bool agree = false;
    SemigroupData sg;
    PuiseuxData px;
};

DeltaReport deltaConsistency(const StandardBranch& plane);

// Multiplicity sequence of the model branch (t^e, sum of t^beta over the
// given exponents), computed by repeated blow-up.
std::vector<int> multiplicitySequenceFromExponents(int e, const std::vector<int>& exps);

} // namespace cmf
