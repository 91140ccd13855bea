#pragma once

#include <iosfwd>
#include <string>

#include "cmf/branch.hpp"
#include "cmf/matfact.hpp"

namespace cmf {

// Line-oriented input files. Every file is a sequence of `key: value`
// lines; `#` starts a comment and blank lines are skipped. Values are
// arithmetic expressions over the declared context.
//
// .branch   name:, params: (optional), trunc: (optional window), coord:+
// .module   name:, params: (optional), x:, y:, gen:+
// .mf       name:, params: (optional), F:, size:, d: rows, h: rows,
//           and optionally x:, y:, gen:+ to enable the relation check;
//           matrix rows list entries separated by '|'.

struct BranchFile {
    std::string name;
    Branch br;
};

struct ModuleFile {
    std::string name;
    ModuleData mod;
};

struct MFFile {
    std::string name;
    MatrixFactorization mf;
};

BranchFile parseBranchFile(std::istream& in);
ModuleFile parseModuleFile(std::istream& in);
MFFile parseMFFile(std::istream& in);

BranchFile loadBranchFile(const std::string& path);
ModuleFile loadModuleFile(const std::string& path);
MFFile loadMFFile(const std::string& path);

void writeBranchFile(std::ostream& out, const BranchFile& f);
void writeModuleFile(std::ostream& out, const ModuleFile& f);
void writeMFFile(std::ostream& out, const MFFile& f);

} // namespace cmf
