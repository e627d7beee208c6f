// Dual pairs of standard-module labels (t, e, rho) next to the matching
// group-side pairs, with a cross-check against the duality engine.
#pragma once

#include "g2az/irrdb.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace g2az {

struct ModuleTriple {
    std::string semisimple, nilpotent, rep;  // whitespace removed
    bool operator==(const ModuleTriple&) const = default;
};

// One triple, or an ordered pair of A1 triples in the SO4 block.
struct StandardModuleLabel {
    std::vector<ModuleTriple> parts;
    std::string str() const;
    bool operator==(const StandardModuleLabel&) const = default;
};

StandardModuleLabel parse_module_label(const std::string& text);

struct SignedModule {
    int sign = 1;
    StandardModuleLabel label;
    std::string str() const { return (sign < 0 ? "-" : "") + label.str(); }
};

struct GroupSide {
    std::string text;  // as written, evaluated against the block's case
    bool unitary = false;
};

struct DualPair {
    GroupSide left, right;
    int sign = 1;  // D(left) = sign * right, and D(M_left) = sign * M_right
    StandardModuleLabel hecke_left, hecke_right;
    int line = 0;
};

struct TableBlock {
    std::string name;
    std::string case_tag;
    std::map<std::string, bool> ramified;  // symbol overrides
    bool verified = false;
    std::vector<DualPair> rows;
};

class DualTable {
public:
    static DualTable load(const std::filesystem::path& file);
    static DualTable load_default();  // data_dir()/tables.dat

    const std::vector<TableBlock>& blocks() const { return blocks_; }
    const TableBlock& block(const std::string& name) const;

    SignedModule lookup_dual(const StandardModuleLabel& m, const std::string& block) const;
    SignedModule lookup_dual(const std::string& m, const std::string& block) const {
        return lookup_dual(parse_module_label(m), block);
    }

    // Group-side duals against IrrDb::dual_of, involutivity of lookup_dual,
    // coverage of each case's labels and (U) closure on verified blocks.
    ConsistencyReport cross_check() const;

private:
    std::vector<TableBlock> blocks_;
};

} // namespace g2az
