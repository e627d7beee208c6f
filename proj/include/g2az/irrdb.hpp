// Registry of composition series and Jacquet data of irreducible
// representations, loaded per case from text files.
#pragma once

#include "g2az/groth.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace g2az {

struct Provenance {
    enum class Source { Paper, Derived };
    Source source = Source::Paper;
    std::string note;
    std::string str() const { return (source == Source::Paper ? "paper: " : "derived: ") + note; }
};

struct DecompositionEntry {
    G2Class induced;  // canonical
    G2Sum factors;    // irreducible labels
    long length = 0;
    Provenance prov;
    std::string case_tag;
};

struct JacquetEntry {
    IrrLabel label;
    Gl2Sum r_alpha, r_beta;
    Provenance prov;
    std::string case_tag;
};

struct CuspidalInfo {
    Levi levi = Levi::Alpha;
    bool selfdual = true;
};

struct CheckItem {
    std::string what;
    bool ok = true;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<CheckItem> items;
    bool ok() const {
        for (const auto& i : items)
            if (!i.ok) return false;
        return true;
    }
};

struct SignedIrr {
    int sign = 1;
    IrrLabel label;
    std::string str() const { return (sign < 0 ? "-" : "") + label.str(); }
};

// Directory holding cases/, scenarios/ and tables.dat.  G2AZ_DATA_DIR
// overrides the compiled-in default.
std::filesystem::path data_dir();

class IrrDb {
public:
    explicit IrrDb(SymbolGroupPtr symbols = std::make_shared<SymbolGroup>());

    const SymbolGroupPtr& symbols() const { return symbols_; }

    void declare_cuspidal(const std::string& name, Levi levi, bool selfdual);
    const CuspidalInfo* cuspidal(const std::string& name) const;
    // Supercuspidal of G2 itself; all proper Jacquet modules vanish.
    void declare_supercuspidal(const std::string& name);
    bool is_supercuspidal(const std::string& name) const { return g2_cusps_.count(name) > 0; }

    void add_decomposition(DecompositionEntry e);
    void add_jacquet(JacquetEntry e);
    // I_gamma(delta(c)) + I_gamma(c o det) = I(chi) for every registered pair.
    void derive_principal_series(const std::string& case_tag);
    // I(tau) reducible along exactly one root: its two factors are told apart
    // by the sign of nu^{+-1} on that root across the Weyl orbit.  sub is the
    // factor whose Jacquet module contains tau.  Registers I(tau) = sub + quot,
    // each reducible I_gamma(c) seen in r_gamma I(tau) as a single factor, and
    // Jacquet data for labels that do not carry their own.
    void register_single_wall(const TorusCharacter& tau, const IrrLabel& sub, const IrrLabel& quot,
                              const Provenance& prov, const std::string& case_tag);

    const DecompositionEntry* decomposition(const G2Class& x) const;
    const JacquetEntry* jacquet(const IrrLabel& l) const;

    // Labels with Jacquet data or occurring in a decomposition.
    std::vector<IrrLabel> labels() const;
    std::vector<IrrLabel> labels(const std::string& case_tag) const;
    const std::vector<DecompositionEntry>& decompositions() const { return decomps_; }
    const std::vector<std::string>& cases() const { return cases_; }
    bool has_case(const std::string& tag) const;

    // Load data_dir()/cases/<file> whose header names this tag.
    // ramified: per-symbol override of the ramification declared in the file.
    void register_case(const std::string& tag, const std::map<std::string, bool>& ramified = {});
    void register_case_file(const std::filesystem::path& file, const std::map<std::string, bool>& ramified = {});

    ConsistencyReport check_consistency() const;

    // Dual of a single registered irreducible, resolved to +-label.
    SignedIrr dual_of(const IrrLabel& l) const;

private:
    SymbolGroupPtr symbols_;
    std::map<std::string, CuspidalInfo> cusps_;
    std::set<std::string> g2_cusps_;
    std::vector<DecompositionEntry> decomps_;
    std::map<G2Class, std::size_t> decomp_index_;
    std::map<IrrLabel, JacquetEntry> jacquet_;
    std::vector<std::string> cases_;
    std::vector<std::pair<G2Class, G2Sum>> ps_conflicts_;
};

// Case tag -> file path, scanning data_dir()/cases.
std::map<std::string, std::filesystem::path> case_files();

// Sign of the unique root gamma > 0 with t o gamma^v = nu^{+-1}; 0 if there
// is no such root or more than one.
int wall_sign(const TorusCharacter& t);

} // namespace g2az
