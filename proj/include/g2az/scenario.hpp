// Scenario files (.g2s): declarations, evaluations and assertions run
// against a fresh database.
//
//   case <tag> [ramified <sym> | unramified <sym>]...
//   symbol <name> order <n|inf> ramified|unramified
//   cuspidal <name> levi a|b [selfdual|nonselfdual]
//   supercuspidal <name>
//   hecke <A1|A1xA1|A2|C2|G2> [root|weight] [q_s<i>=<value>]...
//   eval <expr>
//   assert_eq <expr> == <expr>     right side read with the left side's Levi
//   assert_gap <expr>              must stop on missing database entries
//   assert_error <expr>            must be rejected
//   consistency                    composition data against the geometric lemma
//   tables                         dual pairs against the table file
//
// '#' starts a comment; a trailing '\' continues the line.
#pragma once

#include "g2az/eval.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace g2az {

struct StepResult {
    int line = 0;
    std::string kind;    // directive keyword
    std::string text;    // directive argument
    bool ok = true;
    std::string output;  // eval result
    std::string detail;  // failure explanation
};

struct ScenarioReport {
    std::string name;
    std::vector<StepResult> steps;
    bool ok() const {
        for (const auto& s : steps)
            if (!s.ok) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& s : steps) n += !s.ok;
        return n;
    }
};

class ScenarioRunner {
public:
    ScenarioRunner();

    // One directive line; appends to report.
    void run_line(const std::string& line, int number, ScenarioReport& report);
    ScenarioReport run_text(const std::string& text, const std::string& name = "<text>");

    IrrDb& db() { return *db_; }
    Evaluator& evaluator() { return *ev_; }

private:
    std::unique_ptr<IrrDb> db_;
    std::unique_ptr<Evaluator> ev_;
};

ScenarioReport run_scenario(const std::filesystem::path& file);
// data_dir()/scenarios/*.g2s in name order.
std::vector<std::filesystem::path> shipped_scenarios();

// Split "a == b" at the top-level "==".
std::pair<std::string, std::string> split_assertion(const std::string& text);

} // namespace g2az
