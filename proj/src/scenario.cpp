#include "g2az/scenario.hpp"

#include "g2az/dualtable.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace g2az {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> w;
    for (std::string t; in >> t;) w.push_back(t);
    return w;
}

} // namespace

std::pair<std::string, std::string> split_assertion(const std::string& text) {
    auto p = text.find("==");
    if (p == std::string::npos || text.find("==", p + 2) != std::string::npos)
        throw Error("assert_eq needs exactly one '=='");
    return {trim(text.substr(0, p)), trim(text.substr(p + 2))};
}

ScenarioRunner::ScenarioRunner() : db_(std::make_unique<IrrDb>()), ev_(std::make_unique<Evaluator>(*db_)) {}

void ScenarioRunner::run_line(const std::string& raw, int number, ScenarioReport& report) {
    std::string line = trim(raw);
    if (line.empty()) return;
    StepResult st;
    st.line = number;
    auto sp = line.find_first_of(" \t");
    st.kind = sp == std::string::npos ? line : line.substr(0, sp);
    st.text = sp == std::string::npos ? "" : trim(line.substr(sp));
    const std::string& k = st.kind;
    auto w = words(st.text);

    try {
        if (k == "case") {
            if (w.empty()) throw Error("case <tag>");
            std::map<std::string, bool> ram;
            for (std::size_t i = 1; i + 1 < w.size(); i += 2) {
                if (w[i] != "ramified" && w[i] != "unramified") throw Error("expected ramified|unramified <symbol>");
                ram[w[i + 1]] = w[i] == "ramified";
            }
            db_->register_case(w[0], ram);
        } else if (k == "symbol") {
            if (w.size() != 4 || w[1] != "order" || (w[3] != "ramified" && w[3] != "unramified"))
                throw Error("symbol <name> order <n|inf> ramified|unramified");
            db_->symbols()->declare(w[0], w[2] == "inf" ? 0 : std::stol(w[2]), w[3] == "ramified");
        } else if (k == "cuspidal") {
            if (w.size() < 3 || w[1] != "levi" || (w[2] != "a" && w[2] != "b"))
                throw Error("cuspidal <name> levi a|b [selfdual|nonselfdual]");
            db_->declare_cuspidal(w[0], w[2] == "a" ? Levi::Alpha : Levi::Beta, w.size() < 4 || w[3] == "selfdual");
        } else if (k == "supercuspidal") {
            if (w.size() != 1) throw Error("supercuspidal <name>");
            db_->declare_supercuspidal(w[0]);
        } else if (k == "hecke") {
            if (w.empty()) throw Error("hecke <type> [root|weight] [q_s<i>=<value>]...");
            HeckeSetup h;
            h.kind = parse_root_kind(w[0]);
            for (std::size_t i = 1; i < w.size(); ++i) {
                if (w[i] == "root") h.lattice = LatticeKind::Root;
                else if (w[i] == "weight") h.lattice = LatticeKind::Weight;
                else if (auto eq = w[i].find('='); eq != std::string::npos) {
                    std::string v = w[i].substr(eq + 1);
                    if (v != "symbolic") h.params[w[i].substr(0, eq)] = parse_rational(v);
                } else throw Error("unexpected '" + w[i] + "'");
            }
            ev_->set_hecke(h);
        } else if (k == "eval") {
            st.output = ev_->show(ev_->eval(st.text));
        } else if (k == "assert_eq") {
            auto [l, r] = split_assertion(st.text);
            Value a = ev_->eval(l);
            Value b = ev_->eval(r, Evaluator::levi_of(a));
            std::string diff;
            st.ok = ev_->equal(a, b, &diff);
            if (!st.ok) st.detail = diff;
        } else if (k == "assert_gap") {
            try {
                Value v = ev_->eval(st.text);
                st.ok = false;
                st.detail = "expected a database gap, got " + ev_->show(v);
            } catch (const DatabaseGap& e) {
                st.output = e.what();
            }
        } else if (k == "assert_error") {
            try {
                Value v = ev_->eval(st.text);
                st.ok = false;
                st.detail = "expected an error, got " + ev_->show(v);
            } catch (const DatabaseGap& e) {
                st.ok = false;
                st.detail = std::string("expected a rejection, got a database gap: ") + e.what();
            } catch (const Error& e) {
                st.output = e.what();
            }
        } else if (k == "consistency") {
            ConsistencyReport rep = db_->check_consistency();
            std::size_t bad = 0;
            for (const auto& it : rep.items)
                if (!it.ok) {
                    ++bad;
                    st.detail += (st.detail.empty() ? "" : "\n") + it.what + ": " + it.detail;
                }
            st.ok = bad == 0;
            st.output = std::to_string(rep.items.size()) + " checks, " + std::to_string(bad) + " failed";
        } else if (k == "tables") {
            ConsistencyReport rep = DualTable::load_default().cross_check();
            std::size_t bad = 0;
            for (const auto& it : rep.items)
                if (!it.ok) {
                    ++bad;
                    st.detail += (st.detail.empty() ? "" : "\n") + it.what + ": " + it.detail;
                }
            st.ok = bad == 0;
            st.output = std::to_string(rep.items.size()) + " checks, " + std::to_string(bad) + " failed";
        } else {
            throw Error("unknown directive '" + k + "'");
        }
    } catch (const ParseError& e) {
        st.ok = false;
        st.detail = e.what();
    } catch (const Error& e) {
        st.ok = false;
        st.detail = e.what();
    } catch (const std::logic_error& e) {
        st.ok = false;
        st.detail = std::string("bad argument: ") + e.what();
    }
    report.steps.push_back(std::move(st));
}

ScenarioReport ScenarioRunner::run_text(const std::string& text, const std::string& name) {
    ScenarioReport rep;
    rep.name = name;
    std::istringstream in(text);
    std::string raw, acc;
    int n = 0, start = 0;
    while (std::getline(in, raw)) {
        ++n;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        raw = trim(raw);
        if (acc.empty()) start = n;
        if (!raw.empty() && raw.back() == '\\') {
            acc += raw.substr(0, raw.size() - 1) + " ";
            continue;
        }
        run_line(acc + raw, start, rep);
        acc.clear();
    }
    if (!acc.empty()) run_line(acc, start, rep);
    return rep;
}

ScenarioReport run_scenario(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open scenario " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    ScenarioRunner r;
    return r.run_text(ss.str(), file.filename().string());
}

std::vector<std::filesystem::path> shipped_scenarios() {
    std::vector<std::filesystem::path> out;
    auto dir = data_dir() / "scenarios";
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".g2s") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace g2az
