// Case files: one case per file, line oriented.
//
//   case <tag> [alias <tag>...]
//   symbol <name> order <n|inf> ramified|unramified
//   cuspidal <name> levi a|b [selfdual|nonselfdual]
//   supercuspidal <name>
//   decomp <induced> = <sum> ; length <n> ; paper|derived "<note>"
//   jacquet <label> ; r_a = <sum> ; r_b = <sum> ; paper|derived "<note>"
//   single-wall <tau> ; sub <label> ; quotient <label> ; derived "<note>"
//
// '#' starts a comment, a trailing '\' joins the next line.  Principal series
// decompositions implied by decomp pairs are added at the end of the file.
#include "g2az/eval.hpp"
#include "g2az/irrdb.hpp"

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

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') quoted = !quoted;
        if (c == sep && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> w;
    for (std::string t; in >> t;) w.push_back(t);
    return w;
}

struct Line {
    std::string text;
    int number = 0;
};

std::vector<Line> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    std::vector<Line> out;
    std::string raw, acc;
    int n = 0, start = 0;
    while (std::getline(in, raw)) {
        ++n;
        bool quoted = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == '"') quoted = !quoted;
            if (raw[i] == '#' && !quoted) {
                raw.resize(i);
                break;
            }
        }
        std::string t = trim(raw);
        if (acc.empty()) start = n;
        if (!t.empty() && t.back() == '\\') {
            acc += t.substr(0, t.size() - 1) + " ";
            continue;
        }
        acc += t;
        if (!trim(acc).empty()) out.push_back({trim(acc), start});
        acc.clear();
    }
    if (!trim(acc).empty()) out.push_back({trim(acc), start});
    return out;
}

std::string keyword(const std::string& line) {
    auto sp = line.find_first_of(" \t");
    return sp == std::string::npos ? line : line.substr(0, sp);
}

std::string rest(const std::string& line) {
    auto sp = line.find_first_of(" \t");
    return sp == std::string::npos ? "" : trim(line.substr(sp));
}

Provenance parse_provenance(const std::string& f) {
    Provenance p;
    std::string k = keyword(f);
    if (k == "paper") {
        p.source = Provenance::Source::Paper;
    } else if (k == "derived") {
        p.source = Provenance::Source::Derived;
    } else {
        throw Error("expected paper or derived, got '" + f + "'");
    }
    std::string note = rest(f);
    if (note.size() >= 2 && note.front() == '"' && note.back() == '"') note = note.substr(1, note.size() - 2);
    p.note = note;
    return p;
}

std::vector<std::string> header_tags(const std::filesystem::path& file) {
    for (const auto& l : read_lines(file)) {
        auto w = words(l.text);
        if (w.empty() || w[0] != "case") break;
        std::vector<std::string> tags;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] != "alias") tags.push_back(w[i]);
        return tags;
    }
    return {};
}

} // namespace

std::map<std::string, std::filesystem::path> case_files() {
    std::map<std::string, std::filesystem::path> out;
    auto dir = data_dir() / "cases";
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& ent : std::filesystem::directory_iterator(dir)) {
        if (ent.path().extension() != ".case") continue;
        for (const auto& t : header_tags(ent.path())) out[t] = ent.path();
    }
    return out;
}

void IrrDb::register_case(const std::string& tag, const std::map<std::string, bool>& ramified) {
    auto files = case_files();
    auto it = files.find(tag);
    if (it == files.end()) {
        std::string known;
        for (const auto& [t, p] : files) known += " " + t;
        throw Error("unknown case '" + tag + "'; known:" + known);
    }
    register_case_file(it->second, ramified);
}

void IrrDb::register_case_file(const std::filesystem::path& file, const std::map<std::string, bool>& ramified) {
    auto lines = read_lines(file);
    if (lines.empty() || keyword(lines[0].text) != "case") throw Error(file.string() + ": first line must be 'case <tag>'");
    std::string tag = words(lines[0].text).at(1);
    if (has_case(tag)) return;

    Evaluator ev(*this);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        std::string where = file.filename().string() + ":" + std::to_string(ln.number) + ": ";
        try {
            std::string k = keyword(ln.text);
            if (k == "symbol") {
                auto w = words(ln.text);
                if (w.size() != 5 || w[2] != "order") throw Error("symbol <name> order <n|inf> ramified|unramified");
                long order = w[3] == "inf" ? 0 : std::stol(w[3]);
                if (w[4] != "ramified" && w[4] != "unramified") throw Error("expected ramified or unramified");
                auto o = ramified.find(w[1]);
                symbols_->declare(w[1], order, o != ramified.end() ? o->second : w[4] == "ramified");
            } else if (k == "cuspidal") {
                auto w = words(ln.text);
                if (w.size() < 4 || w[2] != "levi" || (w[3] != "a" && w[3] != "b"))
                    throw Error("cuspidal <name> levi a|b [selfdual|nonselfdual]");
                bool sd = w.size() < 5 || w[4] == "selfdual";
                declare_cuspidal(w[1], w[3] == "a" ? Levi::Alpha : Levi::Beta, sd);
            } else if (k == "supercuspidal") {
                auto w = words(ln.text);
                if (w.size() != 2) throw Error("supercuspidal <name>");
                declare_supercuspidal(w[1]);
            } else if (k == "decomp") {
                auto f = split(rest(ln.text), ';');
                if (f.size() != 3) throw Error("decomp <induced> = <sum> ; length <n> ; <provenance>");
                auto eq = split(f[0], '=');
                if (eq.size() != 2) throw Error("decomp needs exactly one '='");
                G2Sum lhs = ev.eval_g2(eq[0]);
                if (lhs.size() != 1 || lhs.begin()->second != 1) throw Error("left side must be one induced object");
                DecompositionEntry d;
                d.induced = lhs.begin()->first;
                d.factors = ev.eval_g2(eq[1]);
                auto lw = words(f[1]);
                if (lw.size() != 2 || lw[0] != "length") throw Error("expected 'length <n>'");
                d.length = std::stol(lw[1]);
                d.prov = parse_provenance(f[2]);
                d.case_tag = tag;
                add_decomposition(d);
            } else if (k == "jacquet") {
                auto f = split(rest(ln.text), ';');
                if (f.size() != 4) throw Error("jacquet <label> ; r_a = <sum> ; r_b = <sum> ; <provenance>");
                JacquetEntry e;
                e.label = Evaluator::single_irr(ev.eval_g2(f[0]), f[0]);
                for (int j = 1; j <= 2; ++j) {
                    auto eq = split(f[j], '=');
                    if (eq.size() != 2 || (eq[0] != "r_a" && eq[0] != "r_b")) throw Error("expected r_a = ... / r_b = ...");
                    Levi l = eq[0] == "r_a" ? Levi::Alpha : Levi::Beta;
                    (l == Levi::Alpha ? e.r_alpha : e.r_beta) = ev.eval_gl2(eq[1], l);
                }
                e.prov = parse_provenance(f[3]);
                e.case_tag = tag;
                add_jacquet(e);
            } else if (k == "single-wall") {
                auto f = split(rest(ln.text), ';');
                if (f.size() != 4 || keyword(f[1]) != "sub" || keyword(f[2]) != "quotient")
                    throw Error("single-wall <tau> ; sub <label> ; quotient <label> ; <provenance>");
                Value v = ev.eval(f[0]);
                auto* ts = std::get_if<TorusSum>(&v);
                if (!ts || ts->size() != 1 || ts->begin()->second != 1) throw Error("expected one torus character: " + f[0]);
                IrrLabel sub = Evaluator::single_irr(ev.eval_g2(rest(f[1])), f[1]);
                IrrLabel quot = Evaluator::single_irr(ev.eval_g2(rest(f[2])), f[2]);
                register_single_wall(ts->begin()->first, sub, quot, parse_provenance(f[3]), tag);
            } else if (k == "case") {
                throw Error("only one case per file");
            } else {
                throw Error("unknown directive '" + k + "'");
            }
        } catch (const ParseError& e) {
            throw Error(where + e.what());
        } catch (const DatabaseGap& e) {
            throw Error(where + e.what());
        } catch (const Error& e) {
            throw Error(where + e.what());
        } catch (const std::invalid_argument&) {
            throw Error(where + "bad number");
        }
    }
    derive_principal_series(tag);
    cases_.push_back(tag);
}

} // namespace g2az
