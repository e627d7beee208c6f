#include "g2az/dualtable.hpp"

#include "g2az/eval.hpp"

#include <fstream>
#include <set>

namespace g2az {
namespace {

std::string squeeze(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') out += c;
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Split on sep at bracket depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip_parens(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error("expected (...): " + s);
    return s.substr(1, s.size() - 2);
}

ModuleTriple parse_triple(const std::string& s) {
    auto f = split_top(strip_parens(s), ',');
    if (f.size() != 3) throw Error("a module triple has three entries: " + s);
    return {f[0], f[1], f[2]};
}

std::pair<int, std::string> take_sign(std::string s) {
    s = trim(s);
    if (!s.empty() && s[0] == '-') return {-1, trim(s.substr(1))};
    return {1, s};
}

GroupSide parse_side(std::string s) {
    GroupSide g;
    s = trim(s);
    if (s.size() > 2 && s.substr(s.size() - 2) == " U") {
        g.unitary = true;
        s = trim(s.substr(0, s.size() - 2));
    }
    g.text = s;
    return g;
}

std::string key_of(const TableBlock& b) {
    std::string k = b.case_tag;
    for (const auto& [n, r] : b.ramified) k += (r ? " ramified " : " unramified ") + n;
    return k;
}

} // namespace

StandardModuleLabel parse_module_label(const std::string& text) {
    std::string s = squeeze(text);
    if (s.rfind("M(", 0) == 0) s.erase(0, 1);
    StandardModuleLabel m;
    if (s.rfind("((", 0) == 0) {
        for (const auto& part : split_top(strip_parens(s), ',')) m.parts.push_back(parse_triple(part));
    } else {
        m.parts.push_back(parse_triple(s));
    }
    return m;
}

std::string StandardModuleLabel::str() const {
    auto one = [](const ModuleTriple& t) { return "(" + t.semisimple + ", " + t.nilpotent + ", " + t.rep + ")"; };
    if (parts.size() == 1) return "M" + one(parts[0]);
    std::string s = "M(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + one(parts[i]);
    return s + ")";
}

DualTable DualTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    DualTable t;
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::string line = trim(raw);
        if (line.empty()) continue;
        std::string where = file.filename().string() + ":" + std::to_string(n) + ": ";
        try {
            if (line.rfind("block ", 0) == 0) {
                auto f = split_top(line.substr(6), ';');
                if (f.size() < 3) throw Error("block <name> ; case <tag> ; ... ; verified|unverified");
                TableBlock b;
                b.name = trim(f[0]);
                std::string c = trim(f[1]);
                if (c.rfind("case ", 0) != 0) throw Error("second field must be 'case <tag>'");
                b.case_tag = trim(c.substr(5));
                for (std::size_t i = 2; i + 1 < f.size(); ++i) {
                    std::string o = trim(f[i]);
                    if (o.rfind("ramified ", 0) == 0) b.ramified[trim(o.substr(9))] = true;
                    else if (o.rfind("unramified ", 0) == 0) b.ramified[trim(o.substr(11))] = false;
                    else throw Error("unknown block option '" + o + "'");
                }
                std::string v = trim(f.back());
                if (v != "verified" && v != "unverified") throw Error("last field must be verified or unverified");
                b.verified = v == "verified";
                for (const auto& o : t.blocks_)
                    if (o.name == b.name) throw Error("duplicate block " + b.name);
                t.blocks_.push_back(b);
            } else if (line.rfind("row ", 0) == 0) {
                if (t.blocks_.empty()) throw Error("row before any block");
                auto f = split_top(line.substr(4), ';');
                if (f.size() != 2) throw Error("row <irr> => <irr> ; <module> => <module>");
                auto g = f[0].find("=>"), h = f[1].find("=>");
                if (g == std::string::npos || h == std::string::npos) throw Error("missing '=>'");
                DualPair p;
                p.line = n;
                p.left = parse_side(f[0].substr(0, g));
                auto [sg, rt] = take_sign(f[0].substr(g + 2));
                p.right = parse_side(rt);
                p.hecke_left = parse_module_label(f[1].substr(0, h));
                auto [sh, mr] = take_sign(f[1].substr(h + 2));
                p.hecke_right = parse_module_label(mr);
                if (sg != sh) throw Error("group and module sides carry different signs");
                p.sign = sg;
                t.blocks_.back().rows.push_back(p);
            } else {
                throw Error("expected 'block' or 'row'");
            }
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
    }
    return t;
}

DualTable DualTable::load_default() { return load(data_dir() / "tables.dat"); }

const TableBlock& DualTable::block(const std::string& name) const {
    for (const auto& b : blocks_)
        if (b.name == name) return b;
    throw Error("unknown table block '" + name + "'");
}

SignedModule DualTable::lookup_dual(const StandardModuleLabel& m, const std::string& name) const {
    const TableBlock& b = block(name);
    for (const auto& r : b.rows) {
        if (r.hecke_left == m) return {r.sign, r.hecke_right};
        if (r.hecke_right == m) return {r.sign, r.hecke_left};
    }
    throw Error("no module " + m.str() + " in block " + name);
}

ConsistencyReport DualTable::cross_check() const {
    ConsistencyReport rep;
    std::map<std::string, std::unique_ptr<IrrDb>> dbs;
    std::map<std::string, std::map<IrrLabel, int>> seen;

    for (const auto& b : blocks_) {
        std::string key = key_of(b);
        auto& db = dbs[key];
        if (!db) {
            db = std::make_unique<IrrDb>();
            db->register_case(b.case_tag, b.ramified);
        }
        Evaluator ev(*db);
        std::set<std::string> mods;
        for (const auto& r : b.rows) {
            std::string tag = "[" + b.name + " line " + std::to_string(r.line) + "] ";
            CheckItem g{tag + "D(" + r.left.text + ") = " + (r.sign < 0 ? "-" : "") + r.right.text, true, ""};
            try {
                IrrLabel l = Evaluator::single_irr(ev.eval_g2(r.left.text), r.left.text);
                IrrLabel rr = Evaluator::single_irr(ev.eval_g2(r.right.text), r.right.text);
                SignedIrr d = db->dual_of(l);
                if (!(d.label == rr) || d.sign != r.sign) {
                    g.ok = false;
                    g.detail = "engine gives " + d.str();
                }
                SignedIrr dd = db->dual_of(rr);
                if (!(dd.label == l) || dd.sign != r.sign) {
                    g.ok = false;
                    g.detail += (g.detail.empty() ? "" : "; ") + std::string("engine gives D(right) = ") + dd.str();
                }
                seen[key][l]++;
                if (!(rr == l)) seen[key][rr]++;
            } catch (const Error& e) {
                g.ok = false;
                g.detail = e.what();
            }
            rep.items.push_back(g);

            CheckItem inv{tag + "lookup_dual is an involution on " + r.hecke_left.str(), true, ""};
            SignedModule a = lookup_dual(r.hecke_left, b.name);
            SignedModule c = lookup_dual(a.label, b.name);
            if (!(c.label == r.hecke_left) || a.sign * c.sign != 1) {
                inv.ok = false;
                inv.detail = "returns " + c.str();
            }
            rep.items.push_back(inv);

            for (const auto* m : {&r.hecke_left, &r.hecke_right}) {
                if (m == &r.hecke_right && r.hecke_right == r.hecke_left) continue;
                if (!mods.insert(m->str()).second)
                    rep.items.push_back({tag + "module " + m->str() + " occurs once in its block", false, "repeated"});
            }

            if (b.verified) {
                CheckItem u{tag + "(U) closed under duality for " + r.left.text, r.left.unitary == r.right.unitary, ""};
                if (!u.ok) u.detail = std::string("left ") + (r.left.unitary ? "U" : "not U") + ", right " +
                                      (r.right.unitary ? "U" : "not U");
                rep.items.push_back(u);
            }
        }
    }

    for (const auto& [key, db] : dbs) {
        for (const auto& l : db->labels()) {
            int k = 0;
            if (auto it = seen[key].find(l); it != seen[key].end()) k = it->second;
            CheckItem c{"[" + key + "] " + l.str() + " appears in exactly one table row", k == 1, ""};
            if (k != 1) c.detail = "appears " + std::to_string(k) + " times";
            rep.items.push_back(c);
        }
    }
    return rep;
}

} // namespace g2az
