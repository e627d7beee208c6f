// g2az: command line front end.
//
//   g2az eval <expr> [--case TAG] [--ramified SYM] [--unramified SYM]
//   g2az dualize <irr> --case TAG
//   g2az verify <file.g2s>...
//   g2az verify-all
//   g2az hecke mul|star|inv <word>... [--type G2] [--lattice root|weight] [--param q_s0=v|symbolic]
//
// Exit status: 0 ok, 1 failed assertion or missing data, 2 usage or input error.
#include "g2az/dualtable.hpp"
#include "g2az/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::json;
using namespace g2az;

namespace {

struct Options {
    bool json_out = false;
    std::string data_dir;
    std::string expr;
    std::vector<std::string> cases, ramified, unramified;
    std::vector<std::string> files;
    std::string hecke_op;
    std::vector<std::string> words;
    std::string type = "G2", lattice = "root";
    std::vector<std::string> params;
};

json step_json(const StepResult& s) {
    json j{{"line", s.line}, {"kind", s.kind}, {"text", s.text}, {"ok", s.ok}};
    if (!s.output.empty()) j["output"] = s.output;
    if (!s.detail.empty()) j["detail"] = s.detail;
    return j;
}

// Runs a directive and rethrows its failure as an exception.
void must(ScenarioRunner& r, const std::string& line) {
    ScenarioReport rep;
    r.run_line(line, 0, rep);
    if (!rep.ok()) throw Error(rep.steps.back().detail);
}

void setup_cases(ScenarioRunner& r, const Options& o) {
    std::string over;
    for (const auto& s : o.ramified) over += " ramified " + s;
    for (const auto& s : o.unramified) over += " unramified " + s;
    for (const auto& c : o.cases) must(r, "case " + c + over);
}

int print_value(const Options& o, const std::string& in, const std::string& out) {
    if (o.json_out)
        std::cout << json{{"input", in}, {"result", out}}.dump(2) << "\n";
    else
        std::cout << out << "\n";
    return 0;
}

int cmd_eval(const Options& o) {
    ScenarioRunner r;
    setup_cases(r, o);
    Evaluator& ev = r.evaluator();
    return print_value(o, o.expr, ev.show(ev.eval(o.expr)));
}

int cmd_dualize(const Options& o) {
    ScenarioRunner r;
    setup_cases(r, o);
    Evaluator& ev = r.evaluator();
    IrrLabel l = Evaluator::single_irr(ev.eval_g2(o.expr), o.expr);
    return print_value(o, o.expr, r.db().dual_of(l).str());
}

int report(const Options& o, const std::vector<ScenarioReport>& reps) {
    bool ok = true;
    json all = json::array();
    for (const auto& rep : reps) {
        ok = ok && rep.ok();
        if (o.json_out) {
            json steps = json::array();
            for (const auto& s : rep.steps) steps.push_back(step_json(s));
            all.push_back({{"scenario", rep.name}, {"ok", rep.ok()}, {"steps", steps}});
            continue;
        }
        for (const auto& s : rep.steps) {
            if (s.ok) continue;
            std::cout << "FAIL " << rep.name << ":" << s.line << " " << s.kind << " " << s.text << "\n";
            std::cout << "   " << s.detail << "\n";
        }
        std::cout << (rep.ok() ? "ok   " : "FAIL ") << rep.name << " (" << rep.steps.size() << " steps, "
                  << rep.failures() << " failed)\n";
    }
    if (o.json_out) std::cout << all.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
    std::vector<ScenarioReport> reps;
    for (const auto& f : o.files) reps.push_back(run_scenario(f));
    return report(o, reps);
}

int cmd_verify_all(const Options& o) {
    std::vector<ScenarioReport> reps;
    for (const auto& f : shipped_scenarios()) reps.push_back(run_scenario(f));
    return report(o, reps);
}

std::string as_word(const std::string& w) {
    if (w.rfind("T[", 0) == 0) return w;
    return "T[" + w + "]";
}

int cmd_hecke(const Options& o) {
    ScenarioRunner r;
    std::string setup = "hecke " + o.type + " " + o.lattice;
    for (const auto& p : o.params) setup += " " + p;
    must(r, setup);
    std::string expr;
    if (o.hecke_op == "mul") {
        for (const auto& w : o.words) expr += (expr.empty() ? "" : " * ") + as_word(w);
    } else {
        if (o.words.size() != 1) throw CLI::ValidationError("hecke " + o.hecke_op, "takes exactly one word");
        expr = o.hecke_op + "(" + as_word(o.words[0]) + ")";
    }
    Evaluator& ev = r.evaluator();
    return print_value(o, expr, ev.show(ev.eval(expr)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aubert-Zelevinsky duality for p-adic G2 and the star involution on affine Hecke algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "structured output");
    app.add_option("--data-dir", o.data_dir, "data directory (default $G2AZ_DATA_DIR or the build tree)");

    auto add_case_opts = [&](CLI::App* c) {
        c->add_option("--case", o.cases, "case tag to load (repeatable)");
        c->add_option("--ramified", o.ramified, "treat symbol as ramified");
        c->add_option("--unramified", o.unramified, "treat symbol as unramified");
    };

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", o.expr)->required();
    add_case_opts(eval);

    auto* dual = app.add_subcommand("dualize", "dual of a registered irreducible");
    dual->add_option("irr", o.expr)->required();
    add_case_opts(dual);
    dual->get_option("--case")->required();

    auto* verify = app.add_subcommand("verify", "run scenario files");
    verify->add_option("files", o.files)->required()->check(CLI::ExistingFile);

    auto* verify_all = app.add_subcommand("verify-all", "run every shipped scenario");

    auto* hecke = app.add_subcommand("hecke", "Iwahori-Matsumoto arithmetic");
    hecke->add_option("op", o.hecke_op)->required()->check(CLI::IsMember({"mul", "star", "inv"}));
    hecke->add_option("words", o.words, "reduced words, e.g. \"s1 s2 s0\" or T[s1 s2]")->required();
    hecke->add_option("--type", o.type)->check(CLI::IsMember({"A1", "A1xA1", "A2", "C2", "G2"}));
    hecke->add_option("--lattice", o.lattice)->check(CLI::IsMember({"root", "weight"}));
    hecke->add_option("--param", o.params, "q_s<i>=<value|symbolic>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!o.data_dir.empty()) setenv("G2AZ_DATA_DIR", o.data_dir.c_str(), 1);

    try {
        if (*eval) return cmd_eval(o);
        if (*dual) return cmd_dualize(o);
        if (*verify) return cmd_verify(o);
        if (*verify_all) return cmd_verify_all(o);
        if (*hecke) return cmd_hecke(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DatabaseGap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
