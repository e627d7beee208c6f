#include "g2az/expr.hpp"

#include <cctype>

namespace g2az {

bool Expr::operator==(const Expr& o) const {
    // positions are not part of the value
    return kind == o.kind && name == o.name && value == o.value && coeff == o.coeff && args == o.args &&
           gens == o.gens;
}

namespace {

enum class Tok { Int, Ident, Sym, Tensor, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            if (j < s.size() && s[j] == '\'') ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == '(') {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] == ' ') ++j;
            if (j < s.size() && s[j] == 'x') {
                std::size_t k = j + 1;
                while (k < s.size() && s[k] == ' ') ++k;
                if (k < s.size() && s[k] == ')') {
                    out.push_back({Tok::Tensor, "(x)", i});
                    i = k + 1;
                    continue;
                }
            }
        }
        if (std::string("+-*/^{}()[],~").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> t) : toks_(std::move(t)) {}

    Expr parse_all() {
        Expr e = sum();
        if (peek().type != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool is_sym(const std::string& s, std::size_t k = 0) const { return peek(k).type == Tok::Sym && peek(k).text == s; }
    Token take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
    void expect(const std::string& s) {
        if (!is_sym(s)) throw ParseError("expected '" + s + "'", peek().pos);
        take();
    }

    bool starts_atom(std::size_t k = 0) const {
        const Token& t = peek(k);
        return t.type == Tok::Int || t.type == Tok::Ident || (t.type == Tok::Sym && t.text == "(");
    }

    Expr sum() {
        Expr s;
        s.kind = Expr::Kind::Sum;
        s.pos = peek().pos;
        if (is_sym("-")) {
            std::size_t p = take().pos;
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.pos = p;
            n.args.push_back(scaled());
            s.args.push_back(std::move(n));
        } else {
            s.args.push_back(scaled());
        }
        while (is_sym("+") || is_sym("-")) {
            Token op = take();
            Expr t = scaled();
            if (op.text == "-") {
                Expr n;
                n.kind = Expr::Kind::Neg;
                n.pos = op.pos;
                n.args.push_back(std::move(t));
                t = std::move(n);
            }
            s.args.push_back(std::move(t));
        }
        if (s.args.size() == 1 && s.args[0].kind != Expr::Kind::Neg) return std::move(s.args[0]);
        return s;
    }

    Expr scaled() {
        if (peek().type == Tok::Int && (starts_atom(1) || is_sym("*", 1))) {
            Token t = take();
            if (is_sym("*")) take();
            Expr e;
            e.kind = Expr::Kind::Scale;
            e.pos = t.pos;
            e.coeff = std::stol(t.text);
            e.args.push_back(tensor());
            return e;
        }
        return tensor();
    }

    Expr tensor() {
        Expr a = product();
        if (peek().type == Tok::Tensor) {
            std::size_t p = take().pos;
            Expr t;
            t.kind = Expr::Kind::Tensor;
            t.pos = p;
            t.args.push_back(std::move(a));
            t.args.push_back(product());
            return t;
        }
        return a;
    }

    Expr product() {
        Expr p;
        p.kind = Expr::Kind::Product;
        p.pos = peek().pos;
        p.args.push_back(power());
        while (starts_atom() || (is_sym("*") && starts_atom(1))) {
            if (is_sym("*")) take();
            p.args.push_back(power());
        }
        if (p.args.size() == 1) return std::move(p.args[0]);
        return p;
    }

    Rational exponent() {
        bool braces = is_sym("{");
        if (braces) take();
        bool neg = false;
        if (is_sym("-")) {
            take();
            neg = true;
        }
        if (peek().type != Tok::Int) throw ParseError("expected an exponent", peek().pos);
        Rational r(std::stol(take().text));
        if (braces && is_sym("/")) {
            take();
            if (peek().type != Tok::Int) throw ParseError("expected a denominator", peek().pos);
            long d = std::stol(take().text);
            if (d == 0) throw ParseError("zero denominator", peek().pos);
            r /= Rational(d);
        }
        if (braces) expect("}");
        return neg ? -r : r;
    }

    Expr power() {
        Expr a = atom();
        if (is_sym("^")) {
            std::size_t p = take().pos;
            Expr e;
            e.kind = Expr::Kind::Power;
            e.pos = p;
            e.value = exponent();
            e.args.push_back(std::move(a));
            a = std::move(e);
        }
        if (is_sym("~")) {
            std::size_t p = take().pos;
            Expr d;
            d.kind = Expr::Kind::Dual;
            d.pos = p;
            d.args.push_back(std::move(a));
            a = std::move(d);
        }
        return a;
    }

    std::vector<Expr> arglist() {
        expect("(");
        std::vector<Expr> args;
        if (is_sym(")")) {
            take();
            return args;
        }
        args.push_back(sum());
        while (is_sym(",")) {
            take();
            args.push_back(sum());
        }
        expect(")");
        return args;
    }

    Expr atom() {
        const Token& t = peek();
        if (t.type == Tok::Int) {
            Token n = take();
            Expr e;
            e.kind = Expr::Kind::Number;
            e.pos = n.pos;
            e.value = Rational(std::stol(n.text));
            if (is_sym("/") && peek(1).type == Tok::Int) {
                take();
                long d = std::stol(take().text);
                if (d == 0) throw ParseError("zero denominator", n.pos);
                e.value /= Rational(d);
            }
            return e;
        }
        if (t.type == Tok::Ident) {
            Token id = take();
            Expr e;
            e.pos = id.pos;
            if (id.text == "I" && is_sym("^") && peek(1).type == Tok::Ident &&
                (peek(1).text == "a" || peek(1).text == "b") && is_sym("(", 2)) {
                take();
                e.kind = Expr::Kind::Call;
                e.name = "I^" + take().text;
                e.args = arglist();
                return e;
            }
            if (id.text == "T" && is_sym("[")) {
                take();
                e.kind = Expr::Kind::Hecke;
                while (peek().type == Tok::Ident) e.gens.push_back(take().text);
                expect("]");
                return e;
            }
            if (is_sym("(")) {
                e.kind = Expr::Kind::Call;
                e.name = id.text;
                e.args = arglist();
                return e;
            }
            e.kind = Expr::Kind::Ident;
            e.name = id.text;
            return e;
        }
        if (is_sym("(")) {
            take();
            Expr e = sum();
            expect(")");
            return e;
        }
        if (t.type == Tok::End) throw ParseError("unexpected end of input", t.pos);
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
};

std::string exponent_str(const Rational& r) {
    if (r.is_integer() && r >= 0) return std::to_string(r.numerator());
    return "{" + to_string(r) + "}";
}

bool is_simple(const Expr& e) {
    return e.kind == Expr::Kind::Number || e.kind == Expr::Kind::Ident || e.kind == Expr::Kind::Call ||
           e.kind == Expr::Kind::Hecke || e.kind == Expr::Kind::Power || e.kind == Expr::Kind::Dual;
}

std::string wrap(const Expr& e, bool need) { return need ? "(" + print_expr(e) + ")" : print_expr(e); }

} // namespace

Expr parse_expr(const std::string& text) {
    Parser p(lex(text));
    return p.parse_all();
}

std::string print_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return to_string(e.value);
    case Expr::Kind::Ident:
        return e.name;
    case Expr::Kind::Call: {
        std::string s = e.name + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print_expr(e.args[i]);
        return s + ")";
    }
    case Expr::Kind::Hecke: {
        std::string s = "T[";
        for (std::size_t i = 0; i < e.gens.size(); ++i) s += (i ? " " : "") + e.gens[i];
        return s + "]";
    }
    case Expr::Kind::Power: {
        const Expr& b = e.args[0];
        bool need = !(b.kind == Expr::Kind::Ident || b.kind == Expr::Kind::Call || b.kind == Expr::Kind::Hecke ||
                      (b.kind == Expr::Kind::Number && b.value.is_integer()));
        return wrap(b, need) + "^" + exponent_str(e.value);
    }
    case Expr::Kind::Dual: {
        const Expr& b = e.args[0];
        return wrap(b, !(b.kind == Expr::Kind::Ident || b.kind == Expr::Kind::Call || b.kind == Expr::Kind::Power)) + "~";
    }
    case Expr::Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            const Expr& a = e.args[i];
            // a fraction inside a product would re-parse differently
            bool need = !is_simple(a) || (a.kind == Expr::Kind::Number && !a.value.is_integer());
            s += (i ? " " : "") + wrap(a, need);
        }
        return s;
    }
    case Expr::Kind::Tensor: {
        auto side = [](const Expr& a) {
            return wrap(a, !(is_simple(a) || a.kind == Expr::Kind::Product) ||
                               (a.kind == Expr::Kind::Number && !a.value.is_integer()));
        };
        return side(e.args[0]) + " (x) " + side(e.args[1]);
    }
    case Expr::Kind::Scale: {
        const Expr& a = e.args[0];
        bool need = a.kind == Expr::Kind::Sum || a.kind == Expr::Kind::Neg || a.kind == Expr::Kind::Scale ||
                    a.kind == Expr::Kind::Number;
        return std::to_string(e.coeff) + " " + wrap(a, need);
    }
    case Expr::Kind::Neg: {
        const Expr& a = e.args[0];
        return "-" + wrap(a, a.kind == Expr::Kind::Sum || a.kind == Expr::Kind::Neg);
    }
    case Expr::Kind::Sum: {
        std::string s;
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            const Expr& a = e.args[i];
            if (a.kind == Expr::Kind::Neg) {
                const Expr& b = a.args[0];
                std::string body = wrap(b, b.kind == Expr::Kind::Sum || b.kind == Expr::Kind::Neg);
                s += i ? " - " + body : "-" + body;
            } else {
                s += (i ? " + " : "") + wrap(a, a.kind == Expr::Kind::Sum);
            }
        }
        return s;
    }
    }
    return "?";
}

} // namespace g2az
