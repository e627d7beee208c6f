// Expression syntax shared by the CLI, scenario files and case files.
//
//   sum     := ['-'] scaled (('+' | '-') scaled)*
//   scaled  := [INT ['*']] tensor
//   tensor  := product ['(x)' product]
//   product := power (['*'] power)*
//   power   := atom ['^' exponent] ['~']
//   atom    := NUMBER | IDENT | IDENT '(' sum (',' sum)* ')' | 'I^a(' .. ')'
//            | 'T[' gen* ']' | '(' sum ')'
//   exponent:= '{' ['-'] INT ['/' INT] '}' | ['-'] INT
#pragma once

#include "g2az/common.hpp"

#include <string>
#include <vector>

namespace g2az {

struct Expr {
    enum class Kind { Number, Ident, Call, Power, Product, Tensor, Sum, Neg, Scale, Hecke, Dual };
    Kind kind = Kind::Number;
    std::string name;               // Ident, Call
    Rational value{0};              // Number, Power exponent
    long coeff = 1;                 // Scale
    std::vector<Expr> args;
    std::vector<std::string> gens;  // Hecke word
    std::size_t pos = 0;

    bool operator==(const Expr& o) const;
};

Expr parse_expr(const std::string& text);
std::string print_expr(const Expr& e);

} // namespace g2az
