#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/engine.hpp"

namespace klr {

struct ParseError : std::runtime_error {
    int column;
    ParseError(const std::string& msg, int col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<ExprNode>;

struct ExprNode {
    enum Kind { Num, Atom, Mul, Add, Tau } kind;
    Int num;                        // Num
    Gen atom{Gen::Dot, 0, {}};      // Atom
    std::vector<ExprPtr> children;  // Mul / Add / Tau
    std::vector<int> signs;         // Add: +1 / -1 per child
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := INT | atom | 'tau' '(' expr ')' | '(' expr ')';
/// atom := 'e' '(' INT (',' INT)* ')' | 'y' INT | 's' INT.
ExprPtr parse(const std::string& src);

/// Evaluates against the session alpha; index and content violations throw
/// EvalError with the offending atom named.
Element eval(const ExprPtr& ast, const Context& ctx);

}  // namespace klr
