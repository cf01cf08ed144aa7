// Copyright 2026 The Eigenlogic Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/// @file formula.hpp
/// A small propositional / multivalued formula language, its recursive-descent
/// parser and printer, a classical evaluator, and compilation to logical
/// observables by exhaustive evaluation.
///
/// Grammar, loosest binding first:
///
///     equiv   := implies ( "<->" implies )*
///     implies := or ( "->" implies )?           right associative
///     or      := xor ( "|" xor )*
///     xor     := and ( "^" and )*
///     and     := unary ( "&" unary )*
///     unary   := "!" unary | primary
///     primary := IDENT | DIGITS | "(" equiv ")"
///              | ("min" | "max" | "nand" | "nor") "(" equiv "," equiv ")"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenlogic/binary.hpp"
#include "eigenlogic/error.hpp"

namespace eigenlogic::formula {

enum class Kind {
    Variable,
    Constant,
    Not,
    And,
    Or,
    Xor,
    Nand,
    Nor,
    Implies,
    Equiv,
    Min,
    Max,
};

struct Node {
    Kind kind = Kind::Constant;
    std::string name; ///< Variable only
    int value = 0;    ///< Constant only
    std::vector<Node> children;

    static Node variable(std::string n) { return {Kind::Variable, std::move(n), 0, {}}; }
    static Node constant(int v) { return {Kind::Constant, {}, v, {}}; }
    static Node unary(Kind k, Node a) { return {k, {}, 0, {std::move(a)}}; }
    static Node binary(Kind k, Node a, Node b) {
        return {k, {}, 0, {std::move(a), std::move(b)}};
    }

    bool operator==(const Node &) const = default;
};

/// Parsed formula with its variables in order of first appearance.
struct FormulaAst {
    Node root;
    std::vector<std::string> variables;

    bool operator==(const FormulaAst &) const = default;
};

/// Syntax error with 1-based position and the tokens that would have been
/// accepted there.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
               const std::string &found)
        : Error(format(line, column, expected, found)), line_(line), column_(column),
          expected_(std::move(expected)) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::vector<std::string> &expected() const noexcept {
        return expected_;
    }

  private:
    static std::string format(std::size_t line, std::size_t column,
                              const std::vector<std::string> &expected,
                              const std::string &found) {
        std::string msg = "syntax error at " + std::to_string(line) + ":" +
                          std::to_string(column) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            msg += (i == 0 ? "" : (i + 1 == expected.size() ? " or " : ", "));
            msg += expected[i];
        }
        return msg + ", found " + found;
    }

    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

/// Boolean-only connective used with more than two letters, or a letter
/// outside the alphabet.
class EvalError : public Error {
  public:
    using Error::Error;
};

namespace detail {

enum class Tok { Ident, Number, Not, And, Xor, Or, Implies, Equiv, LParen, RParen, Comma, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::string describe(const Token &t) {
    return t.type == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto push = [&](Tok t, std::size_t len) {
        out.push_back({t, std::string(src.substr(i, len)), line, col});
        i += len;
        col += len;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i + len])) ||
                    src[i + len] == '_')) {
                ++len;
            }
            push(Tok::Ident, len);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i + len]))) {
                ++len;
            }
            push(Tok::Number, len);
        } else if (src.substr(i, 3) == "<->") {
            push(Tok::Equiv, 3);
        } else if (src.substr(i, 2) == "->") {
            push(Tok::Implies, 2);
        } else if (c == '!') {
            push(Tok::Not, 1);
        } else if (c == '&') {
            push(Tok::And, 1);
        } else if (c == '^') {
            push(Tok::Xor, 1);
        } else if (c == '|') {
            push(Tok::Or, 1);
        } else if (c == '(') {
            push(Tok::LParen, 1);
        } else if (c == ')') {
            push(Tok::RParen, 1);
        } else if (c == ',') {
            push(Tok::Comma, 1);
        } else {
            throw ParseError(line, col, {"operand", "operator"},
                             "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

inline std::optional<Kind> function_kind(std::string_view name) {
    if (name == "min") return Kind::Min;
    if (name == "max") return Kind::Max;
    if (name == "nand") return Kind::Nand;
    if (name == "nor") return Kind::Nor;
    return std::nullopt;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    FormulaAst parse() {
        Node root = equiv();
        if (peek().type != Tok::End) {
            fail({"'<->'", "'->'", "'|'", "'^'", "'&'", "end of input"});
        }
        return {std::move(root), std::move(vars_)};
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &advance() { return toks_[pos_++]; }
    bool accept(Tok t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const auto &t = peek();
        throw ParseError(t.line, t.column, std::move(expected), describe(t));
    }
    void expect(Tok t, const char *what) {
        if (!accept(t)) {
            fail({what});
        }
    }

    Node equiv() {
        Node lhs = implies();
        while (accept(Tok::Equiv)) {
            lhs = Node::binary(Kind::Equiv, std::move(lhs), implies());
        }
        return lhs;
    }
    Node implies() {
        Node lhs = disj();
        if (accept(Tok::Implies)) {
            return Node::binary(Kind::Implies, std::move(lhs), implies());
        }
        return lhs;
    }
    Node disj() {
        Node lhs = exclusive();
        while (accept(Tok::Or)) {
            lhs = Node::binary(Kind::Or, std::move(lhs), exclusive());
        }
        return lhs;
    }
    Node exclusive() {
        Node lhs = conj();
        while (accept(Tok::Xor)) {
            lhs = Node::binary(Kind::Xor, std::move(lhs), conj());
        }
        return lhs;
    }
    Node conj() {
        Node lhs = unary();
        while (accept(Tok::And)) {
            lhs = Node::binary(Kind::And, std::move(lhs), unary());
        }
        return lhs;
    }
    Node unary() {
        if (accept(Tok::Not)) {
            return Node::unary(Kind::Not, unary());
        }
        return primary();
    }
    Node primary() {
        const Token &t = peek();
        switch (t.type) {
        case Tok::Ident: {
            advance();
            if (auto fk = function_kind(t.text)) {
                expect(Tok::LParen, "'('");
                Node a = equiv();
                expect(Tok::Comma, "','");
                Node b = equiv();
                expect(Tok::RParen, "')'");
                return Node::binary(*fk, std::move(a), std::move(b));
            }
            if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end()) {
                vars_.push_back(t.text);
            }
            return Node::variable(t.text);
        }
        case Tok::Number: {
            advance();
            if (t.text.size() > 6) {
                throw ParseError(t.line, t.column, {"alphabet letter"}, describe(t));
            }
            return Node::constant(std::stoi(t.text));
        }
        case Tok::LParen: {
            advance();
            Node inner = equiv();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            fail({"identifier", "constant", "'!'", "'('"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> vars_;
};

/// Binding strength, higher binds tighter.
inline int precedence(Kind k) {
    switch (k) {
    case Kind::Equiv: return 1;
    case Kind::Implies: return 2;
    case Kind::Or: return 3;
    case Kind::Xor: return 4;
    case Kind::And: return 5;
    case Kind::Not: return 6;
    default: return 7;
    }
}

inline const char *infix_symbol(Kind k) {
    switch (k) {
    case Kind::Equiv: return " <-> ";
    case Kind::Implies: return " -> ";
    case Kind::Or: return " | ";
    case Kind::Xor: return " ^ ";
    case Kind::And: return " & ";
    default: return nullptr;
    }
}

inline const char *function_name(Kind k) {
    switch (k) {
    case Kind::Min: return "min";
    case Kind::Max: return "max";
    case Kind::Nand: return "nand";
    case Kind::Nor: return "nor";
    default: return nullptr;
    }
}

inline void print(const Node &n, std::string &out) {
    switch (n.kind) {
    case Kind::Variable:
        out += n.name;
        return;
    case Kind::Constant:
        out += std::to_string(n.value);
        return;
    case Kind::Not: {
        out += "!";
        const bool paren = precedence(n.children[0].kind) < precedence(Kind::Not);
        if (paren) out += "(";
        print(n.children[0], out);
        if (paren) out += ")";
        return;
    }
    default:
        break;
    }
    if (const char *fn = function_name(n.kind)) {
        out += fn;
        out += "(";
        print(n.children[0], out);
        out += ", ";
        print(n.children[1], out);
        out += ")";
        return;
    }
    const int p = precedence(n.kind);
    const bool right_assoc = n.kind == Kind::Implies;
    const int lp = precedence(n.children[0].kind);
    const int rp = precedence(n.children[1].kind);
    const bool lparen = lp < p || (lp == p && right_assoc);
    const bool rparen = rp < p || (rp == p && !right_assoc);
    if (lparen) out += "(";
    print(n.children[0], out);
    if (lparen) out += ")";
    out += infix_symbol(n.kind);
    if (rparen) out += "(";
    print(n.children[1], out);
    if (rparen) out += ")";
}

inline int eval(const Node &n, std::span<const std::string> vars,
                std::span<const int> assignment, int m) {
    auto sub = [&](std::size_t i) { return eval(n.children[i], vars, assignment, m); };
    auto boolean_only = [&](const char *what) {
        if (m != 2) {
            throw EvalError(std::string(what) + " is only defined for two-valued logic");
        }
    };
    switch (n.kind) {
    case Kind::Variable: {
        auto it = std::find(vars.begin(), vars.end(), n.name);
        if (it == vars.end()) {
            throw EvalError("unbound variable '" + n.name + "'");
        }
        return assignment[static_cast<std::size_t>(it - vars.begin())];
    }
    case Kind::Constant:
        if (n.value < 0 || n.value >= m) {
            throw EvalError("constant " + std::to_string(n.value) +
                            " is not a letter of the " + std::to_string(m) +
                            "-valued alphabet");
        }
        return n.value;
    case Kind::Not:
        return m - 1 - sub(0);
    case Kind::And:
    case Kind::Min:
        return std::min(sub(0), sub(1));
    case Kind::Or:
    case Kind::Max:
        return std::max(sub(0), sub(1));
    case Kind::Nand:
        return m - 1 - std::min(sub(0), sub(1));
    case Kind::Nor:
        return m - 1 - std::max(sub(0), sub(1));
    case Kind::Xor:
        boolean_only("XOR");
        return sub(0) != sub(1) ? 1 : 0;
    case Kind::Implies:
        boolean_only("IMPLIES");
        return (sub(0) == 0 || sub(1) == 1) ? 1 : 0;
    case Kind::Equiv:
        boolean_only("EQUIV");
        return sub(0) == sub(1) ? 1 : 0;
    }
    throw EvalError("unknown node kind");
}

} // namespace detail

inline FormulaAst parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Minimal-parenthesis rendering; parse(to_string(ast)) == ast.
inline std::string to_string(const Node &n) {
    std::string out;
    detail::print(n, out);
    return out;
}
inline std::string to_string(const FormulaAst &ast) { return to_string(ast.root); }

/// Largest supported number of distinct variables.
inline constexpr std::size_t kMaxVariables = 4;
/// Largest supported observable dimension m^n.
inline constexpr std::size_t kMaxDimension = 81;

/// Classical value of the formula. assignment[k] is the letter of the k-th
/// variable in `variables` order. NOT is x -> m-1-x; AND/OR coincide with
/// MIN/MAX; XOR, IMPLIES and EQUIV require m = 2.
inline int eval_classical(const FormulaAst &ast, std::span<const int> assignment,
                          int m, std::span<const std::string> variables) {
    if (m < 2) {
        throw EvalError("alphabet must have at least two letters");
    }
    if (assignment.size() != variables.size()) {
        throw EvalError("assignment has " + std::to_string(assignment.size()) +
                        " letters for " + std::to_string(variables.size()) +
                        " variables");
    }
    for (int x : assignment) {
        if (x < 0 || x >= m) {
            throw EvalError("assigned letter " + std::to_string(x) +
                            " outside the alphabet");
        }
    }
    return detail::eval(ast.root, variables, assignment, m);
}

inline int eval_classical(const FormulaAst &ast, std::span<const int> assignment,
                          int m = 2) {
    return eval_classical(ast, assignment, m, ast.variables);
}

/// Observable whose eigenvalue at each basis state is the formula's value for
/// that assignment. `variables` fixes the argument order (leftmost is most
/// significant) and must cover every variable of the formula.
inline LogicalObservable compile(const FormulaAst &ast, int m,
                                 std::span<const std::string> variables) {
    if (m < 2) {
        throw EvalError("alphabet must have at least two letters");
    }
    for (const auto &v : ast.variables) {
        if (std::find(variables.begin(), variables.end(), v) == variables.end()) {
            throw EvalError("variable '" + v + "' missing from the argument order");
        }
    }
    if (variables.empty()) {
        throw EvalError("formula has no variables");
    }
    const auto n = variables.size();
    if (n > kMaxVariables || checked_pow(static_cast<std::uint64_t>(m), n) > kMaxDimension) {
        throw EvalError("observable dimension exceeds " + std::to_string(kMaxDimension));
    }
    const auto alphabet = Alphabet::integers(static_cast<std::size_t>(m));
    std::vector<std::string> order(variables.begin(), variables.end());
    return observable_from_truth_table(TruthTable::from_function(
        alphabet, n, [&](std::span<const int> x) {
            return detail::eval(ast.root, order, x, m);
        }));
}

inline LogicalObservable compile(const FormulaAst &ast, int m = 2) {
    return compile(ast, m, ast.variables);
}

} // namespace eigenlogic::formula
