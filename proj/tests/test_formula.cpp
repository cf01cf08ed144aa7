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

#include <catch2/catch.hpp>

#include <random>
#include <string>
#include <vector>

#include "eigenlogic/formula.hpp"
#include "eigenlogic/linop.hpp"
#include "formula_corpus.hpp"

using namespace eigenlogic;
using namespace eigenlogic::formula;

namespace {

std::vector<double> diag(const LogicalObservable &f) {
    const auto d = f.op().diagonal();
    return {d.begin(), d.end()};
}

Node random_node(std::mt19937 &rng, int depth) {
    static const char *kVars[] = {"A", "B", "C", "D"};
    static const Kind kBinary[] = {Kind::And,  Kind::Or,  Kind::Xor, Kind::Nand,
                                   Kind::Nor,  Kind::Implies, Kind::Equiv,
                                   Kind::Min,  Kind::Max};
    std::uniform_int_distribution<int> pick(0, 99);
    if (depth == 0 || pick(rng) < 25) {
        if (pick(rng) < 85) return Node::variable(kVars[pick(rng) % 4]);
        return Node::constant(pick(rng) % 2);
    }
    if (pick(rng) < 20) return Node::unary(Kind::Not, random_node(rng, depth - 1));
    return Node::binary(kBinary[pick(rng) % 9], random_node(rng, depth - 1),
                        random_node(rng, depth - 1));
}

} // namespace

TEST_CASE("parse builds the expected tree", "[formula]") {
    auto ast = parse("A & !B");
    CHECK(ast.root == Node::binary(Kind::And, Node::variable("A"),
                                   Node::unary(Kind::Not, Node::variable("B"))));
    CHECK(ast.variables == std::vector<std::string>{"A", "B"});

    auto chain = parse("A -> B -> C");
    CHECK(chain.root ==
          Node::binary(Kind::Implies, Node::variable("A"),
                       Node::binary(Kind::Implies, Node::variable("B"), Node::variable("C"))));

    auto fn = parse("min(A, max(B, 2))");
    CHECK(fn.root == Node::binary(Kind::Min, Node::variable("A"),
                                  Node::binary(Kind::Max, Node::variable("B"),
                                               Node::constant(2))));

    CHECK(parse("B | A & C").variables == std::vector<std::string>{"B", "A", "C"});
    CHECK(parse("A | B & C").root.kind == Kind::Or);
    CHECK(parse("A ^ B | C").root.kind == Kind::Or);
    CHECK(parse("A | B -> C").root.kind == Kind::Implies);
    CHECK(parse("A -> B <-> C").root.kind == Kind::Equiv);
    CHECK(parse("  nand( A,B )").root.kind == Kind::Nand);
}

TEST_CASE("syntax errors carry position and expectations", "[formula]") {
    auto expect_error = [](const char *text, std::size_t line, std::size_t col,
                           const std::string &wanted) {
        try {
            parse(text);
            FAIL("no error for " << text);
        } catch (const ParseError &e) {
            CHECK(e.line() == line);
            CHECK(e.column() == col);
            const auto &ex = e.expected();
            CHECK(std::find(ex.begin(), ex.end(), wanted) != ex.end());
        }
    };
    expect_error("A &", 1, 4, "identifier");
    expect_error("A B", 1, 3, "end of input");
    expect_error("min(A)", 1, 6, "','");
    expect_error("(A | B", 1, 7, "')'");
    expect_error("A &\n  & B", 2, 3, "identifier");
    expect_error("", 1, 1, "identifier");
    CHECK_THROWS_AS(parse("A # B"), ParseError);
    CHECK_THROWS_AS(parse("A & 99999999"), ParseError);
}

TEST_CASE("compile gives the expected diagonals", "[formula]") {
    CHECK(diag(compile(parse("A & B"))) == std::vector<double>{0, 0, 0, 1});
    CHECK(diag(compile(parse("A"))) == std::vector<double>{0, 1});
    CHECK(diag(compile(parse("A -> B"))) == std::vector<double>{1, 1, 0, 1});
    CHECK(diag(compile(parse("min(A, B)"), 3)) ==
          std::vector<double>{0, 0, 0, 0, 1, 1, 0, 1, 2});
    CHECK(diag(compile(parse("max(A, B)"), 3)) ==
          std::vector<double>{0, 1, 2, 1, 1, 2, 2, 2, 2});
    CHECK(diag(compile(parse("!A"), 3)) == std::vector<double>{2, 1, 0});

    const std::vector<std::string> order{"B", "A"};
    CHECK(diag(compile(parse("A & !B"), 2, order)) == std::vector<double>{0, 1, 0, 0});
    const std::vector<std::string> wider{"A", "B", "C"};
    CHECK(diag(compile(parse("A & B"), 2, wider)) ==
          std::vector<double>{0, 0, 0, 0, 0, 0, 1, 1});
    CHECK(compile(parse("A & B")) == binary_connective("0001"));
}

TEST_CASE("classical evaluation", "[formula]") {
    const std::vector<int> one_one{1, 1}, two_one{2, 1}, one_zero{1, 0};
    CHECK(eval_classical(parse("A ^ B"), one_one) == 0);
    CHECK(eval_classical(parse("min(A, B)"), two_one, 3) == 1);
    CHECK(eval_classical(parse("max(A, B)"), two_one, 3) == 2);
    CHECK(eval_classical(parse("A -> B"), one_zero) == 0);
    CHECK(eval_classical(parse("nor(A, B)"), one_zero) == 0);
    CHECK(eval_classical(parse("!A & B"), two_one, 3) == 0);

    CHECK_THROWS_AS(eval_classical(parse("A ^ B"), one_one, 3), EvalError);
    CHECK_THROWS_AS(eval_classical(parse("A -> B"), one_one, 3), EvalError);
    CHECK_THROWS_AS(eval_classical(parse("A <-> B"), one_one, 3), EvalError);
    CHECK_THROWS_AS(eval_classical(parse("A & 2"), one_one, 2), EvalError);
    CHECK_THROWS_AS(eval_classical(parse("A & B"), std::vector<int>{1}), EvalError);
    CHECK_THROWS_AS(eval_classical(parse("A & B"), std::vector<int>{1, 2}), EvalError);
}

TEST_CASE("compile guards", "[formula]") {
    CHECK_THROWS_AS(compile(parse("A ^ B"), 3), EvalError);
    CHECK_THROWS_AS(compile(parse("1 & 0")), EvalError);
    CHECK_THROWS_AS(compile(parse("A & B & C & D & E")), EvalError);
    CHECK_NOTHROW(compile(parse("A & B & C & D"), 3));
    CHECK_THROWS_AS(compile(parse("A"), 3, std::vector<std::string>{"A", "B", "C", "D", "E"}),
                    EvalError);
    CHECK_THROWS_AS(compile(parse("A & B"), 2, std::vector<std::string>{"A"}), EvalError);
    CHECK_THROWS_AS(compile(parse("A"), 1), EvalError);
}

TEST_CASE("corpus: compiled observables agree with classical evaluation", "[formula][property]") {
    for (const auto &entry : corpus::formulas()) {
        INFO(entry.text << " m=" << entry.m);
        const auto ast = parse(entry.text);
        const auto f = compile(ast, entry.m);
        const auto m = static_cast<std::size_t>(entry.m);
        const auto n = ast.variables.size();
        for (std::size_t i = 0; i < f.dim(); ++i) {
            const auto digits = basis_digits(i, m, n);
            const std::vector<int> x(digits.begin(), digits.end());
            const auto state = linop::QuantumState::basis(f.dim(), i);
            CHECK(linop::expectation(state, f.op()) ==
                  Approx(eval_classical(ast, x, entry.m)).margin(1e-12));
        }
        CHECK(f.op() == corpus::algebra(ast.root, entry.m, ast.variables));
    }
}

TEST_CASE("corpus: print then parse is the identity", "[formula][property]") {
    for (const auto &entry : corpus::formulas()) {
        const auto ast = parse(entry.text);
        INFO(entry.text << " -> " << to_string(ast));
        CHECK(parse(to_string(ast)) == ast);
    }
    CHECK(to_string(parse("(A -> B) -> C")) == "(A -> B) -> C");
    CHECK(to_string(parse("A -> (B -> C)")) == "A -> B -> C");
    CHECK(to_string(parse("(A & B) | C")) == "A & B | C");
    CHECK(to_string(parse("A & (B | C)")) == "A & (B | C)");
    CHECK(to_string(parse("!(!A)")) == "!!A");
    CHECK(to_string(parse("(A | B) | C")) == "A | B | C");
    CHECK(to_string(parse("A | (B | C)")) == "A | (B | C)");
}

TEST_CASE("random trees survive printing", "[formula][property]") {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 500; ++trial) {
        const Node root = random_node(rng, 4);
        const auto text = to_string(root);
        INFO(text);
        CHECK(parse(text).root == root);
    }
}

TEST_CASE("compiled connectives compose by operator algebra", "[formula][property]") {
    const auto I = linop::DiagonalOperator::identity(4);
    const auto a_and_b = compile(parse("A & B")).op();
    const auto a = compile(parse("A & B | A & !B"), 2, std::vector<std::string>{"A", "B"}).op();
    CHECK(compile(parse("!(A & B)")).op() == I - a_and_b);
    CHECK(compile(parse("A | B")) == compile(parse("!(!A & !B)")));
    CHECK(compile(parse("A -> B")) == compile(parse("!A | B")));
    CHECK(compile(parse("A <-> B")).op() == I - compile(parse("A ^ B")).op());
    CHECK(compile(parse("nand(A, B)")) == binary_connective(*connective_bits("NAND")));
    CHECK(a == dictator(Alphabet::boolean(), 2, 0).op());
}
