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

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <catch2/catch.hpp>

#include "eigenlogic/multivalued.hpp"

using namespace eigenlogic;
using linop::DiagonalOperator;
using Exps = PolynomialExpansion::Exponents;

namespace {

void check_coefficients(const PolynomialExpansion &p, const std::map<Exps, double> &expected) {
    for (const auto &[e, c] : expected) {
        CHECK(p.coefficient(e) == Approx(c).margin(1e-9));
    }
    for (const auto &[e, c] : p.coefficients()) {
        if (!expected.count(e)) {
            CHECK(std::abs(c) < 1e-9);
        }
    }
}

} // namespace

TEST_CASE("angular momentum observable", "[multivalued]") {
    const auto a = angular_momentum_observable();
    CHECK(a.op() == DiagonalOperator{1, 0, -1});
    CHECK(a.alphabet().label(+1) == "false");
    CHECK(a.alphabet().label(0) == "neutral");
    CHECK(a.alphabet().label(-1) == "true");
    CHECK(a.op() * a.op() * a.op() == a.op());
}

TEST_CASE("tri-valued projector polynomials", "[multivalued]") {
    const auto a = angular_momentum_observable();
    const auto p = tri_projectors(a);
    CHECK(p.plus.op() == DiagonalOperator{1, 0, 0});
    CHECK(p.zero.op() == DiagonalOperator{0, 1, 0});
    CHECK(p.minus.op() == DiagonalOperator{0, 0, 1});

    const auto I = DiagonalOperator::identity(3);
    CHECK(p.plus.op() + p.zero.op() + p.minus.op() == I);
    CHECK(p.plus.op() * p.zero.op() == DiagonalOperator::zero(3));
    CHECK(p.plus.op() * p.minus.op() == DiagonalOperator::zero(3));
    CHECK(p.zero.op() * p.minus.op() == DiagonalOperator::zero(3));
    for (const auto *q : {&p.plus, &p.zero, &p.minus}) {
        CHECK(q->is_projective());
    }
    CHECK(1.0 * p.plus.op() + 0.0 * p.zero.op() + (-1.0) * p.minus.op() == a.op());

    // Two-argument space over {+1,0,-1}: a dictator still decomposes.
    const auto a2 = dictator(Alphabet::angular_momentum(), 2, 1);
    const auto p2 = tri_projectors(a2);
    CHECK(p2.plus.op() - p2.minus.op() == a2.op());
    CHECK(p2.plus.op() + p2.zero.op() + p2.minus.op() == DiagonalOperator::identity(9));

    const LogicalObservable bad(DiagonalOperator{0, 1, 2}, Alphabet::ternary(), 1,
                                Alphabet::ternary());
    CHECK_THROWS_AS(tri_projectors(bad), DomainError);
}

TEST_CASE("dictators U and V over {0,1,2}", "[multivalued]") {
    const auto [u, v] = dictators_3();
    CHECK(u.op() == DiagonalOperator{0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(v.op() == DiagonalOperator{0, 1, 2, 0, 1, 2, 0, 1, 2});
    CHECK(u.op() * v.op() == v.op() * u.op());
    CHECK(u.op() * v.op() == DiagonalOperator{0, 0, 0, 0, 1, 2, 0, 2, 4});
}

TEST_CASE("Min and Max observables", "[multivalued]") {
    const auto [u, v] = dictators_3();
    const auto mn = min3();
    const auto mx = max3();
    CHECK(mn.op() == DiagonalOperator{0, 0, 0, 0, 1, 1, 0, 1, 2});
    CHECK(mx.op() == DiagonalOperator{0, 1, 2, 1, 1, 2, 2, 2, 2});
    CHECK(mn.op() + mx.op() == u.op() + v.op());

    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            const std::size_t i = 3 * a + b;
            const std::size_t swapped = 3 * b + a;
            CHECK(mn.eigenvalue(i) == mn.eigenvalue(swapped));
            CHECK(mx.eigenvalue(i) == mx.eigenvalue(swapped));
            // Absorption: min(u, max(u, v)) = u and max(u, min(u, v)) = u.
            CHECK(std::min(u.eigenvalue(i), mx.eigenvalue(i)) == u.eigenvalue(i));
            CHECK(std::max(u.eigenvalue(i), mn.eigenvalue(i)) == u.eigenvalue(i));
        }
    }
}

TEST_CASE("m-valued truth tables", "[multivalued]") {
    const auto mn = observable_from_truth_table_m(TruthTable::from_function(
        Alphabet::ternary(), 2, [](std::span<const int> x) { return std::min(x[0], x[1]); }));
    CHECK(mn == min3());
    const auto id = observable_from_truth_table_m(
        TruthTable(Alphabet::angular_momentum(), 1, {+1, 0, -1}));
    CHECK(id.op() == DiagonalOperator{1, 0, -1});
    const auto two = observable_from_truth_table_m(
        TruthTable(Alphabet::ternary(), 2, std::vector<int>(9, 2)));
    CHECK(two.op() == 2.0 * DiagonalOperator::identity(9));
}

TEST_CASE("interpolation recovers known polynomials", "[multivalued]") {
    const auto b = Alphabet::boolean();
    // NOT: f(0)=1, f(1)=0 -> 1 - x.
    check_coefficients(interpolate_polynomial(observable_from_truth_table(TruthTable(b, 1, {1, 0}))),
                       {{{0}, 1.0}, {{1}, -1.0}});
    // AND -> x*y.
    check_coefficients(
        interpolate_polynomial(observable_from_truth_table(TruthTable(b, 2, {0, 0, 0, 1}))),
        {{{1, 1}, 1.0}});
    // Frozen from an independent tensor-product Lagrange expansion:
    // min(u,v) = 5/2 uv - u^2 v - u v^2 + 1/2 u^2 v^2.
    check_coefficients(interpolate_polynomial(min3()),
                       {{{1, 1}, 2.5}, {{2, 1}, -1.0}, {{1, 2}, -1.0}, {{2, 2}, 0.5}});
    // max(u,v) = u + v - 5/2 uv + u^2 v + u v^2 - 1/2 u^2 v^2.
    check_coefficients(interpolate_polynomial(max3()), {{{1, 0}, 1.0},
                                                        {{0, 1}, 1.0},
                                                        {{1, 1}, -2.5},
                                                        {{2, 1}, 1.0},
                                                        {{1, 2}, 1.0},
                                                        {{2, 2}, -0.5}});
}

TEST_CASE("evaluate_polynomial substitutes dictators entrywise", "[multivalued]") {
    const auto [u, v] = dictators_3();
    const std::vector<LogicalObservable> uv{u, v};

    PolynomialExpansion xy(3, 2);
    xy.set({1, 1}, 1.0);
    CHECK(evaluate_polynomial(xy, uv) == u.op() * v.op());

    PolynomialExpansion one(3, 2);
    one.set({0, 0}, 1.0);
    CHECK(evaluate_polynomial(one, uv) == DiagonalOperator::identity(9));

    const auto round = evaluate_polynomial(interpolate_polynomial(min3()), uv);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(round[i] == Approx(min3().eigenvalue(i)).margin(1e-9));
    }

    CHECK_THROWS_AS(evaluate_polynomial(xy, std::vector<LogicalObservable>{u}), DimensionError);
    const auto z = dictator(Alphabet::boolean(), 2, 0);
    CHECK_THROWS_AS(evaluate_polynomial(xy, std::vector<LogicalObservable>{u, z}),
                    DimensionError);
    CHECK_THROWS_AS(xy.set({3, 0}, 1.0), DomainError);
}

TEST_CASE("interpolation round trip on random tables", "[multivalued][property]") {
    std::mt19937_64 rng(23);
    const std::vector<Alphabet> alphabets{Alphabet::boolean(), Alphabet::ternary(),
                                          Alphabet::angular_momentum()};
    for (int trial = 0; trial < 100; ++trial) {
        const auto &a = alphabets[static_cast<std::size_t>(trial) % alphabets.size()];
        const std::size_t n = 1 + static_cast<std::size_t>(trial / 3) % 2;
        std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
        std::vector<int> values(checked_pow(a.size(), n));
        for (auto &x : values) x = a[pick(rng)];
        const TruthTable t(a, n, values);
        const auto f = observable_from_truth_table_m(t);

        // Oracle equivalence: basis readout is the table value.
        for (std::size_t x = 0; x < t.rows(); ++x) {
            CHECK(linop::expectation(linop::QuantumState::basis(f.dim(), x), f.op()) ==
                  static_cast<double>(t[x]));
        }

        std::vector<LogicalObservable> dict;
        for (std::size_t k = 0; k < n; ++k) dict.push_back(dictator(a, n, k));
        const auto p = interpolate_polynomial(f);
        CHECK(p.coefficients().size() <= f.dim());
        const auto back = evaluate_polynomial(p, dict);
        for (std::size_t i = 0; i < f.dim(); ++i) {
            CHECK(std::abs(back[i] - f.eigenvalue(i)) <= 1e-9);
        }
    }
}

TEST_CASE("polynomial printing", "[multivalued]") {
    const auto p = interpolate_polynomial(
        observable_from_truth_table(TruthTable(Alphabet::boolean(), 1, {1, 0})));
    CHECK(p.to_string() == "1 - x1");
    PolynomialExpansion empty(2, 1);
    CHECK(empty.to_string() == "0");
}
