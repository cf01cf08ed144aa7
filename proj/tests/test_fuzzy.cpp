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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <catch2/catch.hpp>

#include "eigenlogic/fuzzy.hpp"

using namespace eigenlogic;
using linop::Complex;
using linop::ComplexVector;

namespace {

double born(const std::vector<QuantumState> &states, const char *bits) {
    return membership(states, binary_connective(bits)).value();
}

QuantumState random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return QuantumState({a / n, b / n});
}

} // namespace

TEST_CASE("qubit_from_angles follows sin(a)|0> + e^{ib} cos(a)|1>", "[fuzzy]") {
    const auto one = qubit_from_angles({0.0, 0.0});
    CHECK(one[0] == Complex{0, 0});
    CHECK(one[1] == Complex{1, 0});
    const auto zero = qubit_from_angles({std::numbers::pi, 0.0});
    CHECK(std::abs(zero[0] - Complex{1, 0}) < 1e-15);
    CHECK(std::abs(zero[1]) < 1e-15);
    const auto eq = qubit_from_angles({std::numbers::pi / 2, 0.0});
    CHECK(eq[0].real() == Approx(std::sqrt(2.0) / 2));
    CHECK(eq[1].real() == Approx(std::sqrt(2.0) / 2));

    // Phase is phi/2 on the |1> amplitude.
    const auto phased = qubit_from_angles({std::numbers::pi / 2, std::numbers::pi});
    CHECK(std::arg(phased[1]) == Approx(std::numbers::pi / 2));

    CHECK_THROWS_AS(qubit_from_angles({-0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(qubit_from_angles({4.0, 0.0}), DomainError);
    CHECK_THROWS_AS(qubit_from_angles({1.0, 2.0 * std::numbers::pi}), DomainError);
}

TEST_CASE("membership of the projector is cos^2 of half the polar angle", "[fuzzy]") {
    const auto pi1 = rank1_projector(2, 1, 1);
    for (int k = 0; k <= 24; ++k) {
        const double theta = std::numbers::pi * k / 24.0;
        for (double phi : {0.0, 1.0, 3.0, 6.0}) {
            const double mu = membership(qubit_from_angles({theta, phi}), pi1).value();
            CHECK(std::abs(mu - std::pow(std::cos(theta / 2), 2)) <= 1e-12);
        }
    }
}

TEST_CASE("fuzzify inverts the Born membership", "[fuzzy]") {
    CHECK(fuzzify(1.0) == QuantumState::basis(2, 1));
    CHECK(fuzzify(0.0) == QuantumState::basis(2, 0));
    const auto q = fuzzify(0.25);
    CHECK(q[0].real() == Approx(std::sqrt(0.75)));
    CHECK(q[1].real() == Approx(0.5));
    const auto pi1 = rank1_projector(2, 1, 1);
    CHECK(std::abs(membership(q, pi1).value() - 0.25) <= 1e-12);
    for (int k = 0; k <= 10; ++k) {
        const double mu = k / 10.0;
        CHECK(std::abs(membership(fuzzify(mu), pi1).value() - mu) <= 1e-12);
    }
    CHECK_THROWS_AS(fuzzify(-0.01), DomainError);
    CHECK_THROWS_AS(fuzzify(1.01), DomainError);
    CHECK_THROWS_AS(fuzzify(std::nan("")), DomainError);
}

TEST_CASE("compound memberships on product states", "[fuzzy]") {
    const double a = 0.3, b = 0.8;
    const std::vector<QuantumState> ab{fuzzify(a), fuzzify(b)};
    CHECK(std::abs(born(ab, "0001") - a * b) <= 1e-12);
    CHECK(std::abs(born(ab, "0111") - (a + b - a * b)) <= 1e-12);
    CHECK(std::abs(born(ab, "1101") - (1 - a + a * b)) <= 1e-12);
    CHECK(std::abs(born(ab, "0110") - (a + b - 2 * a * b)) <= 1e-12);
    const auto not_a = observable_from_truth_table(TruthTable(Alphabet::boolean(), 1, {1, 0}));
    CHECK(std::abs(membership(fuzzify(a), not_a).value() - (1 - a)) <= 1e-12);
}

TEST_CASE("membership accepts a joint entangled state", "[fuzzy]") {
    const double s = 1.0 / std::sqrt(2.0);
    const QuantumState bell{s, 0.0, 0.0, s};
    CHECK(membership(bell, binary_connective("0001")).value() == Approx(0.5));
    CHECK(membership(bell, binary_connective("0110")).value() == Approx(0.0).margin(1e-15));
}

TEST_CASE("membership rejects bad inputs", "[fuzzy]") {
    const std::vector<QuantumState> one{fuzzify(0.5)};
    CHECK_THROWS_AS(membership(one, binary_connective("0001")), DimensionError);
    const std::vector<QuantumState> two{fuzzify(0.5), fuzzify(0.5)};
    const auto z = to_isometric(dictator(Alphabet::boolean(), 2, 0));
    CHECK_THROWS_AS(membership(two, z), DomainError);
    // Graded observables go through graded_value.
    CHECK(graded_value(two, z) == Approx(0.0).margin(1e-15));
}

TEST_CASE("implication membership", "[fuzzy]") {
    for (double b : {0.0, 0.3, 1.0}) {
        CHECK(implication_membership(0.0, b).value() == Approx(1.0));
        CHECK(implication_membership(1.0, b).value() == Approx(b).margin(1e-15));
    }
    CHECK(implication_membership(0.5, 0.5).value() == Approx(0.75));
    CHECK_THROWS_AS(implication_membership(1.5, 0.0), DomainError);
}

TEST_CASE("memberships stay in [0,1] for random states", "[fuzzy][property]") {
    std::mt19937_64 rng(29);
    const auto connectives = all_binary_connectives();
    for (int trial = 0; trial < 500; ++trial) {
        const std::vector<QuantumState> s{random_qubit(rng), random_qubit(rng)};
        const auto &f = connectives[static_cast<std::size_t>(trial) % 16];
        const double mu = membership(s, f).value();
        CHECK(mu >= 0.0);
        CHECK(mu <= 1.0);
    }
}

TEST_CASE("membership is phase invariant", "[fuzzy][property]") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const auto connectives = all_binary_connectives();
    for (int trial = 0; trial < 200; ++trial) {
        const auto joint = linop::kron(random_qubit(rng), random_qubit(rng));
        std::vector<Complex> rotated(joint.amplitudes().begin(), joint.amplitudes().end());
        for (auto &a : rotated) a *= std::polar(1.0, angle(rng));
        const QuantumState shifted{ComplexVector(rotated)};
        const auto &f = connectives[static_cast<std::size_t>(trial) % 16];
        CHECK(std::abs(membership(joint, f).value() - membership(shifted, f).value()) <= 1e-12);
    }
}

TEST_CASE("decide picks the maximum with a fixed tie-break", "[fuzzy]") {
    using SD = ScoredDecision;
    CHECK(decide(std::vector<SD>{{"forwards", 0.9}, {"left", 0.2}}) == "forwards");
    CHECK(decide(std::vector<SD>{{"left", 0.5}, {"right", 0.5}}) == "left");
    CHECK(decide(std::vector<SD>{{"right", 0.5}, {"left", 0.5}}) == "left");
    CHECK(decide(std::vector<SD>{{"backwards", 0.4}, {"forwards", 0.4}}) == "forwards");
    CHECK(decide(std::vector<SD>{{"backwards", 1.0}}) == "backwards");
    CHECK_THROWS_AS(decide(std::vector<SD>{}), DomainError);
}

TEST_CASE("decide is invariant under positive scaling", "[fuzzy][property]") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> grid(0, 10);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    const std::array<const char *, 4> names{"backwards", "right", "left", "forwards"};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<ScoredDecision> d;
        for (const char *n : names) d.push_back({n, grid(rng) / 10.0});
        const double c = scale(rng);
        auto scaled = d;
        for (auto &x : scaled) x.score *= c;
        CHECK(decide(d) == decide(scaled));
    }
}
