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

/// @file fuzzy.hpp
/// Fuzzy membership as the Born-rule mean value of a projective logical
/// observable, plus the qubit parametrization used to fuzzify inputs.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigenlogic/binary.hpp"
#include "eigenlogic/error.hpp"
#include "eigenlogic/linop.hpp"

namespace eigenlogic {

using linop::QuantumState;

struct QubitAngles {
    double theta = 0.0; ///< polar angle, [0, pi]
    double phi = 0.0;   ///< azimuth, [0, 2 pi)
};

/// Degree of truth in [0, 1].
class Membership {
  public:
    explicit Membership(double value) : value_(value) {
        if (!(value_ >= -linop::kIdentityTol && value_ <= 1.0 + linop::kIdentityTol)) {
            throw DomainError("membership " + std::to_string(value_) +
                              " outside [0, 1]");
        }
    }
    [[nodiscard]] double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; } // NOLINT

  private:
    double value_;
};

/// |phi> = sin(a)|0> + e^{ib} cos(a)|1>, a = theta/2, b = phi/2.
inline QuantumState qubit_from_angles(const QubitAngles &a) {
    if (!(a.theta >= 0.0 && a.theta <= std::numbers::pi)) {
        throw DomainError("theta must lie in [0, pi]");
    }
    if (!(a.phi >= 0.0 && a.phi < 2.0 * std::numbers::pi)) {
        throw DomainError("phi must lie in [0, 2 pi)");
    }
    const double alpha = a.theta / 2.0;
    const double beta = a.phi / 2.0;
    return QuantumState({linop::Complex{std::sin(alpha), 0.0},
                         std::polar(std::cos(alpha), beta)});
}

/// Qubit whose Pi_1 mean value is mu: (sqrt(1-mu), sqrt(mu)), zero phase.
inline QuantumState fuzzify(double mu) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw DomainError("fuzzify: mu " + std::to_string(mu) + " outside [0, 1]");
    }
    return QuantumState({linop::Complex{std::sqrt(1.0 - mu), 0.0},
                         linop::Complex{std::sqrt(mu), 0.0}});
}

/// Born mean value of any observable on the joint state of the inputs.
/// Non-projective observables yield a graded value rather than a Membership.
inline double graded_value(std::span<const QuantumState> states,
                           const LogicalObservable &f) {
    const auto joint = linop::kron_all(states);
    if (joint.dim() != f.dim()) {
        throw DimensionError("joint state dimension " + std::to_string(joint.dim()) +
                             " does not match observable dimension " +
                             std::to_string(f.dim()));
    }
    return linop::expectation(joint, f.op());
}

/// Fuzzy membership <psi|F|psi> of a projective observable, where psi is the
/// tensor product of the given states (or the single joint state).
inline Membership membership(std::span<const QuantumState> states,
                             const LogicalObservable &f) {
    if (!f.is_projective()) {
        throw DomainError("membership requires a projective observable; use "
                          "graded_value for multivalued observables");
    }
    return Membership(std::clamp(graded_value(states, f), 0.0, 1.0));
}

inline Membership membership(const QuantumState &joint, const LogicalObservable &f) {
    return membership(std::span<const QuantumState>(&joint, 1), f);
}

/// Membership of a -> b on independent inputs, evaluated on the product state.
inline Membership implication_membership(double mu_a, double mu_b) {
    if (!(mu_a >= 0.0 && mu_a <= 1.0 && mu_b >= 0.0 && mu_b <= 1.0)) {
        throw DomainError("implication_membership: inputs must lie in [0, 1]");
    }
    static const LogicalObservable implies = binary_connective("1101");
    const std::array<QuantumState, 2> states{fuzzify(mu_a), fuzzify(mu_b)};
    return membership(states, implies);
}

struct ScoredDecision {
    std::string name;
    double score = 0.0;
};

/// Fixed tie-break order for the motion decisions.
inline constexpr std::array<std::string_view, 4> kDecisionPriority{
    "forwards", "left", "right", "backwards"};

inline std::size_t decision_rank(std::string_view name) {
    auto it = std::find(kDecisionPriority.begin(), kDecisionPriority.end(), name);
    return static_cast<std::size_t>(it - kDecisionPriority.begin());
}

/// Name with the highest score. Ties go to the higher-priority name
/// (forwards > left > right > backwards > anything else, then list order).
inline std::string decide(std::span<const ScoredDecision> scored) {
    if (scored.empty()) {
        throw DomainError("decide: no candidate decisions");
    }
    const ScoredDecision *best = &scored.front();
    for (const auto &d : scored.subspan(1)) {
        if (d.score > best->score ||
            (d.score == best->score && decision_rank(d.name) < decision_rank(best->name))) {
            best = &d;
        }
    }
    return best->name;
}

} // namespace eigenlogic
