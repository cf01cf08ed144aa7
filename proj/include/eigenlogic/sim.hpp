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

/// @file sim.hpp
/// Deterministic 2-D differential-drive Braitenberg vehicles whose motor
/// commands are eigenvalues (crisp), Born mean values (fuzzy) or Min/Max
/// levels (three-valued) of logical observables over the two light sensors.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenlogic/binary.hpp"
#include "eigenlogic/error.hpp"
#include "eigenlogic/formula.hpp"
#include "eigenlogic/fuzzy.hpp"
#include "eigenlogic/multivalued.hpp"

namespace eigenlogic::sim {

enum class Archetype { Fear, Aggress, Love, Explore };
enum class Mode { Crisp, Fuzzy, Trivalued };
enum class TriConnective { Min, Max };

inline std::string_view to_string(Archetype a) {
    switch (a) {
    case Archetype::Fear: return "fear";
    case Archetype::Aggress: return "aggress";
    case Archetype::Love: return "love";
    case Archetype::Explore: return "explore";
    }
    return "?";
}
inline std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::Crisp: return "crisp";
    case Mode::Fuzzy: return "fuzzy";
    case Mode::Trivalued: return "trivalued";
    }
    return "?";
}
inline std::string_view to_string(TriConnective c) {
    return c == TriConnective::Min ? "min" : "max";
}

inline std::optional<Archetype> parse_archetype(std::string_view s) {
    for (auto a : {Archetype::Fear, Archetype::Aggress, Archetype::Love, Archetype::Explore}) {
        if (to_string(a) == s) return a;
    }
    return std::nullopt;
}
inline std::optional<Mode> parse_mode(std::string_view s) {
    for (auto m : {Mode::Crisp, Mode::Fuzzy, Mode::Trivalued}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}
inline std::optional<TriConnective> parse_tri_connective(std::string_view s) {
    if (s == "min") return TriConnective::Min;
    if (s == "max") return TriConnective::Max;
    return std::nullopt;
}

/// Approach-type wiring turns toward the brighter side.
inline bool approaches_light(Archetype a) {
    return a == Archetype::Love || a == Archetype::Aggress;
}

struct Bounds {
    double xmin = -10.0;
    double ymin = -10.0;
    double xmax = 10.0;
    double ymax = 10.0;

    bool operator==(const Bounds &) const = default;
};

struct LightSource {
    int id = 0;
    double x = 0.0; ///< m
    double y = 0.0; ///< m
    double power = 1.0;

    bool operator==(const LightSource &) const = default;
};

struct ActuatorPair {
    LogicalObservable left;
    LogicalObservable right;
};

/// Motor observables installed from formulas over the sensor propositions
/// L and R. A formula states when its wheel is inhibited; the motor
/// observable is its {+1,-1} form, so "L" / "R" reproduce the love wiring.
struct MotorFormulas {
    std::string left;
    std::string right;
    ActuatorPair observables;
};

struct Vehicle {
    double x = 0.0;       ///< m
    double y = 0.0;       ///< m
    double heading = 0.0; ///< rad
    double wheel_base = 0.2;
    double v_max = 1.0;
    double sensor_offset_angle = std::numbers::pi / 6.0;
    double sensor_distance = 0.1;
    Archetype archetype = Archetype::Love;
    Mode mode = Mode::Fuzzy;
    double crisp_threshold = 0.5;
    std::array<double, 2> tri_thresholds{0.3, 0.7};
    TriConnective tri_connective = TriConnective::Min;
    std::optional<MotorFormulas> motors;
};

/// Labelled motion decision scored by fuzzy membership.
struct DecisionRule {
    std::string name;
    std::string formula;
    LogicalObservable observable;
};

struct World {
    Bounds bounds;
    std::vector<LightSource> lights;
    std::vector<Vehicle> vehicles;
    double time = 0.0;
    /// Differential (u - v) steering term in three-valued mode.
    bool tri_steering_offset = true;
    /// Empty means the archetype-dependent defaults.
    std::vector<DecisionRule> decision_rules;
};

struct SensorReading {
    double left = 0.0;
    double right = 0.0;
};

struct WheelSpeeds {
    double left = 0.0;  ///< m/s
    double right = 0.0; ///< m/s
};

struct Point {
    double x;
    double y;
};

/// Sensor positions at sensor_distance from the centre, heading +/- offset.
inline std::pair<Point, Point> sensor_positions(const Vehicle &v) {
    const double a_left = v.heading + v.sensor_offset_angle;
    const double a_right = v.heading - v.sensor_offset_angle;
    return {{v.x + v.sensor_distance * std::cos(a_left),
             v.y + v.sensor_distance * std::sin(a_left)},
            {v.x + v.sensor_distance * std::cos(a_right),
             v.y + v.sensor_distance * std::sin(a_right)}};
}

/// Intensity sum_k power_k / (1 + d_k^2) at a point, clamped to [0, 1].
inline double intensity_at(const std::vector<LightSource> &lights, Point p) {
    double raw = 0.0;
    for (const auto &l : lights) {
        const double dx = p.x - l.x;
        const double dy = p.y - l.y;
        raw += l.power / (1.0 + dx * dx + dy * dy);
    }
    return std::clamp(raw, 0.0, 1.0);
}

inline SensorReading sense(const World &world, const Vehicle &v) {
    const auto [left, right] = sensor_positions(v);
    return {intensity_at(world.lights, left), intensity_at(world.lights, right)};
}

/// Z = diag(1,1,-1,-1) reads the left sensor, Y = diag(1,-1,1,-1) the right.
inline LogicalObservable isometric_z() {
    return to_isometric(dictator(Alphabet::boolean(), 2, 0));
}
inline LogicalObservable isometric_y() {
    return to_isometric(dictator(Alphabet::boolean(), 2, 1));
}

/// Motor observables (ML, MR) for each archetype.
inline ActuatorPair actuator_observables(Archetype a) {
    const auto z = isometric_z();
    const auto y = isometric_y();
    switch (a) {
    case Archetype::Fear: return {z.negated(), y.negated()};
    case Archetype::Aggress: return {y.negated(), z.negated()};
    case Archetype::Love: return {z, y};
    case Archetype::Explore: return {y, z};
    }
    throw DomainError("unknown archetype");
}

inline ActuatorPair motor_observables(const Vehicle &v) {
    return v.motors ? v.motors->observables : actuator_observables(v.archetype);
}

/// Compiles wheel-inhibition formulas over L and R into motor observables.
inline MotorFormulas compile_motor_formulas(const std::string &left,
                                            const std::string &right) {
    static const std::vector<std::string> kSensorVars{"L", "R"};
    auto build = [](const std::string &text) {
        const auto ast = formula::parse(text);
        const auto f = formula::compile(ast, 2, kSensorVars);
        if (!f.is_projective()) {
            throw DomainError("motor formula '" + text + "' is not projective");
        }
        return to_isometric(f);
    };
    return {left, right, {build(left), build(right)}};
}

/// Wheel speed v_max (lambda + 1) / 2 for an eigenvalue or mean in [-1, 1].
inline double eigenvalue_to_speed(double lambda, double v_max) {
    if (std::abs(lambda) > 1.0 + 1e-9) {
        throw DomainError("eigenvalue " + std::to_string(lambda) + " outside [-1, 1]");
    }
    return std::clamp(v_max * (lambda + 1.0) / 2.0, 0.0, v_max);
}

/// Thresholded sensors select the basis state |left,right>.
inline WheelSpeeds controller_crisp(const SensorReading &s, const Vehicle &v) {
    const std::size_t l = s.left >= v.crisp_threshold ? 1 : 0;
    const std::size_t r = s.right >= v.crisp_threshold ? 1 : 0;
    const std::size_t index = 2 * l + r;
    const auto m = motor_observables(v);
    return {eigenvalue_to_speed(m.left.eigenvalue(index), v.v_max),
            eigenvalue_to_speed(m.right.eigenvalue(index), v.v_max)};
}

/// Born mean value of each motor observable on fuzzify(left) x fuzzify(right).
inline WheelSpeeds controller_fuzzy(const SensorReading &s, const Vehicle &v) {
    const std::array<QuantumState, 2> inputs{fuzzify(s.left), fuzzify(s.right)};
    const auto m = motor_observables(v);
    return {eigenvalue_to_speed(graded_value(inputs, m.left), v.v_max),
            eigenvalue_to_speed(graded_value(inputs, m.right), v.v_max)};
}

/// Intensity -> {0: no light, 1: weak-level light, 2: high-level light}.
inline std::size_t quantize3(double intensity, const std::array<double, 2> &thresholds) {
    if (intensity >= thresholds[1]) return 2;
    if (intensity >= thresholds[0]) return 1;
    return 0;
}

/// Both wheels run at Min/Max level / 2 * v_max; with steering enabled the
/// level difference of the dictators U, V adds +/-(u - v)/2 * v_max/2,
/// toward the brighter side for love/aggress and away for fear/explore.
inline WheelSpeeds controller_trivalued(const SensorReading &s, const Vehicle &v,
                                        TriConnective connective,
                                        bool steering_offset = true) {
    static const LogicalObservable kMin = min3();
    static const LogicalObservable kMax = max3();
    static const DictatorPair kUV = dictators_3();
    const std::size_t index =
        3 * quantize3(s.left, v.tri_thresholds) + quantize3(s.right, v.tri_thresholds);
    const double level = (connective == TriConnective::Min ? kMin : kMax).eigenvalue(index);
    const double base = level / 2.0 * v.v_max;
    double offset = 0.0;
    if (steering_offset) {
        const double diff = kUV.u.eigenvalue(index) - kUV.v.eigenvalue(index);
        offset = diff / 2.0 * v.v_max / 2.0;
        if (!approaches_light(v.archetype)) {
            offset = -offset;
        }
    }
    return {std::clamp(base - offset, 0.0, v.v_max),
            std::clamp(base + offset, 0.0, v.v_max)};
}

inline WheelSpeeds control(const World &world, const Vehicle &v,
                           const SensorReading &s) {
    switch (v.mode) {
    case Mode::Crisp: return controller_crisp(s, v);
    case Mode::Fuzzy: return controller_fuzzy(s, v);
    case Mode::Trivalued:
        return controller_trivalued(s, v, v.tri_connective, world.tri_steering_offset);
    }
    throw DomainError("unknown controller mode");
}

/// Default decision rules over the sensor propositions L and R. They are the
/// four rank-1 interpretations, so their memberships sum to one; turning
/// toward or away from the lit side depends on the wiring.
inline std::vector<DecisionRule> default_decision_rules(Archetype a) {
    static const std::vector<std::string> kSensorVars{"L", "R"};
    const bool toward = approaches_light(a);
    const std::array<std::pair<std::string, std::string>, 4> rules{{
        {"forwards", "!L & !R"},
        {"left", toward ? "!(L -> R)" : "!(R -> L)"},
        {"right", toward ? "!(R -> L)" : "!(L -> R)"},
        {"backwards", "L & R"},
    }};
    std::vector<DecisionRule> out;
    for (const auto &[name, text] : rules) {
        out.push_back({name, text, formula::compile(formula::parse(text), 2, kSensorVars)});
    }
    return out;
}

inline DecisionRule make_decision_rule(const std::string &name, const std::string &text) {
    static const std::vector<std::string> kSensorVars{"L", "R"};
    auto f = formula::compile(formula::parse(text), 2, kSensorVars);
    if (!f.is_projective()) {
        throw DomainError("decision formula '" + text + "' is not projective");
    }
    return {name, text, std::move(f)};
}

/// Highest-membership decision for the current reading.
inline std::string current_decision(const World &world, const Vehicle &v,
                                    const SensorReading &s) {
    const auto rules =
        world.decision_rules.empty() ? default_decision_rules(v.archetype) : world.decision_rules;
    const std::array<QuantumState, 2> inputs{fuzzify(s.left), fuzzify(s.right)};
    std::vector<ScoredDecision> scored;
    scored.reserve(rules.size());
    for (const auto &r : rules) {
        scored.push_back({r.name, membership(inputs, r.observable).value()});
    }
    return decide(scored);
}

/// Differential-drive explicit Euler update, clamped to the bounds.
inline Vehicle integrate(Vehicle v, const WheelSpeeds &w, double dt, const Bounds &b) {
    const double speed = (w.left + w.right) / 2.0;
    const double omega = (w.right - w.left) / v.wheel_base;
    v.x = std::clamp(v.x + speed * std::cos(v.heading) * dt, b.xmin, b.xmax);
    v.y = std::clamp(v.y + speed * std::sin(v.heading) * dt, b.ymin, b.ymax);
    v.heading += omega * dt;
    return v;
}

struct VehicleStep {
    SensorReading reading;
    WheelSpeeds speeds;
};

/// Sensor reading and wheel command of every vehicle in the current world.
inline std::vector<VehicleStep> evaluate(const World &world) {
    std::vector<VehicleStep> out;
    out.reserve(world.vehicles.size());
    for (const auto &v : world.vehicles) {
        const auto s = sense(world, v);
        out.push_back({s, control(world, v, s)});
    }
    return out;
}

inline World step(const World &world, double dt,
                  std::vector<VehicleStep> *commands = nullptr) {
    if (!(dt > 0.0)) {
        throw DomainError("time step must be positive");
    }
    auto cmds = evaluate(world);
    World next = world;
    for (std::size_t i = 0; i < next.vehicles.size(); ++i) {
        next.vehicles[i] = integrate(next.vehicles[i], cmds[i].speeds, dt, world.bounds);
    }
    next.time = world.time + dt;
    if (commands) {
        *commands = std::move(cmds);
    }
    return next;
}

struct TrajectoryRecord {
    double t;
    std::size_t vehicle_id;
    double x;
    double y;
    double heading;
    double vL;
    double vR;
    double muL;
    double muR;
};

using Trajectory = std::vector<TrajectoryRecord>;

/// Advances `steps` times; each record holds the post-step pose with the
/// reading and wheel speeds that produced it.
inline Trajectory run(World world, double dt, std::size_t steps, World *final_world = nullptr) {
    if (!(dt > 0.0)) {
        throw DomainError("time step must be positive");
    }
    Trajectory out;
    out.reserve(steps * world.vehicles.size());
    std::vector<VehicleStep> cmds;
    for (std::size_t k = 0; k < steps; ++k) {
        world = step(world, dt, &cmds);
        for (std::size_t i = 0; i < world.vehicles.size(); ++i) {
            const auto &v = world.vehicles[i];
            out.push_back({world.time, i, v.x, v.y, v.heading, cmds[i].speeds.left,
                           cmds[i].speeds.right, cmds[i].reading.left,
                           cmds[i].reading.right});
        }
    }
    if (final_world) {
        *final_world = std::move(world);
    }
    return out;
}

inline constexpr std::string_view kTrajectoryHeader = "t,vehicle_id,x,y,heading,vL,vR,muL,muR";

/// CSV with 9 significant digits and LF line endings.
inline void write_csv(std::ostream &os, const Trajectory &trajectory) {
    os << kTrajectoryHeader << '\n';
    char buf[512];
    for (const auto &r : trajectory) {
        std::snprintf(buf, sizeof buf, "%.9g,%zu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.t,
                      r.vehicle_id, r.x, r.y, r.heading, r.vL, r.vR, r.muL, r.muR);
        os << buf;
    }
}

} // namespace eigenlogic::sim
