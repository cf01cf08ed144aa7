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

/// @file commands.hpp
/// Implementations of the command-line subcommands, writing to streams so
/// they can be exercised without a process boundary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "eigenlogic/binary.hpp"
#include "eigenlogic/config.hpp"
#include "eigenlogic/formula.hpp"
#include "eigenlogic/fuzzy.hpp"
#include "eigenlogic/multivalued.hpp"
#include "eigenlogic/sim.hpp"

namespace eigenlogic::commands {

/// Resolves a connective name (AND, OR, ..., 4-bit key, min, max) or a
/// formula to an AST. Named binary connectives are two-valued only.
inline formula::FormulaAst resolve(const std::string &target, int m = 2) {
    std::string lower = target;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "min" || lower == "max") {
        return formula::parse(lower + "(A, B)");
    }
    if (auto bits = connective_bits(target)) {
        if (m != 2) {
            throw formula::EvalError("connective " + target + " is two-valued; use min or max");
        }
        // Sum of minterms keeps the two-variable order fixed even for
        // connectives that ignore an argument.
        std::vector<std::string> terms;
        for (std::size_t i = 0; i < 4; ++i) {
            if ((*bits)[i] == '1') {
                terms.push_back(std::string(i & 2 ? "A" : "!A") + " & " +
                                (i & 1 ? "B" : "!B"));
            }
        }
        std::string text = terms.empty() ? "A & !A" : "";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            text += (i ? " | " : "") + std::string("(") + terms[i] + ")";
        }
        auto ast = formula::parse(text);
        ast.variables = {"A", "B"};
        return ast;
    }
    return formula::parse(target);
}

inline std::string join(std::span<const double> values) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", values[i]);
        out += (i ? "," : "");
        out += buf;
    }
    return out;
}

/// Prints every assignment row and the observable diagonal.
inline void truth_table(std::ostream &os, const std::string &target, int m) {
    const auto ast = resolve(target, m);
    const auto f = formula::compile(ast, m, ast.variables);
    for (const auto &v : ast.variables) {
        os << v << ' ';
    }
    os << "| value\n";
    for (std::size_t i = 0; i < f.dim(); ++i) {
        for (auto x : basis_digits(i, f.m(), f.arity())) {
            os << x << ' ';
        }
        os << "| " << f.eigenvalue(i) << '\n';
    }
    os << "diagonal: " << join(f.op().diagonal()) << '\n';
}

/// Born membership of a Boolean formula with each variable fuzzified.
inline double membership(const std::string &text, std::span<const double> mus) {
    const auto ast = formula::parse(text);
    if (mus.size() != ast.variables.size()) {
        throw DomainError("formula has " + std::to_string(ast.variables.size()) +
                          " variables but " + std::to_string(mus.size()) +
                          " membership values were given");
    }
    std::vector<QuantumState> states;
    for (double mu : mus) {
        states.push_back(fuzzify(mu));
    }
    return eigenlogic::membership(states, formula::compile(ast, 2)).value();
}

/// Eigenvalue of the compiled observable on the basis state of `letters`,
/// checked against direct classical evaluation.
inline int eval(const std::string &text, std::span<const int> letters, int m) {
    const auto ast = formula::parse(text);
    const int classical = formula::eval_classical(ast, letters, m);
    const auto f = formula::compile(ast, m);
    std::vector<std::size_t> digits(letters.begin(), letters.end());
    const auto state = linop::QuantumState::basis(f.dim(), basis_index(digits, m));
    const double readout = linop::expectation(state, f.op());
    if (readout != static_cast<double>(classical)) {
        throw Error("observable readout disagrees with classical evaluation");
    }
    return classical;
}

inline std::string polynomial(const std::string &target, int m) {
    const auto ast = resolve(target, m);
    const auto f = formula::compile(ast, m, ast.variables);
    return interpolate_polynomial(f).to_string(ast.variables);
}

struct VehicleSummary {
    double x, y, heading;
    double final_vL, final_vR;
    double mean_speed;
    std::vector<double> min_light_distance;
    std::vector<double> final_light_distance;
};

inline std::vector<VehicleSummary> summarize(const sim::World &initial,
                                             const sim::Trajectory &traj) {
    std::vector<VehicleSummary> out;
    for (std::size_t i = 0; i < initial.vehicles.size(); ++i) {
        const auto &v0 = initial.vehicles[i];
        VehicleSummary s{v0.x, v0.y, v0.heading, 0.0, 0.0, 0.0, {}, {}};
        for (const auto &l : initial.lights) {
            s.min_light_distance.push_back(std::hypot(v0.x - l.x, v0.y - l.y));
        }
        std::size_t n = 0;
        for (const auto &r : traj) {
            if (r.vehicle_id != i) continue;
            s.x = r.x;
            s.y = r.y;
            s.heading = r.heading;
            s.final_vL = r.vL;
            s.final_vR = r.vR;
            s.mean_speed += (r.vL + r.vR) / 2.0;
            ++n;
            for (std::size_t k = 0; k < initial.lights.size(); ++k) {
                const auto &l = initial.lights[k];
                s.min_light_distance[k] =
                    std::min(s.min_light_distance[k], std::hypot(r.x - l.x, r.y - l.y));
            }
        }
        if (n) s.mean_speed /= static_cast<double>(n);
        for (const auto &l : initial.lights) {
            s.final_light_distance.push_back(std::hypot(s.x - l.x, s.y - l.y));
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Runs a configuration, writes the trajectory CSV to `csv` and a summary to
/// `report`.
inline void simulate(const config::SimConfig &cfg, std::ostream &csv, std::ostream &report) {
    const auto traj = sim::run(cfg.world, cfg.dt, cfg.steps);
    sim::write_csv(csv, traj);
    const auto summary = summarize(cfg.world, traj);
    char buf[256];
    std::snprintf(buf, sizeof buf, "steps %llu, dt %.9g s, simulated %.9g s\n",
                  static_cast<unsigned long long>(cfg.steps), cfg.dt,
                  cfg.dt * static_cast<double>(cfg.steps));
    report << buf;
    for (std::size_t i = 0; i < summary.size(); ++i) {
        const auto &s = summary[i];
        const auto &v = cfg.world.vehicles[i];
        std::snprintf(buf, sizeof buf,
                      "vehicle %zu (%s, %s): final pose x=%.6f y=%.6f heading=%.6f; "
                      "final wheels vL=%.6f vR=%.6f; mean speed %.6f m/s\n",
                      i, std::string(sim::to_string(v.archetype)).c_str(),
                      std::string(sim::to_string(v.mode)).c_str(), s.x, s.y, s.heading,
                      s.final_vL, s.final_vR, s.mean_speed);
        report << buf;
        for (std::size_t k = 0; k < s.min_light_distance.size(); ++k) {
            std::snprintf(buf, sizeof buf, "  light %d: min distance %.6f m, final distance %.6f m\n",
                          cfg.world.lights[k].id, s.min_light_distance[k],
                          s.final_light_distance[k]);
            report << buf;
        }
    }
}

} // namespace eigenlogic::commands
