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

/// @file config.hpp
/// JSON simulation configuration (schema 1). Unknown fields are rejected and
/// every error names the offending field path, e.g. "vehicles[0].v_max".

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "eigenlogic/error.hpp"
#include "eigenlogic/sim.hpp"

namespace eigenlogic::config {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class ConfigError : public Error {
  public:
    ConfigError(std::string path, const std::string &what)
        : Error((path.empty() ? std::string("config") : path) + ": " + what),
          path_(std::move(path)) {}
    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

struct SimConfig {
    sim::World world;
    double dt = 0.02;
    std::uint64_t steps = 0;
};

namespace detail {

/// A JSON object together with its path, for error reporting.
class Field {
  public:
    Field(const json &j, std::string path) : j_(j), path_(std::move(path)) {}

    [[nodiscard]] const json &raw() const noexcept { return j_; }
    [[nodiscard]] const std::string &path() const noexcept { return path_; }

    [[noreturn]] void fail(const std::string &what) const { throw ConfigError(path_, what); }

    void require_object(std::initializer_list<std::string_view> allowed) const {
        if (!j_.is_object()) {
            fail("expected an object");
        }
        for (const auto &[key, _] : j_.items()) {
            bool known = false;
            for (auto a : allowed) {
                known = known || a == key;
            }
            if (!known) {
                throw ConfigError(child_path(key), "unknown field");
            }
        }
    }

    [[nodiscard]] bool has(std::string_view key) const { return j_.contains(key); }

    [[nodiscard]] Field at(std::string_view key) const {
        if (!j_.contains(key)) {
            throw ConfigError(child_path(key), "missing required field");
        }
        return {j_.at(std::string(key)), child_path(key)};
    }
    [[nodiscard]] Field at(std::size_t i) const {
        return {j_.at(i), path_ + "[" + std::to_string(i) + "]"};
    }

    [[nodiscard]] double number() const {
        if (!j_.is_number()) {
            fail("expected a number");
        }
        const double v = j_.get<double>();
        if (!std::isfinite(v)) {
            fail("expected a finite number");
        }
        return v;
    }
    [[nodiscard]] std::uint64_t count() const {
        if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0)) {
            fail("expected a non-negative integer");
        }
        return j_.get<std::uint64_t>();
    }
    [[nodiscard]] int integer() const {
        if (!j_.is_number_integer()) {
            fail("expected an integer");
        }
        return j_.get<int>();
    }
    [[nodiscard]] bool boolean() const {
        if (!j_.is_boolean()) {
            fail("expected true or false");
        }
        return j_.get<bool>();
    }
    [[nodiscard]] std::string string() const {
        if (!j_.is_string()) {
            fail("expected a string");
        }
        return j_.get<std::string>();
    }
    [[nodiscard]] std::size_t array_size() const {
        if (!j_.is_array()) {
            fail("expected an array");
        }
        return j_.size();
    }

    double number_or(std::string_view key, double fallback) const {
        return has(key) ? at(key).number() : fallback;
    }

  private:
    [[nodiscard]] std::string child_path(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const json &j_;
    std::string path_;
};

inline sim::LightSource parse_light(const Field &f, int default_id) {
    f.require_object({"id", "x", "y", "power"});
    sim::LightSource l;
    l.id = f.has("id") ? f.at("id").integer() : default_id;
    l.x = f.at("x").number();
    l.y = f.at("y").number();
    l.power = f.number_or("power", 1.0);
    if (l.power < 0.0) {
        f.at("power").fail("must be >= 0");
    }
    return l;
}

inline sim::Vehicle parse_vehicle(const Field &f, const sim::Bounds &bounds) {
    f.require_object({"x", "y", "heading", "wheel_base", "v_max", "sensor_offset_angle",
                      "sensor_distance", "archetype", "mode", "crisp_threshold",
                      "tri_thresholds", "tri_connective", "motors"});
    sim::Vehicle v;
    v.x = f.at("x").number();
    v.y = f.at("y").number();
    if (v.x < bounds.xmin || v.x > bounds.xmax || v.y < bounds.ymin || v.y > bounds.ymax) {
        f.fail("vehicle starts outside the world bounds");
    }
    v.heading = f.number_or("heading", v.heading);
    v.wheel_base = f.number_or("wheel_base", v.wheel_base);
    if (!(v.wheel_base > 0.0)) {
        f.at("wheel_base").fail("must be > 0");
    }
    v.v_max = f.number_or("v_max", v.v_max);
    if (!(v.v_max > 0.0)) {
        f.at("v_max").fail("must be > 0");
    }
    v.sensor_offset_angle = f.number_or("sensor_offset_angle", v.sensor_offset_angle);
    v.sensor_distance = f.number_or("sensor_distance", v.sensor_distance);
    if (v.sensor_distance < 0.0) {
        f.at("sensor_distance").fail("must be >= 0");
    }
    {
        const auto a = f.at("archetype");
        auto parsed = sim::parse_archetype(a.string());
        if (!parsed) {
            a.fail("expected one of fear, aggress, love, explore");
        }
        v.archetype = *parsed;
    }
    {
        const auto m = f.at("mode");
        auto parsed = sim::parse_mode(m.string());
        if (!parsed) {
            m.fail("expected one of crisp, fuzzy, trivalued");
        }
        v.mode = *parsed;
    }
    v.crisp_threshold = f.number_or("crisp_threshold", v.crisp_threshold);
    if (v.crisp_threshold < 0.0 || v.crisp_threshold > 1.0) {
        f.at("crisp_threshold").fail("must lie in [0, 1]");
    }
    if (f.has("tri_thresholds")) {
        const auto t = f.at("tri_thresholds");
        if (t.array_size() != 2) {
            t.fail("expected two thresholds [t1, t2]");
        }
        v.tri_thresholds = {t.at(std::size_t{0}).number(), t.at(std::size_t{1}).number()};
    }
    if (!(0.0 < v.tri_thresholds[0] && v.tri_thresholds[0] < v.tri_thresholds[1] &&
          v.tri_thresholds[1] <= 1.0)) {
        f.at("tri_thresholds").fail("must satisfy 0 < t1 < t2 <= 1");
    }
    if (f.has("tri_connective")) {
        const auto c = f.at("tri_connective");
        auto parsed = sim::parse_tri_connective(c.string());
        if (!parsed) {
            c.fail("expected min or max");
        }
        v.tri_connective = *parsed;
    }
    if (f.has("motors")) {
        const auto m = f.at("motors");
        m.require_object({"left", "right"});
        try {
            v.motors = sim::compile_motor_formulas(m.at("left").string(),
                                                   m.at("right").string());
        } catch (const ConfigError &) {
            throw;
        } catch (const Error &e) {
            m.fail(e.what());
        }
    }
    return v;
}

} // namespace detail

inline SimConfig from_json(const json &doc) {
    const detail::Field root(doc, "");
    root.require_object(
        {"schema", "dt", "steps", "tri_steering_offset", "decision_rules", "world", "vehicles"});
    if (root.at("schema").integer() != kSchemaVersion) {
        root.at("schema").fail("unsupported schema version (expected 1)");
    }
    SimConfig cfg;
    cfg.dt = root.number_or("dt", cfg.dt);
    if (!(cfg.dt > 0.0)) {
        root.at("dt").fail("must be > 0");
    }
    cfg.steps = root.at("steps").count();
    if (root.has("tri_steering_offset")) {
        cfg.world.tri_steering_offset = root.at("tri_steering_offset").boolean();
    }
    if (root.has("decision_rules")) {
        const auto rules = root.at("decision_rules");
        const auto n = rules.array_size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = rules.at(i);
            r.require_object({"name", "formula"});
            try {
                cfg.world.decision_rules.push_back(
                    sim::make_decision_rule(r.at("name").string(), r.at("formula").string()));
            } catch (const ConfigError &) {
                throw;
            } catch (const Error &e) {
                r.at("formula").fail(e.what());
            }
        }
    }

    const auto world = root.at("world");
    world.require_object({"bounds", "lights"});
    if (world.has("bounds")) {
        const auto b = world.at("bounds");
        b.require_object({"xmin", "ymin", "xmax", "ymax"});
        cfg.world.bounds = {b.at("xmin").number(), b.at("ymin").number(),
                            b.at("xmax").number(), b.at("ymax").number()};
        if (!(cfg.world.bounds.xmin < cfg.world.bounds.xmax &&
              cfg.world.bounds.ymin < cfg.world.bounds.ymax)) {
            b.fail("requires xmin < xmax and ymin < ymax");
        }
    }
    if (world.has("lights")) {
        const auto lights = world.at("lights");
        const auto n = lights.array_size();
        std::set<int> ids;
        for (std::size_t i = 0; i < n; ++i) {
            auto l = detail::parse_light(lights.at(i), static_cast<int>(i));
            if (!ids.insert(l.id).second) {
                lights.at(i).fail("duplicate light id " + std::to_string(l.id));
            }
            cfg.world.lights.push_back(l);
        }
    }

    const auto vehicles = root.at("vehicles");
    const auto n = vehicles.array_size();
    for (std::size_t i = 0; i < n; ++i) {
        cfg.world.vehicles.push_back(detail::parse_vehicle(vehicles.at(i), cfg.world.bounds));
    }
    return cfg;
}

inline SimConfig parse(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
}

inline SimConfig load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace eigenlogic::config
