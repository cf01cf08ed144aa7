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

/// @file session.hpp
/// Live-session protocol and the single-owner session loop behind `serve`.
///
/// Every frame is one JSON object {"kind", "seq", "payload"}. Clients send
/// commands; the server answers each with an ack (same seq) or an error and
/// broadcasts snapshots, numbered by their own monotonically increasing seq.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "eigenlogic/config.hpp"
#include "eigenlogic/error.hpp"
#include "eigenlogic/sim.hpp"

namespace eigenlogic::session {

using nlohmann::json;

class ProtocolError : public Error {
  public:
    using Error::Error;
};

enum class Kind {
    // client -> server
    AddLight,
    MoveLight,
    RemoveLight,
    SetArchetype,
    SetMode,
    SetFormula,
    Pause,
    Resume,
    StepOnce,
    Reset,
    // server -> client
    Snapshot,
    Error,
    Ack,
};

inline constexpr std::pair<Kind, std::string_view> kKindNames[] = {
    {Kind::AddLight, "add_light"},   {Kind::MoveLight, "move_light"},
    {Kind::RemoveLight, "remove_light"}, {Kind::SetArchetype, "set_archetype"},
    {Kind::SetMode, "set_mode"},     {Kind::SetFormula, "set_formula"},
    {Kind::Pause, "pause"},          {Kind::Resume, "resume"},
    {Kind::StepOnce, "step_once"},   {Kind::Reset, "reset"},
    {Kind::Snapshot, "snapshot"},    {Kind::Error, "error"},
    {Kind::Ack, "ack"},
};

inline std::string_view to_string(Kind k) {
    for (const auto &[kind, name] : kKindNames) {
        if (kind == k) return name;
    }
    return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
    for (const auto &[kind, name] : kKindNames) {
        if (name == s) return kind;
    }
    return std::nullopt;
}

inline bool is_command(Kind k) { return k < Kind::Snapshot; }

struct AddLight {
    double x = 0.0;
    double y = 0.0;
    double power = 1.0;
    std::optional<int> id;
    bool operator==(const AddLight &) const = default;
};
struct MoveLight {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    bool operator==(const MoveLight &) const = default;
};
struct RemoveLight {
    int id = 0;
    bool operator==(const RemoveLight &) const = default;
};
struct SetArchetype {
    int id = 0;
    sim::Archetype archetype = sim::Archetype::Love;
    bool operator==(const SetArchetype &) const = default;
};
struct SetMode {
    int id = 0;
    sim::Mode mode = sim::Mode::Fuzzy;
    bool operator==(const SetMode &) const = default;
};
/// Empty formulas restore the archetype's wiring.
struct SetFormula {
    int id = 0;
    std::string left;
    std::string right;
    bool operator==(const SetFormula &) const = default;
};
/// pause, resume, step_once, reset.
struct Empty {
    bool operator==(const Empty &) const = default;
};

struct VehicleView {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
    double vL = 0.0;
    double vR = 0.0;
    double muL = 0.0;
    double muR = 0.0;
    std::string archetype;
    std::string mode;
    std::string decision;
    bool operator==(const VehicleView &) const = default;
};
struct LightView {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double power = 0.0;
    bool operator==(const LightView &) const = default;
};
struct Snapshot {
    double time = 0.0;
    std::vector<VehicleView> vehicles;
    std::vector<LightView> lights;
    bool operator==(const Snapshot &) const = default;
};
struct ErrorInfo {
    std::string message;
    bool operator==(const ErrorInfo &) const = default;
};
struct Ack {
    std::string command;
    std::optional<int> id; ///< light id assigned by add_light
    bool operator==(const Ack &) const = default;
};

using Payload = std::variant<AddLight, MoveLight, RemoveLight, SetArchetype, SetMode,
                             SetFormula, Empty, Snapshot, ErrorInfo, Ack>;

struct Message {
    Kind kind = Kind::Pause;
    std::uint64_t seq = 0;
    Payload payload = Empty{};
    bool operator==(const Message &) const = default;
};

namespace detail {

template <class T> T get(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw ProtocolError(std::string("payload missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw ProtocolError(std::string("payload field '") + key + "' has the wrong type");
    }
}

inline double number(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ProtocolError(std::string("payload field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

inline int integer(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ProtocolError(std::string("payload field '") + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

inline json vehicle_to_json(const VehicleView &v) {
    return {{"id", v.id},           {"x", v.x},
            {"y", v.y},             {"heading", v.heading},
            {"vL", v.vL},           {"vR", v.vR},
            {"muL", v.muL},         {"muR", v.muR},
            {"archetype", v.archetype}, {"mode", v.mode},
            {"decision", v.decision}};
}

inline VehicleView vehicle_from_json(const json &j) {
    return {integer(j, "id"),
            number(j, "x"),
            number(j, "y"),
            number(j, "heading"),
            number(j, "vL"),
            number(j, "vR"),
            number(j, "muL"),
            number(j, "muR"),
            get<std::string>(j, "archetype"),
            get<std::string>(j, "mode"),
            get<std::string>(j, "decision")};
}

struct PayloadToJson {
    json operator()(const AddLight &p) const {
        json j{{"x", p.x}, {"y", p.y}, {"power", p.power}};
        if (p.id) j["id"] = *p.id;
        return j;
    }
    json operator()(const MoveLight &p) const { return {{"id", p.id}, {"x", p.x}, {"y", p.y}}; }
    json operator()(const RemoveLight &p) const { return {{"id", p.id}}; }
    json operator()(const SetArchetype &p) const {
        return {{"id", p.id}, {"archetype", sim::to_string(p.archetype)}};
    }
    json operator()(const SetMode &p) const {
        return {{"id", p.id}, {"mode", sim::to_string(p.mode)}};
    }
    json operator()(const SetFormula &p) const {
        return {{"id", p.id}, {"left", p.left}, {"right", p.right}};
    }
    json operator()(const Empty &) const { return json::object(); }
    json operator()(const Snapshot &p) const {
        json vehicles = json::array();
        for (const auto &v : p.vehicles) vehicles.push_back(vehicle_to_json(v));
        json lights = json::array();
        for (const auto &l : p.lights) {
            lights.push_back({{"id", l.id}, {"x", l.x}, {"y", l.y}, {"power", l.power}});
        }
        return {{"time", p.time}, {"vehicles", vehicles}, {"lights", lights}};
    }
    json operator()(const ErrorInfo &p) const { return {{"message", p.message}}; }
    json operator()(const Ack &p) const {
        json j{{"command", p.command}};
        if (p.id) j["id"] = *p.id;
        return j;
    }
};

inline Payload payload_from_json(Kind kind, const json &j) {
    if (!j.is_object()) {
        throw ProtocolError("payload must be an object");
    }
    switch (kind) {
    case Kind::AddLight: {
        AddLight p{number(j, "x"), number(j, "y"), 1.0, std::nullopt};
        if (j.contains("power")) p.power = number(j, "power");
        if (j.contains("id")) p.id = integer(j, "id");
        return p;
    }
    case Kind::MoveLight: return MoveLight{integer(j, "id"), number(j, "x"), number(j, "y")};
    case Kind::RemoveLight: return RemoveLight{integer(j, "id")};
    case Kind::SetArchetype: {
        auto a = sim::parse_archetype(get<std::string>(j, "archetype"));
        if (!a) throw ProtocolError("unknown archetype");
        return SetArchetype{integer(j, "id"), *a};
    }
    case Kind::SetMode: {
        auto m = sim::parse_mode(get<std::string>(j, "mode"));
        if (!m) throw ProtocolError("unknown mode");
        return SetMode{integer(j, "id"), *m};
    }
    case Kind::SetFormula:
        return SetFormula{integer(j, "id"), get<std::string>(j, "left"),
                          get<std::string>(j, "right")};
    case Kind::Pause:
    case Kind::Resume:
    case Kind::StepOnce:
    case Kind::Reset: return Empty{};
    case Kind::Snapshot: {
        Snapshot s;
        s.time = number(j, "time");
        for (const auto &v : get<json>(j, "vehicles")) s.vehicles.push_back(vehicle_from_json(v));
        for (const auto &l : get<json>(j, "lights")) {
            s.lights.push_back(
                {integer(l, "id"), number(l, "x"), number(l, "y"), number(l, "power")});
        }
        return s;
    }
    case Kind::Error: return ErrorInfo{get<std::string>(j, "message")};
    case Kind::Ack: {
        Ack a{get<std::string>(j, "command"), std::nullopt};
        if (j.contains("id")) a.id = integer(j, "id");
        return a;
    }
    }
    throw ProtocolError("unknown kind");
}

} // namespace detail

inline json to_json(const Message &m) {
    return {{"kind", to_string(m.kind)},
            {"seq", m.seq},
            {"payload", std::visit(detail::PayloadToJson{}, m.payload)}};
}

/// One JSON document per frame.
inline std::string serialize(const Message &m) { return to_json(m).dump(); }

inline Message parse_message(std::string_view frame) {
    json j;
    try {
        j = json::parse(frame);
    } catch (const json::parse_error &) {
        throw ProtocolError("frame is not valid JSON");
    }
    if (!j.is_object()) {
        throw ProtocolError("frame must be a JSON object");
    }
    const auto kind = parse_kind(detail::get<std::string>(j, "kind"));
    if (!kind) {
        throw ProtocolError("unknown kind '" + j.at("kind").get<std::string>() + "'");
    }
    if (!j.contains("seq") || !j.at("seq").is_number_unsigned()) {
        throw ProtocolError("seq must be a non-negative integer");
    }
    Message m;
    m.kind = *kind;
    m.seq = j.at("seq").get<std::uint64_t>();
    m.payload = detail::payload_from_json(*kind, j.contains("payload") ? j.at("payload")
                                                                       : json::object());
    return m;
}

using ClientId = std::uint64_t;
/// Outgoing frame target meaning "every connected client".
inline constexpr ClientId kBroadcast = 0;

struct Outgoing {
    ClientId target;
    std::string frame;
};

/// Snapshot of a world: poses, the wheel command and sensor memberships each
/// vehicle would apply next, and its current decision.
inline Snapshot make_snapshot(const sim::World &world) {
    Snapshot s;
    s.time = world.time;
    const auto cmds = sim::evaluate(world);
    for (std::size_t i = 0; i < world.vehicles.size(); ++i) {
        const auto &v = world.vehicles[i];
        s.vehicles.push_back({static_cast<int>(i), v.x, v.y, v.heading, cmds[i].speeds.left,
                              cmds[i].speeds.right, cmds[i].reading.left,
                              cmds[i].reading.right, std::string(sim::to_string(v.archetype)),
                              std::string(sim::to_string(v.mode)),
                              sim::current_decision(world, v, cmds[i].reading)});
    }
    for (const auto &l : world.lights) {
        s.lights.push_back({l.id, l.x, l.y, l.power});
    }
    return s;
}

/// Owns one simulated world. Connection handlers may call submit() from any
/// thread; everything else belongs to the single loop owner, which applies
/// queued commands only between steps.
class Session {
  public:
    explicit Session(config::SimConfig cfg)
        : initial_(std::move(cfg)), world_(initial_.world) {
        publish_snapshot();
    }

    /// Queues a raw frame from a client, preserving arrival order.
    void submit(ClientId from, std::string frame) {
        std::lock_guard lock(queue_mutex_);
        queue_.push_back({from, std::move(frame)});
    }

    /// Applies all queued commands in arrival order.
    void pump() {
        std::deque<Outgoing> pending;
        {
            std::lock_guard lock(queue_mutex_);
            pending.swap(queue_);
        }
        for (auto &[from, frame] : pending) {
            apply(from, frame);
        }
    }

    /// One cadence tick: apply commands, then advance unless paused.
    void tick() {
        pump();
        if (!paused_) {
            advance();
        }
    }

    /// Registers a client and returns the latest snapshot frame for it.
    const std::string &connect(ClientId id) {
        last_client_seq_.emplace(id, std::nullopt);
        return latest_snapshot_;
    }
    void disconnect(ClientId id) { last_client_seq_.erase(id); }

    /// Frames produced since the last call, in order.
    std::vector<Outgoing> take_outbox() { return std::exchange(outbox_, {}); }

    [[nodiscard]] const sim::World &world() const noexcept { return world_; }
    [[nodiscard]] bool paused() const noexcept { return paused_; }
    [[nodiscard]] std::uint64_t snapshot_seq() const noexcept { return snapshot_seq_; }
    [[nodiscard]] const std::string &latest_snapshot() const noexcept { return latest_snapshot_; }
    [[nodiscard]] double dt() const noexcept { return initial_.dt; }

  private:
    void advance() {
        world_ = sim::step(world_, initial_.dt);
        publish_snapshot();
    }

    void publish_snapshot() {
        ++snapshot_seq_;
        latest_snapshot_ = serialize({Kind::Snapshot, snapshot_seq_, make_snapshot(world_)});
        outbox_.push_back({kBroadcast, latest_snapshot_});
    }

    void reply(ClientId to, Message m) { outbox_.push_back({to, serialize(m)}); }

    void apply(ClientId from, const std::string &frame) {
        Message msg;
        try {
            msg = parse_message(frame);
        } catch (const ProtocolError &e) {
            reply(from, {Kind::Error, 0, ErrorInfo{e.what()}});
            return;
        }
        if (!is_command(msg.kind)) {
            reply(from, {Kind::Error, msg.seq,
                         ErrorInfo{"'" + std::string(to_string(msg.kind)) +
                                   "' is not a client command"}});
            return;
        }
        auto &last = last_client_seq_[from];
        if (last && msg.seq <= *last) {
            reply(from, {Kind::Error, msg.seq,
                         ErrorInfo{"sequence number " + std::to_string(msg.seq) +
                                   " is not greater than " + std::to_string(*last)}});
            return;
        }
        last = msg.seq;

        Ack ack{std::string(to_string(msg.kind)), std::nullopt};
        Effect effect = Effect::None;
        try {
            effect = execute(msg, ack);
        } catch (const Error &e) {
            reply(from, {Kind::Error, msg.seq, ErrorInfo{e.what()}});
            return;
        }
        reply(from, {Kind::Ack, msg.seq, ack});
        if (effect == Effect::Step) {
            advance();
        } else if (effect == Effect::Republish) {
            publish_snapshot();
        }
    }

    sim::Vehicle &vehicle(int id) {
        if (id < 0 || static_cast<std::size_t>(id) >= world_.vehicles.size()) {
            throw ProtocolError("no vehicle with id " + std::to_string(id));
        }
        return world_.vehicles[static_cast<std::size_t>(id)];
    }

    std::vector<sim::LightSource>::iterator light(int id) {
        auto it = std::find_if(world_.lights.begin(), world_.lights.end(),
                               [id](const auto &l) { return l.id == id; });
        if (it == world_.lights.end()) {
            throw ProtocolError("no light with id " + std::to_string(id));
        }
        return it;
    }

    enum class Effect { None, Step, Republish };

    /// World edits are visible at the next step, or immediately while paused.
    [[nodiscard]] Effect edited() const { return paused_ ? Effect::Republish : Effect::None; }

    /// Mutates the world; the returned effect runs after the ack is queued.
    Effect execute(const Message &msg, Ack &ack) {
        switch (msg.kind) {
        case Kind::AddLight: {
            const auto &p = std::get<AddLight>(msg.payload);
            if (p.power < 0.0) throw ProtocolError("light power must be >= 0");
            int id = 0;
            for (const auto &l : world_.lights) id = std::max(id, l.id + 1);
            if (p.id) {
                if (std::any_of(world_.lights.begin(), world_.lights.end(),
                                [&](const auto &l) { return l.id == *p.id; })) {
                    throw ProtocolError("light id " + std::to_string(*p.id) + " already exists");
                }
                id = *p.id;
            }
            world_.lights.push_back({id, p.x, p.y, p.power});
            ack.id = id;
            return edited();
        }
        case Kind::MoveLight: {
            const auto &p = std::get<MoveLight>(msg.payload);
            auto it = light(p.id);
            it->x = p.x;
            it->y = p.y;
            return edited();
        }
        case Kind::RemoveLight:
            world_.lights.erase(light(std::get<RemoveLight>(msg.payload).id));
            return edited();
        case Kind::SetArchetype: {
            const auto &p = std::get<SetArchetype>(msg.payload);
            vehicle(p.id).archetype = p.archetype;
            return edited();
        }
        case Kind::SetMode: {
            const auto &p = std::get<SetMode>(msg.payload);
            vehicle(p.id).mode = p.mode;
            return edited();
        }
        case Kind::SetFormula: {
            const auto &p = std::get<SetFormula>(msg.payload);
            auto &v = vehicle(p.id);
            if (p.left.empty() && p.right.empty()) {
                v.motors.reset();
            } else {
                v.motors = sim::compile_motor_formulas(p.left, p.right);
            }
            return edited();
        }
        case Kind::Pause: paused_ = true; return Effect::None;
        case Kind::Resume: paused_ = false; return Effect::None;
        case Kind::StepOnce: return Effect::Step;
        case Kind::Reset:
            world_ = initial_.world;
            return Effect::Republish;
        default: throw ProtocolError("not a client command");
        }
    }

    config::SimConfig initial_;
    sim::World world_;
    bool paused_ = false;
    std::uint64_t snapshot_seq_ = 0;
    std::string latest_snapshot_;
    std::vector<Outgoing> outbox_;
    std::map<ClientId, std::optional<std::uint64_t>> last_client_seq_;

    std::mutex queue_mutex_;
    std::deque<Outgoing> queue_;
};

} // namespace eigenlogic::session
