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

// In-process WebSocket server plus a scripted blocking client with timeouts.

#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eigenlogic/server.hpp"

namespace testing_support {

using namespace eigenlogic;
using namespace eigenlogic::session;
using namespace std::chrono_literals;
namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

/// Server on an ephemeral port, driven by its own io thread.
struct Harness {
    asio::io_context io;
    Session session;
    server::Server srv;
    std::thread thread;

    explicit Harness(config::SimConfig cfg, double rate_hz = 100.0)
        : session(std::move(cfg)), srv(io, session, 0, rate_hz) {
        srv.start();
        thread = std::thread([this] { io.run(); });
    }
    ~Harness() {
        asio::post(io, [this] { srv.stop(); });
        thread.join();
    }
};

/// Scripted client with bounded waits.
class Client {
  public:
    explicit Client(std::uint16_t port) : ws_(io_) {
        tcp::resolver resolver(io_);
        beast::get_lowest_layer(ws_).connect(resolver.resolve("127.0.0.1", std::to_string(port)));
        ws_.handshake("127.0.0.1", "/");
        ws_.text(true);
    }

    void send(const std::string &frame) { ws_.write(asio::buffer(frame)); }
    void send(Kind k, std::uint64_t seq) { send(serialize({k, seq, Empty{}})); }

    std::optional<std::string> read(std::chrono::milliseconds timeout = 3000ms) {
        std::optional<std::string> result;
        beast::flat_buffer buffer;
        bool done = false;
        ws_.async_read(buffer, [&](beast::error_code ec, std::size_t) {
            done = true;
            if (!ec) result = beast::buffers_to_string(buffer.data());
        });
        io_.restart();
        io_.run_for(timeout);
        if (!done) {
            beast::get_lowest_layer(ws_).cancel();
            io_.restart();
            io_.run();
        }
        return result;
    }

    /// Reads until a frame satisfying pred arrives; returns everything read,
    /// or nothing on timeout.
    template <class Pred> std::optional<std::vector<Message>> read_until(Pred pred) {
        std::vector<Message> seen;
        for (int i = 0; i < 1000; ++i) {
            auto frame = read();
            if (!frame) return std::nullopt;
            seen.push_back(parse_message(*frame));
            if (pred(seen.back())) return seen;
        }
        return std::nullopt;
    }

  private:
    asio::io_context io_;
    websocket::stream<beast::tcp_stream> ws_;
};

} // namespace testing_support
